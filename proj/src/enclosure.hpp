// Copyright 2026 The maxspec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Spectral enclosure of the dissipative Maxwell pencil in terms of scalar
// coefficient bounds, plus the constant-coefficient special case.

#pragma once

#include <vector>

#include "errors.hpp"

namespace maxspec {

struct MaterialBounds {
  double eps_min = 1.0, eps_max = 1.0;
  double mu_min = 1.0, mu_max = 1.0;
  double sigma_min = 0.0, sigma_max = 0.0;
  // Bottom of the spectrum (resp. essential spectrum) of curl curl_0 on
  // divergence-free fields.
  double lambda_min = 0.0;
  double lambda_e_min = 0.0;

  // Throws InvalidArgument when the ordering/positivity invariants fail.
  void validate() const;
};

enum class ThresholdCase { below_i, case_i, case_ii, case_iii };

const char* to_string(ThresholdCase c);

inline constexpr double kDefaultBoundaryTol = 1e-8;

// Membership in
//   i[-sigma_max/eps_min, 0]
//   U { w not in iR : Im w in [-sigma_max/(2 eps_min), -sigma_min/(2 eps_max)],
//       (Re w)^2 - 3 (Im w)^2 + 2 (sigma_max/eps_min) |Im w| >= lambda_min/(eps_max mu_max) }
bool enclosure_contains(Complex omega, const MaterialBounds& b,
                        double boundary_tol = kDefaultBoundaryTol);

// Radius of the spectrum-free real interval around 0.
double spectral_free_gap(const MaterialBounds& b);

ThresholdCase threshold_case(const MaterialBounds& b);

bool enclosure_constant(Complex omega, double eps_inf, double sigma_inf, double mu_max,
                        double lambda_min, double boundary_tol = kDefaultBoundaryTol);

struct BoundarySample {
  Complex point;
  int branch;  // +1 right curve, -1 mirrored left curve
};

// Points (+/-x(y), y) of the curve x^2 = lambda_min/(eps_max mu_max) + 3y^2 - 2 (sigma_max/eps_min)|y|
// for n_samples values of y evenly spread over [im_lo, im_hi], restricted to the
// strip Im w in [-sigma_max/(2 eps_min), -sigma_min/(2 eps_max)]. Samples with a
// negative radicand are skipped. Throws EmptyRange when the strip misses [im_lo, im_hi].
std::vector<BoundarySample> enclosure_boundary_samples(const MaterialBounds& b, double im_lo,
                                                       double im_hi, int n_samples);

}  // namespace maxspec
