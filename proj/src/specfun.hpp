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

// Branch-stable evaluation of the coth-type special functions and of the
// per-mode dispersion relations of the slab-loaded rectangular waveguide.
//
// The interior slab occupies 0 < x1 < 1. For a transverse mode with constant
// c = pi^2 n2^2 / L2^2 + pi^2 n3^2 / L3^2 the relations involve
//
//   alpha^2 = c - w (w + i)        (conducting slab, sigma = 1)
//   alpha^2 = c - (1 + delta) w^2  (dielectric slab, eps = 1 + delta)
//   beta^2  = c - w^2              (vacuum outside the slab)
//
// Every function below is written in terms of the squares alpha^2, beta^2 so
// that no square-root branch cut enters the meromorphic forms.

#pragma once

#include "errors.hpp"

namespace maxspec {

// Transverse Dirichlet eigenvalue of the cross-section. Always positive.
class ModeConstant {
 public:
  explicit ModeConstant(double c);
  double value() const { return c_; }

 private:
  double c_;
};

// Pole-exclusion radius in the s-plane around s = -k^2 pi^2.
inline constexpr double kPoleExclusion = 1e-8;
// |s| below which z coth z is summed from its Taylor series.
inline constexpr double kSeriesSwitch = 0.25;

// Square root with Re w >= 0; on the negative real axis returns +i sqrt|z|.
Complex sqrt_nonneg_re(Complex z);

// g(s) = sqrt(s) coth(sqrt(s)), entire in s apart from simple poles at
// s = -k^2 pi^2, k >= 1. Throws PoleProximity within kPoleExclusion of a pole.
Complex zcothz_of_square(Complex s);

// The two representations used by zcothz_of_square, exposed for testing the
// continuity of the switch.
Complex zcothz_series(Complex s);
Complex zcothz_direct(Complex s);

// sqrt(s) coth(sqrt(s) len) = zcothz_of_square(s len^2) / len.
Complex scaled_coth_of_square(Complex s, double len);

Complex alpha_sq(Complex omega, ModeConstant c);
Complex alpha_sq_dielectric(Complex omega, ModeConstant c, double delta);
Complex beta_sq(Complex omega, ModeConstant c);

// Conducting slab, guide truncated at x1 = X (> 1):
//   g(alpha^2) + sqrt(beta^2) coth(sqrt(beta^2) (X - 1)).
Complex dispersion_truncated(Complex omega, ModeConstant c, double X);

// Conducting slab, semi-infinite guide: g(alpha^2) + sign * sqrt_nonneg_re(beta^2).
Complex dispersion_true(Complex omega, ModeConstant c, int sign);

// Branch-free product of both sign branches: g(alpha^2)^2 - beta^2.
Complex dispersion_true_sq(Complex omega, ModeConstant c);

// Dielectric slab counterparts.
Complex dispersion_selfadjoint(Complex omega, ModeConstant c, double delta, int sign);
Complex dispersion_selfadjoint_sq(Complex omega, ModeConstant c, double delta);
Complex dispersion_selfadjoint_truncated(Complex omega, ModeConstant c, double delta,
                                         double X);

}  // namespace maxspec
