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

#include "enclosure.hpp"

#include <algorithm>
#include <cmath>

namespace maxspec {

void MaterialBounds::validate() const {
  auto ok = [](double v) { return std::isfinite(v); };
  require(ok(eps_min) && ok(eps_max) && ok(mu_min) && ok(mu_max) && ok(sigma_min) &&
              ok(sigma_max) && ok(lambda_min) && ok(lambda_e_min),
          "material bounds must be finite");
  require(eps_min > 0.0 && mu_min > 0.0, "eps_min and mu_min must be positive");
  require(eps_min <= eps_max, "eps_min must not exceed eps_max");
  require(mu_min <= mu_max, "mu_min must not exceed mu_max");
  require(sigma_min >= 0.0 && sigma_min <= sigma_max, "need 0 <= sigma_min <= sigma_max");
  require(lambda_min >= 0.0 && lambda_min <= lambda_e_min,
          "need 0 <= lambda_min <= lambda_e_min");
}

const char* to_string(ThresholdCase c) {
  switch (c) {
    case ThresholdCase::below_i: return "below_i";
    case ThresholdCase::case_i: return "case_i";
    case ThresholdCase::case_ii: return "case_ii";
    case ThresholdCase::case_iii: return "case_iii";
  }
  return "unknown";
}

bool enclosure_contains(Complex omega, const MaterialBounds& b, double boundary_tol) {
  b.validate();
  require_finite(omega, "omega");
  const double x = omega.real(), y = omega.imag();
  const double q = b.sigma_max / b.eps_min;
  if (std::abs(x) <= boundary_tol && y >= -q - boundary_tol && y <= boundary_tol) return true;
  if (x == 0.0) return false;
  const double y_lo = -0.5 * q, y_hi = -0.5 * b.sigma_min / b.eps_max;
  if (y < y_lo - boundary_tol || y > y_hi + boundary_tol) return false;
  const double lhs = x * x - 3.0 * y * y + 2.0 * q * std::abs(y);
  return lhs >= b.lambda_min / (b.eps_max * b.mu_max) - boundary_tol;
}

double spectral_free_gap(const MaterialBounds& b) {
  b.validate();
  return std::sqrt(b.lambda_min / (b.eps_max * b.mu_max));
}

ThresholdCase threshold_case(const MaterialBounds& b) {
  b.validate();
  const double scale = b.sigma_max * b.sigma_max * b.eps_max * b.mu_max / (b.eps_min * b.eps_min);
  if (b.lambda_min > scale / 3.0) return ThresholdCase::case_iii;
  if (b.lambda_min > scale / 4.0) return ThresholdCase::case_ii;
  if (b.lambda_min > 0.0) return ThresholdCase::case_i;
  return ThresholdCase::below_i;
}

bool enclosure_constant(Complex omega, double eps_inf, double sigma_inf, double mu_max,
                        double lambda_min, double boundary_tol) {
  require(eps_inf > 0.0 && sigma_inf >= 0.0 && mu_max > 0.0 && lambda_min >= 0.0,
          "need eps_inf > 0, sigma_inf >= 0, mu_max > 0, lambda_min >= 0");
  require_finite(omega, "omega");
  const double x = omega.real(), y = omega.imag();
  const double q = sigma_inf / eps_inf;
  if (std::abs(x) <= boundary_tol && y >= -q - boundary_tol && y <= boundary_tol) return true;
  if (x == 0.0) return false;
  if (std::abs(y + 0.5 * q) > boundary_tol) return false;
  return x * x + 0.25 * q * q >= lambda_min / (eps_inf * mu_max) - boundary_tol;
}

std::vector<BoundarySample> enclosure_boundary_samples(const MaterialBounds& b, double im_lo,
                                                       double im_hi, int n_samples) {
  b.validate();
  require(n_samples >= 2, "need at least two boundary samples");
  require(std::isfinite(im_lo) && std::isfinite(im_hi) && im_lo <= im_hi,
          "imaginary range must be an ordered finite interval");
  const double q = b.sigma_max / b.eps_min;
  const double lo = std::max(im_lo, -0.5 * q);
  const double hi = std::min(im_hi, -0.5 * b.sigma_min / b.eps_max);
  if (lo > hi) throw EmptyRange("imaginary range does not meet the enclosure strip");
  const double base = b.lambda_min / (b.eps_max * b.mu_max);
  std::vector<BoundarySample> out;
  for (int i = 0; i < n_samples; ++i) {
    const double y = lo + (hi - lo) * static_cast<double>(i) / (n_samples - 1);
    const double radicand = base + 3.0 * y * y - 2.0 * q * std::abs(y);
    if (radicand < 0.0) continue;
    const double x = std::sqrt(radicand);
    out.push_back({Complex(x, y), +1});
    out.push_back({Complex(-x, y), -1});
  }
  return out;
}

}  // namespace maxspec
