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

#include "specfun.hpp"

#include <array>
#include <cmath>
#include <string>

namespace maxspec {

namespace {

// z coth z = sum_n 2^(2n) B_(2n) s^n / (2n)!, s = z^2.
constexpr std::array<double, 9> kSeries = {
    1.0,
    1.0 / 3.0,
    -1.0 / 45.0,
    2.0 / 945.0,
    -1.0 / 4725.0,
    2.0 / 93555.0,
    -1382.0 / 638512875.0,
    4.0 / 18243225.0,
    -3617.0 / 162820783125.0,
};

void check_pole(Complex s) {
  if (s.real() >= 0.0) return;
  // Nearest candidate k with s close to -k^2 pi^2.
  const double k = std::round(std::sqrt(-s.real()) / kPi);
  if (k < 1.0) return;
  if (std::abs(s + k * k * kPi * kPi) < kPoleExclusion) {
    throw PoleProximity("z coth z evaluated within " + std::to_string(kPoleExclusion) +
                        " of its pole at s = -" + std::to_string(static_cast<long>(k)) +
                        "^2 pi^2");
  }
}

void check_sign(int sign) {
  require(sign == 1 || sign == -1, "sign branch must be +1 or -1");
}

}  // namespace

ModeConstant::ModeConstant(double c) : c_(c) {
  require(std::isfinite(c) && c > 0.0, "mode constant must be positive");
}

Complex sqrt_nonneg_re(Complex z) {
  require_finite(z, "sqrt argument");
  Complex w = std::sqrt(z);
  if (w.real() < 0.0 || (w.real() == 0.0 && w.imag() < 0.0)) w = -w;
  // std::sqrt returns -0 real part for some inputs; normalise it.
  if (w.real() == 0.0) w = Complex(0.0, w.imag());
  return w;
}

Complex zcothz_series(Complex s) {
  Complex acc = kSeries.back();
  for (auto it = kSeries.rbegin() + 1; it != kSeries.rend(); ++it) acc = acc * s + *it;
  return acc;
}

Complex zcothz_direct(Complex s) {
  const Complex z = sqrt_nonneg_re(s);
  // Re z >= 0, so e^{-2z} is bounded by one and coth z = (1 + e)/(1 - e).
  const Complex e = std::exp(-2.0 * z);
  return z * (1.0 + e) / (1.0 - e);
}

Complex zcothz_of_square(Complex s) {
  require_finite(s, "s");
  if (std::abs(s) < kSeriesSwitch) return zcothz_series(s);
  check_pole(s);
  return zcothz_direct(s);
}

Complex scaled_coth_of_square(Complex s, double len) {
  require(std::isfinite(len) && len > 0.0, "coth scale length must be positive");
  return zcothz_of_square(s * (len * len)) / len;
}

Complex alpha_sq(Complex omega, ModeConstant c) {
  return c.value() - omega * (omega + Complex(0.0, 1.0));
}

Complex alpha_sq_dielectric(Complex omega, ModeConstant c, double delta) {
  require(std::isfinite(delta) && delta > 0.0, "delta must be positive");
  return c.value() - (1.0 + delta) * omega * omega;
}

Complex beta_sq(Complex omega, ModeConstant c) { return c.value() - omega * omega; }

Complex dispersion_truncated(Complex omega, ModeConstant c, double X) {
  require(std::isfinite(X) && X > 1.0, "truncation length X must exceed 1");
  require_finite(omega, "omega");
  return zcothz_of_square(alpha_sq(omega, c)) + scaled_coth_of_square(beta_sq(omega, c), X - 1.0);
}

Complex dispersion_true(Complex omega, ModeConstant c, int sign) {
  check_sign(sign);
  require_finite(omega, "omega");
  return zcothz_of_square(alpha_sq(omega, c)) +
         static_cast<double>(sign) * sqrt_nonneg_re(beta_sq(omega, c));
}

Complex dispersion_true_sq(Complex omega, ModeConstant c) {
  require_finite(omega, "omega");
  const Complex g = zcothz_of_square(alpha_sq(omega, c));
  return g * g - beta_sq(omega, c);
}

Complex dispersion_selfadjoint(Complex omega, ModeConstant c, double delta, int sign) {
  check_sign(sign);
  require_finite(omega, "omega");
  return zcothz_of_square(alpha_sq_dielectric(omega, c, delta)) +
         static_cast<double>(sign) * sqrt_nonneg_re(beta_sq(omega, c));
}

Complex dispersion_selfadjoint_sq(Complex omega, ModeConstant c, double delta) {
  require_finite(omega, "omega");
  const Complex g = zcothz_of_square(alpha_sq_dielectric(omega, c, delta));
  return g * g - beta_sq(omega, c);
}

Complex dispersion_selfadjoint_truncated(Complex omega, ModeConstant c, double delta,
                                         double X) {
  require(std::isfinite(X) && X > 1.0, "truncation length X must exceed 1");
  require_finite(omega, "omega");
  return zcothz_of_square(alpha_sq_dielectric(omega, c, delta)) +
         scaled_coth_of_square(beta_sq(omega, c), X - 1.0);
}

}  // namespace maxspec
