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

#include "appendix.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>
#include <utility>

#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace maxspec {

namespace {

// coth(k) - 1 without cancellation.
double coth_minus_one(double k) { return 2.0 / std::expm1(2.0 * k); }

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

double lowest_kappa(double L2, double L3) {
  return kPi * std::sqrt(1.0 / (L2 * L2) + 1.0 / (L3 * L3));
}

}  // namespace

std::vector<DtNEntry> dtn_entries(double nu, double L2, double L3, int n_modes) {
  require(std::isfinite(nu) && nu > 0.0 && nu < 1.0, "nu must lie in (0, 1)");
  require(std::isfinite(L2) && std::isfinite(L3) && L2 > 0.0 && L3 > 0.0,
          "cross-section lengths must be positive");
  require(n_modes > 0, "n_modes must be positive");
  // Every mode with n2, n3 <= n_modes is a candidate; the lowest n_modes
  // frequencies have n2 <= n_modes and n3 <= n_modes.
  std::vector<double> c;
  for (int n2 = 1; n2 <= n_modes; ++n2) {
    for (int n3 = 1; n3 <= n_modes; ++n3) {
      c.push_back(kPi * kPi * (n2 * n2 / (L2 * L2) + n3 * n3 / (L3 * L3)));
    }
  }
  std::partial_sort(c.begin(), c.begin() + n_modes, c.end());
  std::vector<DtNEntry> out(n_modes);
  for (int i = 0; i < n_modes; ++i) {
    const double k = std::sqrt(c[i]);
    out[i] = {k, k * ((1.0 - 2.0 * nu) + (1.0 - nu) * coth_minus_one(k))};
  }
  return out;
}

const char* to_string(SignPattern p) {
  switch (p) {
    case SignPattern::all_positive: return "all_positive";
    case SignPattern::one_sign_change: return "one_sign_change";
    case SignPattern::all_negative: return "all_negative";
    case SignPattern::other: return "other";
  }
  return "other";
}

SignPattern dtn_sign_pattern(const std::vector<DtNEntry>& entries) {
  require(!entries.empty(), "sign pattern needs at least one entry");
  int changes = 0;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i].value == 0.0 || !std::isfinite(entries[i].value)) return SignPattern::other;
    if (i && (entries[i].value > 0.0) != (entries[i - 1].value > 0.0)) ++changes;
  }
  const bool first_pos = entries.front().value > 0.0;
  if (changes == 0) return first_pos ? SignPattern::all_positive : SignPattern::all_negative;
  if (changes == 1 && first_pos) return SignPattern::one_sign_change;
  return SignPattern::other;
}

double weyl_decay_ratio(double kappa, double L2, double L3) {
  require(std::isfinite(kappa) && kappa > 0.0, "kappa must be positive");
  require(std::isfinite(L2) && std::isfinite(L3) && L2 > 0.0 && L3 > 0.0,
          "cross-section lengths must be positive");
  const double amp = 2.0 * kappa * kappa * coth_minus_one(kappa);
  const double damp = -std::expm1(-2.0 * kappa);
  // cosh(kappa x)/sinh(kappa), written to stay finite for large kappa.
  auto profile = [kappa, damp](double x) {
    return (std::exp(kappa * (x - 1.0)) + std::exp(-kappa * (x + 1.0))) / damp;
  };
  auto integrand = [&](double x) {
    const double v = profile(x);
    return v * v;
  };
  double err = 0.0;
  const double integral =
      boost::math::quadrature::gauss_kronrod<double, 31>::integrate(integrand, 0.0, 1.0, 15,
                                                                    1e-12, &err);
  if (!(integral > 0.0) || !std::isfinite(integral) || err > 1e-10 * integral) {
    throw QuadratureFailure("Weyl numerator quadrature did not reach relative 1e-10");
  }
  const double laplacian = amp * std::sqrt(integral);
  // Tail x1 > 1: |grad u|^2 = 2 kappa^2 e^{-2 kappa (x1 - 1)}, integral kappa.
  const double gradient = std::sqrt(kappa);
  return laplacian / gradient / lowest_kappa(L2, L3);
}

SymbolMatrix fourier_symbol(Complex w, double xi, int n2, int n3, double L2, double L3,
                            SymbolLayout layout) {
  require(is_finite(w) && std::isfinite(xi), "omega and xi must be finite");
  require(n2 >= 0 && n3 >= 0, "mode indices must be nonnegative");
  require(std::isfinite(L2) && std::isfinite(L3) && L2 > 0.0 && L3 > 0.0,
          "cross-section lengths must be positive");
  const Complex I(0.0, 1.0);
  const double a = kPi * n2 / L2, b = kPi * n3 / L3;
  const double s = layout == SymbolLayout::derived ? -1.0 : 1.0;
  const Complex z = 0.0;
  return {{
      {-I * w, z, z, z, b, -a},
      {z, -I * w, z, -b, z, -s * xi},
      {z, z, -I * w, a, s * xi, z},
      {z, -b, a, I * w, z, z},
      {-s * b, z, -xi, z, I * w, z},
      {-a, xi, z, z, z, I * w},
  }};
}

Complex determinant(SymbolMatrix m) {
  Complex det = 1.0;
  for (int col = 0; col < 6; ++col) {
    int piv = col;
    for (int r = col + 1; r < 6; ++r) {
      if (std::abs(m[r][col]) > std::abs(m[piv][col])) piv = r;
    }
    if (m[piv][col] == 0.0) return 0.0;
    if (piv != col) {
      std::swap(m[piv], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (int r = col + 1; r < 6; ++r) {
      const Complex f = m[r][col] / m[col][col];
      for (int k = col; k < 6; ++k) m[r][k] -= f * m[col][k];
    }
  }
  return det;
}

SymbolDeterminant fourier_symbol_det(Complex w, double xi, int n2, int n3, double L2,
                                     double L3) {
  const SymbolMatrix m = fourier_symbol(w, xi, n2, n3, L2, L3);
  const double c = kPi * kPi * (n2 * n2 / (L2 * L2) + n3 * n3 / (L3 * L3));
  const Complex q = xi * xi + c - w * w;
  return {determinant(m), w * w * q * q};
}

nlohmann::json CheckReport::to_json() const {
  return {{"check", check}, {"parameters", parameters}, {"pass", pass}, {"detail", detail}};
}

CheckReport dtn_check(double L2, double L3, int n_modes) {
  CheckReport r;
  r.check = "dtn_sign_pattern";
  r.parameters = {{"L2", L2}, {"L3", L3}, {"n_modes", n_modes}};
  r.pass = true;
  nlohmann::json patterns = nlohmann::json::object();
  for (int i = 1; i <= 19; ++i) {
    if (i == 10) continue;
    const double nu = 0.05 * i;
    const auto e = dtn_entries(nu, L2, L3, n_modes);
    const SignPattern p = dtn_sign_pattern(e);
    patterns[fmt("%.2f", nu)] = to_string(p);
    // Below 1/2 the diagonal must be positive; above it, eventually negative
    // with at most one sign change (invertible up to finite rank).
    const bool ok = nu < 0.5 ? p == SignPattern::all_positive
                             : p == SignPattern::one_sign_change || p == SignPattern::all_negative;
    r.pass = r.pass && ok;
  }
  r.parameters["patterns"] = patterns;
  r.detail = "diagonal kappa((1-nu)coth(kappa)-nu); nu > 1/2 accepts one_sign_change or "
             "all_negative";
  return r;
}

CheckReport weyl_check(double L2, double L3) {
  CheckReport r;
  r.check = "weyl_decay";
  r.parameters = {{"L2", L2}, {"L3", L3}, {"kappa", {2, 20}}};
  double C = 0.0, prev_scaled = INFINITY, prev = INFINITY;
  bool monotone = true;
  for (int k = 2; k <= 20; ++k) {
    const double R = weyl_decay_ratio(k, L2, L3);
    const double scaled = R / (std::pow(k, 1.5) * coth_minus_one(k));
    C = std::max(C, scaled);
    monotone = monotone && R < prev && scaled <= prev_scaled;
    prev = R;
    prev_scaled = scaled;
  }
  const double r2 = weyl_decay_ratio(2, L2, L3), r20 = weyl_decay_ratio(20, L2, L3);
  r.pass = monotone && std::isfinite(C) && r20 < 1e-8 && r20 / r2 < 1e-12;
  r.detail = "C=" + fmt("%.12g", C) + " R(2)=" + fmt("%.12g", r2) + " R(20)=" + fmt("%.12g", r20);
  return r;
}

CheckReport fourier_check(int samples, unsigned seed) {
  require(samples > 0, "samples must be positive");
  CheckReport r;
  r.check = "fourier_determinant";
  r.parameters = {{"samples", samples}, {"seed", seed}};
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::uniform_int_distribution<int> n(0, 5);
  double worst = 0.0;
  for (int i = 0; i < samples; ++i) {
    Complex w;
    do {
      w = Complex(u(rng), u(rng));
    } while (std::abs(w) > 1.0);
    w *= 10.0;
    const double xi = 10.0 * u(rng);
    const int n2 = n(rng), n3 = n(rng);
    const double L2 = 0.5 + 2.0 * (u(rng) + 1.0), L3 = 0.5 + 2.0 * (u(rng) + 1.0);
    const auto d = fourier_symbol_det(w, xi, n2, n3, L2, L3);
    worst = std::max(worst, std::abs(d.numeric - d.closed_form) / (1.0 + std::abs(d.closed_form)));
  }
  r.pass = worst < 1e-10;
  r.detail = "max relative error " + fmt("%.3g", worst);
  return r;
}

std::vector<CheckReport> appendix_checks() { return {dtn_check(), weyl_check(), fourier_check()}; }

}  // namespace maxspec
