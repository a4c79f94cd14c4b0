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

#include "spectra.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numeric>

namespace maxspec {

Rational::Rational(std::int64_t n, std::int64_t d) : num(n), den(d) {
  require(d != 0, "rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
}

bool Rational::approximate(double x, std::int64_t max_den, double rel_tol, Rational& out) {
  if (!std::isfinite(x)) return false;
  // Continued-fraction convergents.
  std::int64_t p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  double r = std::abs(x);
  for (int it = 0; it < 64; ++it) {
    const double a = std::floor(r);
    if (a > 1e15) break;
    const auto ai = static_cast<std::int64_t>(a);
    const std::int64_t p2 = ai * p1 + p0, q2 = ai * q1 + q0;
    if (q2 > max_den) break;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    const double approx = static_cast<double>(p1) / static_cast<double>(q1);
    if (std::abs(approx - std::abs(x)) <= rel_tol * std::max(1.0, std::abs(x))) {
      out = Rational(x < 0 ? -p1 : p1, q1);
      return true;
    }
    const double frac = r - a;
    if (frac == 0.0) break;
    r = 1.0 / frac;
  }
  return false;
}

Symbolic Symbolic::exact(Rational coef, int pi_power, Rational radicand) {
  require(radicand.num >= 0, "negative radicand");
  Symbolic s;
  s.kind_ = Kind::exact;
  s.coef_ = coef;
  s.pi_power_ = coef.num == 0 ? 0 : pi_power;
  s.radicand_ = coef.num == 0 ? Rational(1) : radicand;
  return s;
}

Symbolic Symbolic::infinity(int sign) {
  Symbolic s;
  s.kind_ = sign > 0 ? Kind::pos_inf : Kind::neg_inf;
  return s;
}

Symbolic Symbolic::numeric(double v) {
  require(std::isfinite(v), "numeric endpoint must be finite");
  Symbolic s;
  s.kind_ = Kind::numeric;
  s.numeric_ = v;
  return s;
}

namespace {

// sqrt(p/q) = (a/b) sqrt(r) with r a square-free integer ratio.
Symbolic sqrt_rational(Rational x, int pi_power) {
  auto split = [](std::int64_t n, std::int64_t& outside, std::int64_t& inside) {
    outside = 1;
    inside = n;
    for (std::int64_t k = 2; k * k <= inside; ++k) {
      while (inside % (k * k) == 0) {
        inside /= k * k;
        outside *= k;
      }
    }
  };
  // sqrt(p/q) = sqrt(p q) / q
  const std::int64_t pq = x.num * x.den;
  std::int64_t out = 1, in = 1;
  split(pq, out, in);
  return Symbolic::exact(Rational(out, x.den), pi_power, Rational(in));
}

}  // namespace

Symbolic Symbolic::sqrt_of(double x) {
  require(std::isfinite(x) && x >= 0.0, "sqrt_of needs a finite nonnegative argument");
  if (x == 0.0) return exact(Rational(0));
  constexpr std::int64_t kMaxDen = 10000;
  constexpr double kTol = 1e-13;
  Rational r;
  if (Rational::approximate(x / (kPi * kPi), kMaxDen, kTol, r) && r.num <= kMaxDen) {
    return sqrt_rational(r, 1);
  }
  if (Rational::approximate(x, kMaxDen, kTol, r) && r.num <= kMaxDen) {
    return sqrt_rational(r, 0);
  }
  return numeric(std::sqrt(x));
}

double Symbolic::value() const {
  switch (kind_) {
    case Kind::pos_inf: return std::numeric_limits<double>::infinity();
    case Kind::neg_inf: return -std::numeric_limits<double>::infinity();
    case Kind::numeric: return numeric_;
    case Kind::exact: break;
  }
  return coef_.value() * std::pow(kPi, pi_power_) * std::sqrt(radicand_.value());
}

Symbolic Symbolic::negated() const {
  Symbolic s = *this;
  switch (kind_) {
    case Kind::pos_inf: s.kind_ = Kind::neg_inf; break;
    case Kind::neg_inf: s.kind_ = Kind::pos_inf; break;
    case Kind::numeric: s.numeric_ = -numeric_; break;
    case Kind::exact: s.coef_ = Rational(-coef_.num, coef_.den); break;
  }
  return s;
}

std::string Symbolic::str() const {
  switch (kind_) {
    case Kind::pos_inf: return "inf";
    case Kind::neg_inf: return "-inf";
    case Kind::numeric: {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.12g", numeric_);
      return buf;
    }
    case Kind::exact: break;
  }
  if (coef_.num == 0) return "0";
  std::string s = coef_.num < 0 ? "-" : "";
  const std::int64_t a = coef_.num < 0 ? -coef_.num : coef_.num;
  std::vector<std::string> factors;
  if (a != 1 || (pi_power_ == 0 && radicand_ == Rational(1))) factors.push_back(std::to_string(a));
  if (pi_power_ == 1) factors.push_back("pi");
  if (pi_power_ > 1) factors.push_back("pi^" + std::to_string(pi_power_));
  if (!(radicand_ == Rational(1))) {
    std::string r = std::to_string(radicand_.num);
    if (radicand_.den != 1) r += "/" + std::to_string(radicand_.den);
    factors.push_back("sqrt(" + r + ")");
  }
  for (std::size_t i = 0; i < factors.size(); ++i) s += (i ? "*" : "") + factors[i];
  if (coef_.den != 1) s += "/" + std::to_string(coef_.den);
  return s;
}

SpectrumSet& SpectrumSet::add_real(Symbolic lo, Symbolic hi) {
  require(lo.value() <= hi.value(), "interval endpoints out of order");
  real_.push_back({lo, hi});
  return *this;
}

SpectrumSet& SpectrumSet::add_imag(Symbolic lo, Symbolic hi) {
  require(lo.value() <= hi.value(), "interval endpoints out of order");
  imag_.push_back({lo, hi});
  return *this;
}

SpectrumSet& SpectrumSet::add_point(Complex z) {
  require_finite(z, "spectrum point");
  points_.push_back(z);
  return *this;
}

namespace {

std::vector<Interval> merge(std::vector<Interval> v) {
  std::sort(v.begin(), v.end(), [](const Interval& a, const Interval& b) {
    if (a.lo.value() != b.lo.value()) return a.lo.value() < b.lo.value();
    return a.hi.value() < b.hi.value();
  });
  std::vector<Interval> out;
  for (const Interval& iv : v) {
    if (!out.empty() && iv.lo.value() <= out.back().hi.value()) {
      if (iv.hi.value() > out.back().hi.value()) out.back().hi = iv.hi;
    } else {
      out.push_back(iv);
    }
  }
  return out;
}

double gap_to(double t, const Interval& iv) {
  if (t < iv.lo.value()) return iv.lo.value() - t;
  if (t > iv.hi.value()) return t - iv.hi.value();
  return 0.0;
}

}  // namespace

SpectrumSet SpectrumSet::normalized() const {
  SpectrumSet s;
  s.real_ = merge(real_);
  s.imag_ = merge(imag_);
  std::vector<Complex> pts = points_;
  std::sort(pts.begin(), pts.end(), [](Complex a, Complex b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() > b.imag();
  });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  SpectrumSet cover;
  cover.real_ = s.real_;
  cover.imag_ = s.imag_;
  for (Complex z : pts) {
    if (!cover.contains(z, 0.0)) s.points_.push_back(z);
  }
  return s;
}

double SpectrumSet::distance(Complex z) const {
  require_finite(z, "omega");
  double best = std::numeric_limits<double>::infinity();
  for (const Interval& iv : real_) best = std::min(best, std::hypot(gap_to(z.real(), iv), z.imag()));
  for (const Interval& iv : imag_) best = std::min(best, std::hypot(z.real(), gap_to(z.imag(), iv)));
  for (Complex p : points_) best = std::min(best, std::abs(z - p));
  return best;
}

bool SpectrumSet::contains(Complex z, double tol) const { return distance(z) <= tol; }

namespace {

nlohmann::json endpoint_json(const Symbolic& s) {
  if (s.kind() == Symbolic::Kind::pos_inf) return "inf";
  if (s.kind() == Symbolic::Kind::neg_inf) return "-inf";
  return s.value();
}

}  // namespace

nlohmann::json SpectrumSet::to_json() const {
  using nlohmann::json;
  json j = {{"real", json::array()}, {"imag", json::array()}, {"points", json::array()}};
  json exact = {{"real", json::array()}, {"imag", json::array()}};
  for (const Interval& iv : real_) {
    j["real"].push_back({endpoint_json(iv.lo), endpoint_json(iv.hi)});
    exact["real"].push_back({iv.lo.str(), iv.hi.str()});
  }
  for (const Interval& iv : imag_) {
    j["imag"].push_back({endpoint_json(iv.lo), endpoint_json(iv.hi)});
    exact["imag"].push_back({iv.lo.str(), iv.hi.str()});
  }
  for (Complex p : points_) j["points"].push_back({p.real(), p.imag()});
  j["exact"] = exact;
  return j;
}

bool operator==(const SpectrumSet& a, const SpectrumSet& b) {
  auto same = [](const std::vector<Interval>& x, const std::vector<Interval>& y) {
    if (x.size() != y.size()) return false;
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (!(x[i].lo == y[i].lo) || !(x[i].hi == y[i].hi)) return false;
    }
    return true;
  };
  return same(a.real_parts(), b.real_parts()) && same(a.imag_parts(), b.imag_parts()) &&
         a.points() == b.points();
}

namespace {

// pi / max(L2, L3) with the length recognised as a rational when possible.
Symbolic pi_over(double L2, double L3) {
  require(std::isfinite(L2) && std::isfinite(L3) && L2 > 0.0 && L3 > 0.0,
          "cross-section lengths must be positive");
  const double L = std::max(L2, L3);
  return Symbolic::sqrt_of(kPi * kPi / (L * L));
}

}  // namespace

SpectrumSet essential_spectrum_conductive(double L2, double L3) {
  const Symbolic r = pi_over(L2, L3);
  SpectrumSet s;
  s.add_real(Symbolic::infinity(-1), r.negated()).add_real(r, Symbolic::infinity(+1));
  s.add_point({0, 0}).add_point({0, -0.5}).add_point({0, -1});
  return s.normalized();
}

SpectrumSet essential_spectrum_selfadjoint(double L2, double L3) {
  const Symbolic r = pi_over(L2, L3);
  SpectrumSet s;
  s.add_real(Symbolic::infinity(-1), r.negated()).add_real(r, Symbolic::infinity(+1));
  s.add_point({0, 0});
  return s.normalized();
}

SpectrumSet pollution_enclosure(double eps_inf, double mu_inf, double lambda_e_min) {
  require(std::isfinite(eps_inf) && std::isfinite(mu_inf) && eps_inf > 0.0 && mu_inf > 0.0,
          "eps_inf and mu_inf must be positive");
  require(std::isfinite(lambda_e_min) && lambda_e_min >= 0.0, "lambda_e_min must be >= 0");
  const Symbolic r = Symbolic::sqrt_of(lambda_e_min / (eps_inf * mu_inf));
  SpectrumSet s;
  s.add_real(Symbolic::infinity(-1), r.negated()).add_real(r, Symbolic::infinity(+1));
  return s.normalized();
}

SpectrumSet imaginary_segment(double sigma_max, double eps_min, double imag_hi) {
  require(std::isfinite(sigma_max) && sigma_max >= 0.0, "sigma_max must be >= 0");
  require(std::isfinite(eps_min) && eps_min > 0.0, "eps_min must be positive");
  const double lo = -sigma_max / eps_min;
  require(std::isfinite(imag_hi) && imag_hi >= lo, "imaginary segment out of order");
  Rational q;
  Symbolic s_lo = Rational::approximate(lo, 10000, 1e-13, q) ? Symbolic::exact(q)
                                                              : Symbolic::numeric(lo);
  Symbolic s_hi = Rational::approximate(imag_hi, 10000, 1e-13, q) ? Symbolic::exact(q)
                                                                   : Symbolic::numeric(imag_hi);
  SpectrumSet s;
  s.add_imag(s_lo, s_hi);
  return s;
}

SafeZone::SafeZone(SpectrumSet pollution, double imag_hi, double sigma_max, double eps_min)
    : pollution_(std::move(pollution)), segment_(imaginary_segment(sigma_max, eps_min, imag_hi)) {}

bool SafeZone::operator()(Complex z, double tol) const {
  return !pollution_.contains(z, tol) && !segment_.contains(z, tol);
}

}  // namespace maxspec
