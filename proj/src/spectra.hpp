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

// Spectrum sets with exact endpoints: finite unions of intervals on the real
// and imaginary axes plus isolated points.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "errors.hpp"

namespace maxspec {

struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rational() = default;
  Rational(std::int64_t n, std::int64_t d = 1);

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  bool operator==(const Rational&) const = default;

  // Best approximation with denominator <= max_den; nullopt-like failure is
  // signalled by returning false when the error exceeds rel_tol.
  static bool approximate(double x, std::int64_t max_den, double rel_tol, Rational& out);
};

// coef * pi^pi_power * sqrt(radicand), or +/-infinity, or a plain float when
// no exact form was recognised.
class Symbolic {
 public:
  enum class Kind { exact, pos_inf, neg_inf, numeric };

  static Symbolic exact(Rational coef, int pi_power = 0, Rational radicand = {1});
  static Symbolic infinity(int sign);
  static Symbolic numeric(double v);
  // Recognises sqrt(x) as (p/q) pi sqrt(r) or (p/q) sqrt(r) when possible.
  static Symbolic sqrt_of(double x);

  Kind kind() const { return kind_; }
  const Rational& coef() const { return coef_; }
  int pi_power() const { return pi_power_; }
  const Rational& radicand() const { return radicand_; }

  double value() const;
  Symbolic negated() const;
  std::string str() const;
  bool operator==(const Symbolic&) const = default;

 private:
  Kind kind_ = Kind::exact;
  Rational coef_{0};
  int pi_power_ = 0;
  Rational radicand_{1};
  double numeric_ = 0.0;
};

struct Interval {
  Symbolic lo, hi;
};

inline constexpr double kDefaultMembershipTol = 1e-9;

class SpectrumSet {
 public:
  SpectrumSet() = default;

  SpectrumSet& add_real(Symbolic lo, Symbolic hi);
  // Interval i[lo, hi] on the imaginary axis.
  SpectrumSet& add_imag(Symbolic lo, Symbolic hi);
  SpectrumSet& add_point(Complex z);

  const std::vector<Interval>& real_parts() const { return real_; }
  const std::vector<Interval>& imag_parts() const { return imag_; }
  const std::vector<Complex>& points() const { return points_; }

  // Sort and merge overlapping intervals, drop points covered by intervals.
  SpectrumSet normalized() const;

  double distance(Complex z) const;
  bool contains(Complex z, double tol = kDefaultMembershipTol) const;

  nlohmann::json to_json() const;

 private:
  std::vector<Interval> real_, imag_;
  std::vector<Complex> points_;
};

bool operator==(const SpectrumSet& a, const SpectrumSet& b);

SpectrumSet essential_spectrum_conductive(double L2, double L3);
SpectrumSet essential_spectrum_selfadjoint(double L2, double L3);
// Rays (-inf, -r] U [r, inf) with r = sqrt(lambda_e_min / (eps_inf mu_inf)).
SpectrumSet pollution_enclosure(double eps_inf, double mu_inf, double lambda_e_min);
// i[-sigma_max/eps_min, imag_hi] as a set.
SpectrumSet imaginary_segment(double sigma_max, double eps_min, double imag_hi = 0.0);

// Region where isolated eigenvalues are guaranteed to be approximated by the
// truncated problems: outside pollution U i[-sigma_max/eps_min, imag_hi].
class SafeZone {
 public:
  SafeZone(SpectrumSet pollution, double imag_hi, double sigma_max, double eps_min);
  bool operator()(Complex z, double tol = kDefaultMembershipTol) const;

 private:
  SpectrumSet pollution_;
  SpectrumSet segment_;
};

inline bool set_contains(const SpectrumSet& s, Complex z, double tol = kDefaultMembershipTol) {
  return s.contains(z, tol);
}
inline double set_distance(const SpectrumSet& s, Complex z) { return s.distance(z); }

}  // namespace maxspec
