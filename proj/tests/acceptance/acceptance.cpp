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

// Acceptance run: one PASS/FAIL line per criterion, through the C API only.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "maxspec/maxspec.h"

namespace {

using nlohmann::json;
using Complex = std::complex<double>;

constexpr double kPi = 3.14159265358979323846;
constexpr double kPi2 = kPi * kPi;

struct Failure {
  std::string what;
};

void check(maxspec_status s, const char* call) {
  if (s != MAXSPEC_OK) {
    throw Failure{std::string(call) + ": " + maxspec_status_name(s) + " " + maxspec_last_error()};
  }
}

struct RootsFree {
  void operator()(maxspec_roots* r) const { maxspec_roots_destroy(r); }
};
struct ModelFree {
  void operator()(maxspec_model* m) const { maxspec_model_destroy(m); }
};
struct SweepFree {
  void operator()(maxspec_sweep* s) const { maxspec_sweep_destroy(s); }
};
using Roots = std::unique_ptr<maxspec_roots, RootsFree>;
using Model = std::unique_ptr<maxspec_model, ModelFree>;
using SweepHandle = std::unique_ptr<maxspec_sweep, SweepFree>;

std::string take(char* s) {
  std::string out(s);
  maxspec_string_free(s);
  return out;
}

std::string fmt(const char* f, double a) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

Model make_model(maxspec_variant v, double delta = 0.0) {
  maxspec_model* m = nullptr;
  check(maxspec_model_create(v, 1.0, 2.0, delta, &m), "model_create");
  return Model(m);
}

std::vector<maxspec_root> list(const maxspec_roots* roots) {
  std::vector<maxspec_root> out(maxspec_roots_count(roots));
  for (size_t i = 0; i < out.size(); ++i) check(maxspec_roots_get(roots, i, &out[i]), "roots_get");
  return out;
}

std::vector<maxspec_root> eigs(const maxspec_model* m, maxspec_rect r) {
  maxspec_roots* out = nullptr;
  check(maxspec_eigenvalues(m, r, 0.0, nullptr, &out), "eigenvalues");
  Roots holder(out);
  return list(out);
}

Roots eigs_handle(const maxspec_model* m, maxspec_rect r) {
  maxspec_roots* out = nullptr;
  check(maxspec_eigenvalues(m, r, 0.0, nullptr, &out), "eigenvalues");
  return Roots(out);
}

maxspec_rect mirrored(maxspec_rect r) { return {-r.re_hi, -r.re_lo, r.im_lo, r.im_hi}; }

Complex z(maxspec_complex c) { return {c.re, c.im}; }

const maxspec_rect kConductiveRect{0.05, 8.0, -0.55, -0.005};
const maxspec_rect kGapRect{0.01, kPi / 2 - 1e-6, -1e-6, 1e-6};
const std::vector<double> kSweepX{10, 20, 40, 80};

maxspec_bounds example_bounds() {
  maxspec_bounds b = maxspec_bounds_default();
  b.sigma_max = 1.0;
  b.lambda_min = kPi2 / 4;
  b.lambda_e_min = kPi2 / 4;
  return b;
}

struct Verdict {
  bool pass;
  std::string detail;
};

Verdict a1() {
  const auto t0 = std::chrono::steady_clock::now();
  Model m = make_model(MAXSPEC_PERMITTIVITY, 10.0);
  const auto right = eigs(m.get(), kGapRect);
  const auto left = eigs(m.get(), mirrored(kGapRect));
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const struct {
    double w;
    int mult;
  } reference[] = {{1.4622, 1}, {1.5643, 2}};
  int matched = 0, mirrored_matched = 0;
  for (const auto& p : reference) {
    for (const auto& r : right) {
      if (std::abs(r.location.re - p.w) <= 5e-4 && r.multiplicity == p.mult) ++matched;
    }
    for (const auto& r : left) {
      if (std::abs(r.location.re + p.w) <= 5e-4 && r.multiplicity == p.mult) ++mirrored_matched;
    }
  }
  std::string found;
  for (const auto& r : right) {
    found += fmt("%.4f", r.location.re) + "x" + std::to_string(r.multiplicity) +
             (r.sign > 0 ? "(+) " : "(-) ");
  }
  const bool pass = matched == 2 && mirrored_matched == 2 && right.size() == 2 &&
                    left.size() == 2 && secs < 10.0;
  return {pass, std::to_string(right.size()) + " roots in (0, pi/2): " + found +
                    "| reference roots matched " + std::to_string(matched) + "/2, mirrored " +
                    std::to_string(mirrored_matched) + "/2, " + fmt("%.2f s", secs)};
}

Verdict a2() {
  char* s = nullptr;
  check(maxspec_essential_spectrum_json(MAXSPEC_CONDUCTIVE, 1, 2, &s), "essential");
  const json cond = json::parse(take(s));
  check(maxspec_essential_spectrum_json(MAXSPEC_PERMITTIVITY, 1, 2, &s), "essential");
  const json sa = json::parse(take(s));
  const json rays = json::array({json::array({"-inf", "-pi/2"}), json::array({"pi/2", "inf"})});
  auto points = [](const json& j) {
    std::vector<std::pair<double, double>> p;
    for (const auto& q : j["points"]) p.emplace_back(q[0].get<double>(), q[1].get<double>());
    std::sort(p.begin(), p.end());
    return p;
  };
  const std::vector<std::pair<double, double>> want_cond{{0, -1}, {0, -0.5}, {0, 0}};
  const std::vector<std::pair<double, double>> want_sa{{0, 0}};
  const bool pass = cond["exact"]["real"] == rays && sa["exact"]["real"] == rays &&
                    points(cond) == want_cond && points(sa) == want_sa &&
                    cond["imag"].empty() && sa["imag"].empty();
  return {pass, "rays " + cond["exact"]["real"].dump() + ", conductive points " +
                    cond["points"].dump() + ", self-adjoint points " + sa["points"].dump()};
}

Verdict a3() {
  const maxspec_bounds b = example_bounds();
  const maxspec_rect window{-8.0, 8.0, -0.55, -0.005};
  Model m = make_model(MAXSPEC_CONDUCTIVE);
  std::string detail;
  int violations = 0;
  auto audit = [&](const char* label) {
    const auto roots = eigs(m.get(), window);
    int bad = 0;
    for (const auto& r : roots) {
      int inside = 0;
      check(maxspec_enclosure_contains(r.location, &b, 1e-8, &inside), "enclosure_contains");
      if (!inside) ++bad;
    }
    violations += bad;
    detail += std::string(label) + ": " + std::to_string(roots.size()) + " roots, " +
              std::to_string(bad) + " outside; ";
  };
  audit("true");
  for (double X : {10.0, 50.0}) {
    check(maxspec_model_set_truncation(m.get(), X), "set_truncation");
    audit(X == 10.0 ? "X=10" : "X=50");
  }
  return {violations == 0, detail};
}

// Trajectory of mode constant c whose last point is nearest to target.
struct Track {
  std::vector<double> X;
  std::vector<Complex> w;
};

std::optional<Track> nearest_track(const maxspec_sweep* s, double c, Complex target) {
  std::optional<Track> best;
  double best_d = INFINITY;
  for (size_t i = 0; i < maxspec_sweep_trajectory_count(s); ++i) {
    size_t n = 0;
    double tc = 0.0;
    check(maxspec_sweep_trajectory(s, i, &tc, nullptr, nullptr, 0, &n), "trajectory");
    if (std::abs(tc - c) > 1e-9 * c || n == 0) continue;
    Track t{std::vector<double>(n), {}};
    std::vector<maxspec_complex> w(n);
    check(maxspec_sweep_trajectory(s, i, nullptr, t.X.data(), w.data(), n, &n), "trajectory");
    for (const auto& p : w) t.w.push_back(z(p));
    const double d = std::abs(t.w.back() - target);
    if (d < best_d) {
      best_d = d;
      best = t;
    }
  }
  return best;
}

Verdict distances_along(const maxspec_sweep* s, double c, Complex target, const char* label) {
  const auto t = nearest_track(s, c, target);
  if (!t) return {false, std::string(label) + ": no trajectory"};
  std::string detail = label;
  bool decreasing = true;
  double prev = INFINITY;
  for (size_t k = 0; k < t->X.size(); ++k) {
    const double d = std::abs(t->w[k] - target);
    detail += fmt(" X=%g", t->X[k]) + fmt(":%.3g", d);
    decreasing = decreasing && d < prev;
    prev = d;
  }
  const bool full = t->X.size() == kSweepX.size();
  return {full && decreasing && prev < 1e-6, detail};
}

Verdict a4() {
  Model m = make_model(MAXSPEC_CONDUCTIVE);
  const auto truth = eigs(m.get(), kConductiveRect);
  std::vector<maxspec_root> quarter;
  for (const auto& r : truth) {
    if (std::abs(r.mode_constant - kPi2 / 4) < 1e-9) quarter.push_back(r);
  }
  // Context: the lowest mode group that has an eigenvalue in the window.
  const maxspec_rect near{3.5, 4.0, -0.55, -0.005};
  maxspec_sweep* raw = nullptr;
  check(maxspec_sweep_run(m.get(), kSweepX.data(), kSweepX.size(), near, 0, 0, nullptr, &raw),
        "sweep_run");
  SweepHandle s(raw);
  const Complex pi2_root(3.73680089850701, -0.0378677091530461);
  const Verdict context = distances_along(s.get(), kPi2, pi2_root, "c=pi^2 distances");
  if (quarter.empty()) {
    return {false, "c=pi^2/4 has no eigenvalue in [0.05,8]x[-0.55,-0.005] (nothing to converge "
                   "to); " + context.detail};
  }
  const Verdict v = distances_along(s.get(), kPi2 / 4, z(quarter.front().location), "c=pi^2/4");
  return {v.pass, v.detail + "; " + context.detail};
}

Verdict a5() {
  std::string detail;
  bool pass = true;
  for (maxspec_variant v : {MAXSPEC_CONDUCTIVE, MAXSPEC_PERMITTIVITY}) {
    Model m = make_model(v, v == MAXSPEC_PERMITTIVITY ? 10.0 : 0.0);
    const maxspec_rect r = v == MAXSPEC_CONDUCTIVE ? kConductiveRect : kGapRect;
    Roots truth = eigs_handle(m.get(), r);
    maxspec_sweep* raw = nullptr;
    check(maxspec_sweep_run(m.get(), kSweepX.data(), kSweepX.size(), r, 0, 0, nullptr, &raw),
          "sweep_run");
    SweepHandle s(raw);
    int counts[5] = {};
    check(maxspec_pollution_report(s.get(), truth.get(), 1e-6, counts, nullptr), "report");
    pass = pass && counts[MAXSPEC_VIOLATION] == 0;
    if (v == MAXSPEC_PERMITTIVITY) pass = pass && counts[MAXSPEC_POLLUTION_CANDIDATE] == 0;
    detail += std::string(v == MAXSPEC_CONDUCTIVE ? "conductive" : "permittivity") +
              ": converged " + std::to_string(counts[MAXSPEC_CONVERGED_TO_EIGENVALUE]) +
              ", in_essential " + std::to_string(counts[MAXSPEC_IN_ESSENTIAL]) +
              ", candidates " + std::to_string(counts[MAXSPEC_POLLUTION_CANDIDATE]) +
              ", violations " + std::to_string(counts[MAXSPEC_VIOLATION]) + ", unconverged " +
              std::to_string(counts[MAXSPEC_UNCONVERGED]) + "; ";
  }
  return {pass, detail};
}

Verdict a6() {
  Model m = make_model(MAXSPEC_CONDUCTIVE);
  const maxspec_rect r{15.0, 40.0, -0.55, -0.005};
  double worst = 0.0;
  size_t n = 0;
  // Root of the highest mode group nearest to the left end of its branch.
  maxspec_root lead{};
  for (const maxspec_rect& w : {r, mirrored(r)}) {
    Roots roots = eigs_handle(m.get(), w);
    double dev = 0.0;
    check(maxspec_branch_asymptote(roots.get(), 15.0, 40.0, &dev), "branch_asymptote");
    worst = std::max(worst, dev);
    const auto all = list(roots.get());
    n += all.size();
    for (const auto& x : all) {
      if (x.location.re <= 0 || x.sign <= 0) continue;
      if (x.mode_constant > lead.mode_constant ||
          (x.mode_constant == lead.mode_constant && x.location.re < lead.location.re)) {
        lead = x;
      }
    }
  }
  return {worst < 0.05,
          "max |Im w + 1/2| = " + fmt("%.4f", worst) + " over " + std::to_string(n) +
              " roots; lowest root of the top group c=" + fmt("%.1f", lead.mode_constant) +
              " at " + fmt("%.4f", lead.location.re) + fmt("%+.4fi", lead.location.im) +
              " deviates " + fmt("%.4f", std::abs(lead.location.im + 0.5))};
}

Verdict a7() {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-1.0, 1.0), len(0.5, 4.5);
  std::uniform_int_distribution<int> mode(0, 5);
  double worst = 0.0;
  for (int k = 0; k < 10000; ++k) {
    const maxspec_complex w{5.0 * u(rng), 5.0 * u(rng)};
    const double xi = 10.0 * u(rng);
    maxspec_complex num{}, closed{};
    check(maxspec_fourier_symbol_det(w, xi, mode(rng), mode(rng), len(rng), len(rng), &num,
                                     &closed),
          "fourier_symbol_det");
    const double scale = std::abs(z(closed));
    if (scale == 0.0) continue;
    worst = std::max(worst, std::abs(z(num) - z(closed)) / scale);
  }
  return {worst < 1e-10, "max relative error " + fmt("%.3g", worst) + " over 10000 samples"};
}

Verdict a8() {
  std::string detail;
  bool pass = true;
  const char* names[] = {"all_positive", "one_sign_change", "all_negative", "other"};
  for (int k = 1; k <= 19; ++k) {
    if (k == 10) continue;
    const double nu = 0.05 * k;
    maxspec_sign_pattern p;
    check(maxspec_dtn_sign_pattern(nu, 1, 2, 200, &p), "dtn_sign_pattern");
    const maxspec_sign_pattern want = k < 10 ? MAXSPEC_ALL_POSITIVE : MAXSPEC_ONE_SIGN_CHANGE;
    pass = pass && p == want;
    if (k == 1 || k == 9 || k == 11 || k == 19) {
      detail += fmt("nu=%.2f:", nu) + names[p] + " ";
    }
  }
  return {pass, detail + "(the smallest kappa is pi*sqrt(5)/2, whose entry changes sign at "
                         "nu=0.500445, so every nu >= 0.55 flips all entries)"};
}

double coth_minus_one(double k) { return 2.0 / std::expm1(2.0 * k); }

Verdict a9() {
  auto R = [](double k) {
    double r = 0.0;
    check(maxspec_weyl_decay_ratio(k, 1, 2, &r), "weyl_decay_ratio");
    return r;
  };
  auto shape = [](double k) { return std::pow(k, 1.5) * coth_minus_one(k); };
  // Fit C on the integers, then test the bound on a finer grid and beyond.
  double C = 0.0;
  for (int k = 2; k <= 20; ++k) C = std::max(C, R(k) / shape(k));
  double worst = 0.0;
  for (double k = 2.0; k <= 40.0 + 1e-12; k += 0.25) worst = std::max(worst, R(k) / (C * shape(k)));
  const double r20 = R(20.0);
  return {worst <= 1.0 + 1e-9 && r20 < 1e-8,
          "C=" + fmt("%.6g", C) + ", max R/(C k^1.5 (coth k - 1)) on [2,40] = " +
              fmt("%.6g", worst) + ", R(20)=" + fmt("%.3g", r20)};
}

Verdict a10() {
  std::mt19937_64 rng(20260101);
  std::uniform_real_distribution<double> u(-0.9, 0.9);
  std::uniform_int_distribution<int> deg(1, 6), mult(1, 3);
  int bad = 0;
  double worst = 0.0;
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<maxspec_complex> zeros;
    std::vector<int> orders;
    for (int d = deg(rng); d > 0;) {
      const maxspec_complex c{u(rng), u(rng)};
      bool close = false;
      for (const auto& q : zeros) close = close || std::abs(z(q) - z(c)) < 0.05;
      if (close) continue;
      const int m = std::min(d, mult(rng));
      zeros.push_back(c);
      orders.push_back(m);
      d -= m;
    }
    maxspec_roots* raw = nullptr;
    check(maxspec_product_roots(zeros.data(), orders.data(), zeros.size(), {-1, 1, -1, 1},
                                nullptr, &raw),
          "product_roots");
    Roots roots(raw);
    const auto got = list(roots.get());
    bool ok = got.size() == zeros.size();
    for (size_t i = 0; ok && i < zeros.size(); ++i) {
      const auto it = std::min_element(got.begin(), got.end(), [&](const auto& a, const auto& b) {
        return std::abs(z(a.location) - z(zeros[i])) < std::abs(z(b.location) - z(zeros[i]));
      });
      const double d = std::abs(z(it->location) - z(zeros[i]));
      worst = std::max(worst, d);
      ok = d < 1e-9 && it->multiplicity == orders[i];
    }
    if (!ok) ++bad;
  }
  return {bad == 0, std::to_string(200 - bad) + "/200 recovered, max error " + fmt("%.3g", worst)};
}

Verdict a11() {
  maxspec_bounds b = maxspec_bounds_default();
  b.sigma_max = 2.0;
  auto bound = [&](maxspec_complex w, int& present) {
    double v = 0.0;
    check(maxspec_resolvent_bound(w, &b, &present, &v), "resolvent_bound");
    return v;
  };
  int p1 = 0, p2 = 0, p3 = 1;
  const double v1 = bound({1, -2}, p1);
  const double v2 = bound({1, -3}, p2);
  bound({0, -0.5}, p3);
  const bool pass =
      p1 && p2 && !p3 && std::abs(v1 - 2.0) <= 1e-14 && std::abs(v2 - 1.0) <= 1e-14;
  return {pass, "1-2i -> " + fmt("%.17g", v1) + ", 1-3i -> " + fmt("%.17g", v2) +
                    ", -0.5i -> " + (p3 ? "present" : "absent")};
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Verdict()>> criteria[] = {
      {"A1", a1}, {"A2", a2}, {"A3", a3}, {"A4", a4},  {"A5", a5},  {"A6", a6},
      {"A7", a7}, {"A8", a8}, {"A9", a9}, {"A10", a10}, {"A11", a11},
  };
  int failed = 0;
  for (const auto& [name, fn] : criteria) {
    Verdict v;
    try {
      v = fn();
    } catch (const Failure& f) {
      v = {false, "error: " + f.what};
    }
    if (!v.pass) ++failed;
    std::printf("%s %s %s\n", name, v.pass ? "PASS" : "FAIL", v.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of 11 criteria pass\n", 11 - failed);
  return failed == 0 ? 0 : 1;
}
