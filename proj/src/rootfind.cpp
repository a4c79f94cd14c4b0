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

#include "rootfind.hpp"

#include <algorithm>
#include <limits>
#include <array>
#include <cmath>
#include <string>

namespace maxspec {

namespace {

constexpr double kTwoPi = 2.0 * kPi;
// Bisection floor for a contour segment, relative to the point magnitude.
constexpr double kMinSegment = 1e-13;
// Offsets tried in turn when a cut line hits a zero or passes a pole.
constexpr std::array<double, 7> kSplitFractions = {0.5,    0.5137, 0.4771, 0.5419,
                                                   0.4583, 0.5791, 0.4247};

// mant * 2^exp; products of many pole factors stay representable.
struct Scaled {
  Complex mant;
  int exp = 0;

  static Scaled of(Complex v) {
    Scaled s{v, 0};
    s.normalize();
    return s;
  }
  void normalize() {
    const double m = std::max(std::abs(mant.real()), std::abs(mant.imag()));
    if (m == 0.0 || !std::isfinite(m)) return;
    int e = 0;
    std::frexp(m, &e);
    mant = Complex(std::ldexp(mant.real(), -e), std::ldexp(mant.imag(), -e));
    exp += e;
  }
  Scaled& operator*=(Complex v) {
    mant *= v;
    normalize();
    return *this;
  }
};

using ScaledFn = std::function<Scaled(Complex)>;

// a / b as an ordinary complex number (saturating for huge ratios).
Complex ratio(const Scaled& a, const Scaled& b) {
  const int e = std::clamp(a.exp - b.exp, -2000, 2000);
  const Complex q = a.mant / b.mant;
  return {std::ldexp(q.real(), e), std::ldexp(q.imag(), e)};
}

Scaled eval_on_contour(const ScaledFn& f, Complex z) {
  Scaled v;
  try {
    v = f(z);
  } catch (const PoleProximity& e) {
    throw BoundaryHit(std::string("contour passes a pole: ") + e.what());
  }
  if (!is_finite(v.mant)) throw BoundaryHit("non-finite function value on contour");
  if (v.mant == 0.0) throw BoundaryHit("zero of f on the contour");
  return v;
}

class EdgeTracker {
 public:
  // `poles` are singularities of the original function. Near them the phase
  // turns fast, so segments are kept no longer than their distance to the
  // nearest pole before any midpoint test is trusted.
  EdgeTracker(const ScaledFn& f, double clearance, const std::vector<Complex>& poles)
      : f_(f), clearance_(clearance), poles_(poles) {}

  // Accumulated arg change of f from z0 to z1 (values f0, f1 already known).
  double segment(Complex z0, Complex z1, const Scaled& f0, const Scaled& f1) {
    const Complex zm = 0.5 * (z0 + z1);
    const Scaled fm = eval_on_contour(f_, zm);
    if (std::abs(z1 - z0) > pole_distance(z0, z1) &&
        std::abs(z1 - z0) >= kMinSegment * (1.0 + std::abs(z0))) {
      return segment(z0, zm, f0, fm) + segment(zm, z1, fm, f1);
    }
    // Work relative to f0 so magnitudes are O(1).
    const Complex m = ratio(fm, f0);
    const Complex e = ratio(f1, f0);
    if (std::abs(m) < clearance_ * std::sqrt(std::abs(e))) {
      throw BoundaryHit("|f| below clearance on contour at (" + std::to_string(zm.real()) + ", " +
                        std::to_string(zm.imag()) + ")");
    }
    const double d1 = std::arg(m);
    const double d2 = std::arg(e / m);
    const double d = std::arg(e);
    // The chord test catches a zero pair hiding inside one half, which
    // leaves the phase increments small but bends f away from linear.
    const double chord = std::abs(m - 0.5 * (1.0 + e));
    const bool smooth = std::abs(d1) < kPi / 2 && std::abs(d2) < kPi / 2 &&
                        std::abs(d1 + d2 - d) < 1e-9 &&
                        chord <= 0.25 * std::min(1.0, std::abs(e));
    if (smooth) return d1 + d2;
    if (std::abs(z1 - z0) < kMinSegment * (1.0 + std::abs(z0))) {
      throw BoundaryHit("phase tracking could not resolve the contour near (" +
                        std::to_string(zm.real()) + ", " + std::to_string(zm.imag()) + ")");
    }
    return segment(z0, zm, f0, fm) + segment(zm, z1, fm, f1);
  }

 private:
  double pole_distance(Complex z0, Complex z1) const {
    const Complex d = z1 - z0;
    double best = std::numeric_limits<double>::infinity();
    for (Complex p : poles_) {
      const double t = std::clamp(std::real((p - z0) * std::conj(d)) / std::norm(d), 0.0, 1.0);
      best = std::min(best, std::abs(p - (z0 + t * d)));
    }
    return best;
  }

  const ScaledFn& f_;
  double clearance_;
  const std::vector<Complex>& poles_;
};

double edge_phase(const ScaledFn& f, Complex a, Complex b, int n0, double clearance,
                  const std::vector<Complex>& poles) {
  EdgeTracker tracker(f, clearance, poles);
  std::vector<Complex> z(n0 + 1);
  std::vector<Scaled> fz(n0 + 1);
  for (int i = 0; i <= n0; ++i) {
    z[i] = a + (b - a) * (static_cast<double>(i) / n0);
    fz[i] = eval_on_contour(f, z[i]);
  }
  double total = 0.0;
  for (int i = 0; i < n0; ++i) total += tracker.segment(z[i], z[i + 1], fz[i], fz[i + 1]);
  return total;
}

int samples_for(double len, double other) {
  const double ratio = len / std::max(other, 1e-300);
  return static_cast<int>(std::clamp(std::ceil(8.0 * ratio), 16.0, 4096.0));
}

double distance_to_cut(const SearchRect& cell, double frac, Complex p) {
  if (cell.splits_vertically()) {
    return std::abs(p.real() - (cell.re_lo() + frac * cell.width()));
  }
  return std::abs(p.imag() - (cell.im_lo() + frac * cell.height()));
}

int scaled_winding(const ScaledFn& f, const SearchRect& rect, double clearance,
                   const std::vector<Complex>& poles);

class Subdivider {
 public:
  // Counting runs on F = f * prod ((z - p)/(z - q))^order with each mirror q
  // well outside the rectangle. F is analytic inside, so a pole just outside
  // an edge cannot pair with a zero just inside and hide a 2 pi turn behind a
  // flat |f|.
  Subdivider(const AnalyticFn& f, const SearchRect& rect, const PoleList& poles,
             const RootFindOptions& opt)
      : f_(f), poles_(poles), opt_(opt) {
    const double reach = std::max(rect.width(), rect.height());
    const double mid = rect.center().imag();
    for (const Pole& p : poles_) {
      const double im = p.location.imag() >= mid ? std::max(rect.im_hi(), p.location.imag()) + reach
                                                 : std::min(rect.im_lo(), p.location.imag()) - reach;
      mirrors_.push_back({p.location.real(), im});
      locations_.push_back(p.location);
    }
    regular_ = [this](Complex z) {
      Scaled v = Scaled::of(f_(z));
      for (std::size_t i = 0; i < poles_.size(); ++i) {
        const Complex factor = (z - poles_[i].location) / (z - mirrors_[i]);
        for (int k = 0; k < poles_[i].order; ++k) v *= factor;
      }
      return v;
    };
  }

  int count(const SearchRect& cell) const {
    return scaled_winding(regular_, cell, opt_.boundary_clearance, locations_);
  }

  void process(const SearchRect& cell, int n) {
    if (n <= 0) return;
    if (n == 1) {
      if (try_single(cell)) return;
      if (cell.diameter() < opt_.cluster_size) {
        throw NonConvergence("Newton failed inside an isolated single-zero cell");
      }
      subdivide(cell, n);
      return;
    }
    if (cell.diameter() < opt_.cluster_size) {
      polish_cluster(cell, n);
      return;
    }
    subdivide(cell, n);
  }

  std::vector<Root> take() { return std::move(roots_); }

 private:
  bool try_single(const SearchRect& cell) {
    const Complex c = cell.center();
    const double w = 0.25 * cell.width(), h = 0.25 * cell.height();
    const std::array<Complex, 5> starts = {c, c + Complex(w, h), c + Complex(-w, h),
                                           c + Complex(-w, -h), c + Complex(w, -h)};
    const double slack = 1e-12 * (1.0 + std::abs(c));
    for (Complex s : starts) {
      auto z = newton_polish(f_, s, opt_.residual_tol, 1, opt_.max_newton_iter);
      if (z && cell.contains(*z, slack)) {
        push(*z, 1);
        return true;
      }
    }
    return false;
  }

  void polish_cluster(const SearchRect& cell, int n) {
    auto z = newton_polish(f_, cell.center(), opt_.residual_tol, n, opt_.max_newton_iter);
    if (!z) z = newton_polish(f_, cell.center(), opt_.residual_tol, 1, opt_.max_newton_iter);
    if (!z) throw NonConvergence("Newton failed to polish a zero cluster");
    push(*z, n);
  }

  void push(Complex z, int mult) {
    Root r;
    r.location = z;
    r.multiplicity = mult;
    r.residual = std::abs(f_(z));
    roots_.push_back(r);
  }

  void subdivide(const SearchRect& cell, int n) {
    const double guard = 1e-3 * std::min(cell.width(), cell.height());
    for (double frac : kSplitFractions) {
      bool near_pole = false;
      for (const Pole& p : poles_) {
        if (cell.contains(p.location) && distance_to_cut(cell, frac, p.location) < guard) {
          near_pole = true;
          break;
        }
      }
      if (near_pole) continue;
      auto [a, b] = cell.split(frac);
      int na = 0, nb = 0;
      try {
        na = count(a);
        nb = count(b);
      } catch (const BoundaryHit&) {
        continue;
      }
      if (na < 0 || nb < 0 || na + nb != n) continue;
      process(a, na);
      process(b, nb);
      return;
    }
    throw BoundaryHit("no admissible cut line for cell");
  }

  const AnalyticFn& f_;
  const PoleList& poles_;
  const RootFindOptions& opt_;
  std::vector<Complex> mirrors_;
  std::vector<Complex> locations_;
  ScaledFn regular_;
  std::vector<Root> roots_;
};

std::vector<Root> merge_clusters(std::vector<Root> roots, double radius) {
  std::sort(roots.begin(), roots.end(), [](const Root& a, const Root& b) {
    if (a.location.real() != b.location.real()) return a.location.real() < b.location.real();
    return a.location.imag() < b.location.imag();
  });
  std::vector<Root> out;
  for (Root& r : roots) {
    auto hit = std::find_if(out.begin(), out.end(), [&](const Root& q) {
      return std::abs(q.location - r.location) < radius;
    });
    if (hit == out.end()) {
      out.push_back(std::move(r));
    } else {
      hit->multiplicity += r.multiplicity;
      if (r.residual < hit->residual) {
        hit->location = r.location;
        hit->residual = r.residual;
      }
    }
  }
  return out;
}

}  // namespace

SearchRect::SearchRect(double re_lo, double re_hi, double im_lo, double im_hi)
    : re_lo_(re_lo), re_hi_(re_hi), im_lo_(im_lo), im_hi_(im_hi) {
  require(std::isfinite(re_lo) && std::isfinite(re_hi) && std::isfinite(im_lo) &&
              std::isfinite(im_hi),
          "search rectangle bounds must be finite");
  require(re_lo < re_hi && im_lo < im_hi, "search rectangle must have positive area");
}

double SearchRect::diameter() const { return std::hypot(width(), height()); }

Complex SearchRect::center() const {
  return {0.5 * (re_lo_ + re_hi_), 0.5 * (im_lo_ + im_hi_)};
}

bool SearchRect::contains(Complex z, double slack) const {
  return z.real() >= re_lo_ - slack && z.real() <= re_hi_ + slack && z.imag() >= im_lo_ - slack &&
         z.imag() <= im_hi_ + slack;
}

bool SearchRect::strictly_contains(Complex z) const {
  return z.real() > re_lo_ && z.real() < re_hi_ && z.imag() > im_lo_ && z.imag() < im_hi_;
}

SearchRect SearchRect::expanded(double by) const {
  return {re_lo_ - by, re_hi_ + by, im_lo_ - by, im_hi_ + by};
}

SearchRect SearchRect::mirrored() const { return {-re_hi_, -re_lo_, im_lo_, im_hi_}; }

std::pair<SearchRect, SearchRect> SearchRect::split(double frac) const {
  if (splits_vertically()) {
    const double cut = re_lo_ + frac * width();
    return {SearchRect(re_lo_, cut, im_lo_, im_hi_), SearchRect(cut, re_hi_, im_lo_, im_hi_)};
  }
  const double cut = im_lo_ + frac * height();
  return {SearchRect(re_lo_, re_hi_, im_lo_, cut), SearchRect(re_lo_, re_hi_, cut, im_hi_)};
}

namespace {

int scaled_winding(const ScaledFn& f, const SearchRect& rect, double clearance,
                   const std::vector<Complex>& poles) {
  const Complex c00(rect.re_lo(), rect.im_lo()), c10(rect.re_hi(), rect.im_lo());
  const Complex c11(rect.re_hi(), rect.im_hi()), c01(rect.re_lo(), rect.im_hi());
  const int nw = samples_for(rect.width(), rect.height());
  const int nh = samples_for(rect.height(), rect.width());
  const double total = edge_phase(f, c00, c10, nw, clearance, poles) +
                       edge_phase(f, c10, c11, nh, clearance, poles) +
                       edge_phase(f, c11, c01, nw, clearance, poles) +
                       edge_phase(f, c01, c00, nh, clearance, poles);
  const double turns = total / kTwoPi;
  const double rounded = std::round(turns);
  if (std::abs(turns - rounded) > 0.05) {
    throw BoundaryHit("accumulated phase is not a multiple of 2 pi");
  }
  return static_cast<int>(rounded);
}

}  // namespace

int winding_count(const AnalyticFn& f, const SearchRect& rect, double clearance) {
  return scaled_winding([&f](Complex z) { return Scaled::of(f(z)); }, rect, clearance, {});
}

int pole_order_inside(const PoleList& poles, const SearchRect& rect) {
  int n = 0;
  for (const Pole& p : poles) {
    if (rect.strictly_contains(p.location)) n += p.order;
  }
  return n;
}

namespace {

void add_symmetric_real_poles(PoleList& out, double im, double re_abs, int order,
                              const SearchRect& rect) {
  for (double re : {re_abs, -re_abs}) {
    const Complex z(re, im);
    if (rect.contains(z)) out.push_back({z, order});
    if (re_abs == 0.0) break;
  }
}

double max_abs_re(const SearchRect& rect) {
  return std::max(std::abs(rect.re_lo()), std::abs(rect.re_hi()));
}

void add_beta_poles(PoleList& out, double c, double X, const SearchRect& rect) {
  require(std::isfinite(X) && X > 1.0, "truncation length X must exceed 1");
  if (!(rect.im_lo() <= 0.0 && rect.im_hi() >= 0.0)) return;
  const double len = X - 1.0;
  const double lim = max_abs_re(rect);
  for (int k = 1;; ++k) {
    const double re = std::sqrt(c + (k * kPi / len) * (k * kPi / len));
    if (re > lim) break;
    add_symmetric_real_poles(out, 0.0, re, 1, rect);
  }
}

}  // namespace

PoleList dispersion_poles(ModeConstant c, std::optional<double> X, const SearchRect& rect,
                          int alpha_order) {
  PoleList out;
  const double lim = max_abs_re(rect);
  if (rect.im_lo() <= -0.5 && rect.im_hi() >= -0.5) {
    for (int k = 1;; ++k) {
      const double re = std::sqrt(c.value() + k * k * kPi * kPi - 0.25);
      if (re > lim) break;
      add_symmetric_real_poles(out, -0.5, re, alpha_order, rect);
    }
  }
  if (X) add_beta_poles(out, c.value(), *X, rect);
  return out;
}

PoleList dispersion_poles_dielectric(ModeConstant c, double delta, std::optional<double> X,
                                     const SearchRect& rect, int alpha_order) {
  require(std::isfinite(delta) && delta > 0.0, "delta must be positive");
  PoleList out;
  const double lim = max_abs_re(rect);
  if (rect.im_lo() <= 0.0 && rect.im_hi() >= 0.0) {
    for (int k = 1;; ++k) {
      const double re = std::sqrt((c.value() + k * k * kPi * kPi) / (1.0 + delta));
      if (re > lim) break;
      add_symmetric_real_poles(out, 0.0, re, alpha_order, rect);
    }
  }
  if (X) add_beta_poles(out, c.value(), *X, rect);
  return out;
}

std::optional<Complex> newton_polish(const AnalyticFn& f, Complex start, double tol,
                                     int multiplicity, int max_iter) {
  auto safe_eval = [&f](Complex z) -> std::optional<Complex> {
    try {
      const Complex v = f(z);
      if (is_finite(v)) return v;
    } catch (const PoleProximity&) {
    }
    return std::nullopt;
  };
  auto fz = safe_eval(start);
  if (!fz) return std::nullopt;
  Complex z = start;
  // Difference step, shrunk with the Newton step near multiple zeros.
  double h_rel = 1e-7;
  for (int it = 0; it < max_iter; ++it) {
    if (std::abs(*fz) == 0.0) break;
    const double h = h_rel * std::max(1.0, std::abs(z));
    const auto fp = safe_eval(z + h);
    const auto fm = safe_eval(z - h);
    if (!fp || !fm) return std::nullopt;
    const Complex d = (*fp - *fm) / (2.0 * h);
    if (std::abs(d) == 0.0 || !is_finite(d)) return std::nullopt;
    const Complex step = static_cast<double>(multiplicity) * *fz / d;
    double lambda = 1.0;
    bool moved = false;
    for (int k = 0; k < 40; ++k) {
      const Complex zn = z - lambda * step;
      const auto fn = safe_eval(zn);
      if (fn && std::abs(*fn) < std::abs(*fz)) {
        z = zn;
        fz = fn;
        moved = true;
        break;
      }
      lambda *= 0.5;
    }
    const bool stalled =
        !moved || (lambda < 1.0 && std::abs(lambda * step) < 1e-15 * (1.0 + std::abs(z)));
    if (stalled && multiplicity > 1 && h_rel > 1e-13) {
      h_rel = std::max(0.01 * h_rel, 1e-13);
      continue;
    }
    if (!moved || std::abs(lambda * step) < 1e-15 * (1.0 + std::abs(z))) break;
    h_rel = std::clamp(0.1 * std::abs(lambda * step) / std::max(1.0, std::abs(z)), 1e-13, 1e-7);
  }
  if (std::abs(*fz) < tol) return z;
  return std::nullopt;
}

std::vector<Root> find_roots(const AnalyticFn& f, const SearchRect& rect, const PoleList& poles,
                             const RootFindOptions& options) {
  std::string last_error;
  for (int attempt = 0; attempt <= options.jitter_retries; ++attempt) {
    // attempt 0 is the rectangle itself; then alternately grow and shrink.
    const double sign = (attempt % 2 == 1) ? 1.0 : -1.0;
    const SearchRect cell =
        attempt == 0 ? rect : rect.expanded(sign * options.jitter * ((attempt + 1) / 2));
    try {
      Subdivider sub(f, cell, poles, options);
      const int n = sub.count(cell);
      if (n < 0) throw BoundaryHit("negative zero count: pole list incomplete");
      sub.process(cell, n);
      auto roots = merge_clusters(sub.take(), options.cluster_size);
      // Jittered rectangles may admit zeros just outside the requested one.
      std::erase_if(roots, [&](const Root& r) { return !rect.contains(r.location); });
      return roots;
    } catch (const BoundaryHit& e) {
      last_error = e.what();
    }
  }
  throw BoundaryHit("root search failed after rectangle jitter: " + last_error);
}

std::vector<Root> find_roots(const AnalyticFn& f, const SearchRect& rect, double tol,
                             const PoleList& poles) {
  RootFindOptions opt;
  opt.residual_tol = tol;
  return find_roots(f, rect, poles, opt);
}

}  // namespace maxspec
