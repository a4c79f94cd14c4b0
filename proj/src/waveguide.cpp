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

#include "waveguide.hpp"

#include <algorithm>
#include <cmath>

#include "parallel.hpp"

namespace maxspec {

const char* to_string(Variant v) {
  return v == Variant::conductive ? "conductive" : "permittivity";
}

void WaveguideModel::validate() const {
  require(std::isfinite(L2) && std::isfinite(L3) && L2 > 0.0 && L3 > 0.0,
          "cross-section lengths L2, L3 must be positive");
  if (variant == Variant::permittivity) {
    require(std::isfinite(delta) && delta > 0.0, "permittivity contrast delta must be positive");
  }
  if (X) require(std::isfinite(*X) && *X > 1.0, "truncation length X must exceed 1");
}

std::vector<ModeGroup> modes_up_to(const WaveguideModel& model, double c_max) {
  model.validate();
  require(std::isfinite(c_max), "c_max must be finite");
  std::vector<std::pair<double, std::pair<int, int>>> all;
  const double a2 = kPi / model.L2, a3 = kPi / model.L3;
  for (int n2 = 0; a2 * n2 * a2 * n2 <= c_max; ++n2) {
    for (int n3 = 0;; ++n3) {
      if (n2 == 0 && n3 == 0) continue;
      const double c = a2 * a2 * n2 * n2 + a3 * a3 * n3 * n3;
      if (c > c_max) break;
      all.push_back({c, {n2, n3}});
    }
  }
  std::sort(all.begin(), all.end());
  std::vector<ModeGroup> groups;
  for (const auto& [c, mode] : all) {
    if (!groups.empty() && std::abs(c - groups.back().c) <= 1e-12 * c) {
      groups.back().members.push_back(mode);
    } else {
      groups.push_back({c, {mode}});
    }
  }
  return groups;
}

double default_c_max(const WaveguideModel& model, const SearchRect& rect) {
  double r = 0.0;
  for (double x : {rect.re_lo(), rect.re_hi()}) {
    for (double y : {rect.im_lo(), rect.im_hi()}) r = std::max(r, std::hypot(x, y));
  }
  const double slab = model.variant == Variant::permittivity ? 1.0 + model.delta : 1.0;
  double c_max = slab * r * r + r + 1.0;
  if (model.variant == Variant::permittivity) {
    // "-" branch roots of mode c sit near sqrt(2c/delta) exp(-sqrt(c)) and
    // accumulate at 0. Keep every c whose root reaches half the window's
    // distance from 0.
    const double dx = std::max({0.0, rect.re_lo(), -rect.re_hi()});
    const double dy = std::max({0.0, rect.im_lo(), -rect.im_hi()});
    const double d = std::hypot(dx, dy);
    if (d > 0.0) {
      const double k = std::sqrt(2.0 / model.delta);
      double s = std::max(1.0, std::sqrt(c_max));
      while (k * s * std::exp(-s) >= 0.5 * d) s += 0.05;
      c_max = std::max(c_max, s * s);
    }
  }
  return c_max;
}

ModeProblem mode_problem(const WaveguideModel& model, double c_value, const SearchRect& search) {
  model.validate();
  // Poles near the rectangle, not only inside it, are handed to the solver.
  const SearchRect rect = search.expanded(0.1);
  const ModeConstant c(c_value);
  const double delta = model.delta;
  ModeProblem p;
  if (model.variant == Variant::conductive) {
    if (model.X) {
      const double X = *model.X;
      p.f = [c, X](Complex w) { return dispersion_truncated(w, c, X); };
      p.poles = dispersion_poles(c, X, rect, 1);
    } else {
      p.f = [c](Complex w) { return dispersion_true_sq(w, c); };
      p.poles = dispersion_poles(c, std::nullopt, rect, 2);
    }
  } else {
    if (model.X) {
      const double X = *model.X;
      p.f = [c, delta, X](Complex w) { return dispersion_selfadjoint_truncated(w, c, delta, X); };
      p.poles = dispersion_poles_dielectric(c, delta, X, rect, 1);
    } else {
      p.f = [c, delta](Complex w) { return dispersion_selfadjoint_sq(w, c, delta); };
      p.poles = dispersion_poles_dielectric(c, delta, std::nullopt, rect, 2);
    }
  }
  return p;
}

int sign_branch_at(const WaveguideModel& model, double c_value, Complex w) {
  const ModeConstant c(c_value);
  const bool cond = model.variant == Variant::conductive;
  const Complex plus = cond ? dispersion_true(w, c, +1)
                            : dispersion_selfadjoint(w, c, model.delta, +1);
  const Complex minus = cond ? dispersion_true(w, c, -1)
                             : dispersion_selfadjoint(w, c, model.delta, -1);
  return std::abs(plus) <= std::abs(minus) ? +1 : -1;
}

double true_residual(const WaveguideModel& model, double c_value, Complex w) {
  const ModeConstant c(c_value);
  return model.variant == Variant::conductive
             ? std::abs(dispersion_true_sq(w, c))
             : std::abs(dispersion_selfadjoint_sq(w, c, model.delta));
}

namespace {

bool by_location(const Root& a, const Root& b) {
  if (a.location.real() != b.location.real()) return a.location.real() < b.location.real();
  if (a.location.imag() != b.location.imag()) return a.location.imag() < b.location.imag();
  return a.mode_constant < b.mode_constant;
}

std::vector<Root> group_roots(const WaveguideModel& model, const ModeGroup& g,
                              const SearchRect& rect, const RootFindOptions& options) {
  const ModeProblem p = mode_problem(model, g.c, rect);
  auto roots = find_roots(p.f, rect, p.poles, options);
  for (Root& r : roots) {
    r.mode_constant = g.c;
    r.modes = g.members;
    r.multiplicity *= g.degeneracy();
    if (!model.X) r.sign_branch = sign_branch_at(model, g.c, r.location);
  }
  return roots;
}

std::vector<Root> solve(const WaveguideModel& model, const SearchRect& rect,
                        std::optional<double> c_max, const RootFindOptions& options) {
  const auto groups = modes_up_to(model, c_max.value_or(default_c_max(model, rect)));
  std::vector<std::vector<Root>> per(groups.size());
  parallel_for(groups.size(), [&](std::size_t i) {
    per[i] = group_roots(model, groups[i], rect, options);
  });
  std::vector<Root> out;
  for (auto& v : per) out.insert(out.end(), v.begin(), v.end());
  std::sort(out.begin(), out.end(), by_location);
  return out;
}

}  // namespace

std::vector<Root> eigenvalues_true(const WaveguideModel& model, const SearchRect& rect,
                                   std::optional<double> c_max, const RootFindOptions& options) {
  require(!model.X.has_value(), "eigenvalues_true needs a model without truncation");
  return solve(model, rect, c_max, options);
}

std::vector<Root> eigenvalues_truncated(const WaveguideModel& model, const SearchRect& rect,
                                        std::optional<double> c_max,
                                        const RootFindOptions& options) {
  require(model.X.has_value(), "eigenvalues_truncated needs a truncation length X");
  return solve(model, rect, c_max, options);
}

double Trajectory::last_step() const {
  if (points.size() < 2) return 0.0;
  return std::abs(points.back().location - points[points.size() - 2].location);
}

Sweep truncation_sweep(const WaveguideModel& model, const std::vector<double>& X_list,
                       const SearchRect& rect, std::optional<double> c_max,
                       const SweepOptions& options) {
  require(X_list.size() >= 2, "a sweep needs at least two truncation lengths");
  for (std::size_t i = 0; i < X_list.size(); ++i) {
    require(std::isfinite(X_list[i]) && X_list[i] > 1.0, "truncation lengths must exceed 1");
    if (i) require(X_list[i] > X_list[i - 1], "truncation lengths must be strictly ascending");
  }
  require(std::isfinite(options.match_radius) && options.match_radius > 0.0,
          "match radius must be positive");
  WaveguideModel base = model;
  base.X.reset();
  base.validate();
  const auto groups = modes_up_to(base, c_max.value_or(default_c_max(base, rect)));
  const std::size_t nx = X_list.size(), ng = groups.size();

  // roots[k][g]: roots of group g at X_list[k]
  std::vector<std::vector<std::vector<Root>>> roots(nx, std::vector<std::vector<Root>>(ng));
  parallel_for(nx * ng, [&](std::size_t idx) {
    const std::size_t k = idx / ng, g = idx % ng;
    WaveguideModel m = base;
    m.X = X_list[k];
    roots[k][g] = group_roots(m, groups[g], rect, options.root);
  });

  // Trajectories are built backwards: each root at a given X takes the
  // nearest root of the same group at the previous X as its predecessor.
  // Roots at earlier X that no later root claimed start their own chains.
  std::vector<std::vector<Trajectory>> per_group(ng);
  std::vector<int> ambiguous(ng, 0);
  parallel_for(ng, [&](std::size_t g) {
    std::vector<std::vector<int>> used(nx);
    for (std::size_t k = 0; k < nx; ++k) used[k].assign(roots[k][g].size(), 0);
    for (std::size_t k = nx; k-- > 0;) {
      for (std::size_t j = 0; j < roots[k][g].size(); ++j) {
        if (used[k][j]) continue;
        used[k][j] = 1;
        std::vector<TrajectoryPoint> back = {{X_list[k], roots[k][g][j].location}};
        bool shared = false;
        for (std::size_t q = k; q-- > 0;) {
          const auto& prev = roots[q][g];
          const Complex w = back.back().location;
          int best = -1;
          for (std::size_t i = 0; i < prev.size(); ++i) {
            const double d = std::abs(prev[i].location - w);
            if (d <= options.match_radius &&
                (best < 0 || d < std::abs(prev[best].location - w))) {
              best = static_cast<int>(i);
            }
          }
          if (best < 0) break;
          if (used[q][best]++) shared = true;
          back.push_back({X_list[q], prev[best].location});
        }
        std::reverse(back.begin(), back.end());
        per_group[g].push_back({groups[g].c, groups[g].members, std::move(back), shared});
        if (shared) ++ambiguous[g];
      }
    }
  });

  Sweep s;
  s.model = base;
  s.X_list = X_list;
  for (std::size_t g = 0; g < ng; ++g) {
    for (auto& t : per_group[g]) s.trajectories.push_back(std::move(t));
    s.ambiguous_matches += ambiguous[g];
  }
  s.roots.resize(nx);
  for (std::size_t k = 0; k < nx; ++k) {
    for (auto& v : roots[k]) s.roots[k].insert(s.roots[k].end(), v.begin(), v.end());
    std::sort(s.roots[k].begin(), s.roots[k].end(), by_location);
  }
  return s;
}

const char* to_string(Classification c) {
  switch (c) {
    case Classification::converged_to_eigenvalue: return "CONVERGED_TO_EIGENVALUE";
    case Classification::in_essential: return "IN_ESSENTIAL";
    case Classification::pollution_candidate: return "POLLUTION_CANDIDATE";
    case Classification::violation: return "VIOLATION";
    case Classification::unconverged: return "UNCONVERGED";
  }
  return "UNKNOWN";
}

int PollutionReport::count(Classification c) const {
  return static_cast<int>(std::count_if(verdicts.begin(), verdicts.end(),
                                        [c](const TrajectoryVerdict& v) { return v.kind == c; }));
}

PollutionReport pollution_report(const Sweep& sweep, const std::vector<Root>& true_roots,
                                 const SpectrumSet& essential, const SpectrumSet& pollution,
                                 const SpectrumSet& imag_interval, double tol,
                                 double unconverged_step) {
  require(!sweep.trajectories.empty(), "pollution report needs a nonempty sweep");
  require(std::isfinite(tol) && tol >= 0.0, "tolerance must be nonnegative");
  const double last_X = sweep.X_list.empty() ? 0.0 : sweep.X_list.back();
  PollutionReport report;
  for (std::size_t i = 0; i < sweep.trajectories.size(); ++i) {
    const Trajectory& t = sweep.trajectories[i];
    if (t.points.empty() || t.last_X() != last_X) continue;
    TrajectoryVerdict v;
    v.trajectory = i;
    v.limit = t.limit();
    v.tolerance = std::max(tol, 2.0 * t.last_step());
    v.distance_eigenvalue = std::numeric_limits<double>::infinity();
    for (const Root& r : true_roots) {
      v.distance_eigenvalue = std::min(v.distance_eigenvalue, std::abs(r.location - v.limit));
    }
    v.distance_essential = essential.distance(v.limit);
    if (t.points.size() < 2 || t.last_step() > unconverged_step) {
      v.kind = Classification::unconverged;
    } else if (std::min(v.distance_eigenvalue, v.distance_essential) <= v.tolerance) {
      v.kind = v.distance_eigenvalue <= v.distance_essential ? Classification::converged_to_eigenvalue
                                                              : Classification::in_essential;
    } else if (pollution.contains(v.limit, v.tolerance) ||
               imag_interval.contains(v.limit, v.tolerance)) {
      v.kind = Classification::pollution_candidate;
    } else {
      v.kind = Classification::violation;
    }
    report.verdicts.push_back(v);
  }
  return report;
}

double branch_asymptote_check(const std::vector<Root>& roots, double re_min, double re_max) {
  require(std::isfinite(re_min) && re_min > 0.0, "re_min must be positive");
  require(re_max >= re_min, "re_max must not be below re_min");
  bool any = false;
  double worst = 0.0;
  for (const Root& r : roots) {
    const double a = std::abs(r.location.real());
    if (a < re_min || a > re_max) continue;
    any = true;
    worst = std::max(worst, std::abs(r.location.imag() + 0.5));
  }
  if (!any) throw NoQualifyingRoots("no root with |Re w| in the requested range");
  return worst;
}

}  // namespace maxspec
