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

// Eigenvalues of the Maxwell pencil on the cylinder (0, inf) x (0, L2) x (0, L3)
// and on its truncations (0, X) x ..., with a slab on 0 < x1 < 1 that is
// either conducting (sigma = 1) or a dielectric (eps = 1 + delta).

#pragma once

#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rootfind.hpp"
#include "spectra.hpp"

namespace maxspec {

enum class Variant { conductive, permittivity };

const char* to_string(Variant v);

struct WaveguideModel {
  double L2 = 1.0;
  double L3 = 2.0;
  Variant variant = Variant::conductive;
  double delta = 0.0;  // permittivity variant only
  std::optional<double> X;

  void validate() const;
};

struct ModeGroup {
  double c = 0.0;
  std::vector<std::pair<int, int>> members;

  int degeneracy() const { return static_cast<int>(members.size()); }
};

// All (n2, n3) != (0, 0) with c <= c_max, grouped by equal c, ascending.
std::vector<ModeGroup> modes_up_to(const WaveguideModel& model, double c_max);

// Largest mode constant searched: max|w|^2 + max|w| + 1, with the slab factor
// (1 + delta) on the first term for the dielectric, raised there until the
// "-" roots accumulating at 0 lie closer to 0 than the window.
double default_c_max(const WaveguideModel& model, const SearchRect& rect);

// The per-mode function whose zeros are sought, with its pole list. For the
// infinite cylinder it is the squared (branch-free) form.
struct ModeProblem {
  AnalyticFn f;
  PoleList poles;
};
ModeProblem mode_problem(const WaveguideModel& model, double c, const SearchRect& rect);

// Sign s in {+1, -1} minimising |g(alpha^2) + s beta| at w.
int sign_branch_at(const WaveguideModel& model, double c, Complex w);

std::vector<Root> eigenvalues_true(const WaveguideModel& model, const SearchRect& rect,
                                   std::optional<double> c_max = std::nullopt,
                                   const RootFindOptions& options = {});
std::vector<Root> eigenvalues_truncated(const WaveguideModel& model, const SearchRect& rect,
                                        std::optional<double> c_max = std::nullopt,
                                        const RootFindOptions& options = {});

struct TrajectoryPoint {
  double X;
  Complex location;
};

struct Trajectory {
  double c = 0.0;
  std::vector<std::pair<int, int>> members;
  // Ascending in X.
  std::vector<TrajectoryPoint> points;
  // Shares an earlier point with another trajectory.
  bool ambiguous = false;

  Complex limit() const { return points.back().location; }
  double last_X() const { return points.back().X; }
  // |location(last X) - location(previous X)|, 0 for single points.
  double last_step() const;
};

struct SweepOptions {
  RootFindOptions root;
  // Largest distance between a root and its predecessor at the previous X.
  double match_radius = 0.25;
};

struct Sweep {
  WaveguideModel model;
  std::vector<double> X_list;
  std::vector<Trajectory> trajectories;
  // Roots found per X value, in X_list order.
  std::vector<std::vector<Root>> roots;
  // Trajectories that share a predecessor with another one.
  int ambiguous_matches = 0;
};

Sweep truncation_sweep(const WaveguideModel& model, const std::vector<double>& X_list,
                       const SearchRect& rect, std::optional<double> c_max = std::nullopt,
                       const SweepOptions& options = {});

// Residual of the squared infinite-cylinder dispersion at w for mode c.
double true_residual(const WaveguideModel& model, double c, Complex w);

enum class Classification {
  converged_to_eigenvalue,
  in_essential,
  pollution_candidate,
  violation,
  unconverged,
};

const char* to_string(Classification c);

struct TrajectoryVerdict {
  std::size_t trajectory = 0;
  Complex limit;
  Classification kind = Classification::unconverged;
  double distance_eigenvalue = 0.0;
  double distance_essential = 0.0;
  double tolerance = 0.0;
};

struct PollutionReport {
  std::vector<TrajectoryVerdict> verdicts;
  int count(Classification c) const;
};

// Trajectories alive at the last X with at least two points are classified
// against the nearer of the true eigenvalues and sigma_e, then against
// pollution U imag_interval.
// The effective tolerance is max(tol, 2 * last step); steps larger than
// unconverged_step mark the trajectory unconverged.
PollutionReport pollution_report(const Sweep& sweep, const std::vector<Root>& true_roots,
                                 const SpectrumSet& essential, const SpectrumSet& pollution,
                                 const SpectrumSet& imag_interval, double tol = 1e-6,
                                 double unconverged_step = 0.05);

// max |Im w + 1/2| over roots with re_min <= |Re w| <= re_max.
double branch_asymptote_check(const std::vector<Root>& roots, double re_min,
                              double re_max = std::numeric_limits<double>::infinity());

}  // namespace maxspec
