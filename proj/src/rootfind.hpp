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

// Zeros of a meromorphic function inside an axis-aligned rectangle.
//
// Counting uses the argument principle evaluated by continuous phase tracking
// along the boundary (no derivative of f is needed on the contour). Poles are
// supplied analytically, so every cell count is converted to a zero count
// Z = winding + sum(pole orders inside). Cells are bisected until they hold
// at most one zero, or until they are smaller than the cluster size, and the
// survivors are polished by damped Newton iteration.

#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "specfun.hpp"

namespace maxspec {

using AnalyticFn = std::function<Complex(Complex)>;

class SearchRect {
 public:
  SearchRect(double re_lo, double re_hi, double im_lo, double im_hi);

  double re_lo() const { return re_lo_; }
  double re_hi() const { return re_hi_; }
  double im_lo() const { return im_lo_; }
  double im_hi() const { return im_hi_; }
  double width() const { return re_hi_ - re_lo_; }
  double height() const { return im_hi_ - im_lo_; }
  double diameter() const;
  Complex center() const;

  // Closed containment, optionally widened by `slack`.
  bool contains(Complex z, double slack = 0.0) const;
  bool strictly_contains(Complex z) const;

  SearchRect expanded(double by) const;
  // Reflection w -> -conj(w).
  SearchRect mirrored() const;
  // Cut across the longer side at re_lo + frac * width (or the im analogue).
  std::pair<SearchRect, SearchRect> split(double frac) const;
  bool splits_vertically() const { return width() >= height(); }

 private:
  double re_lo_, re_hi_, im_lo_, im_hi_;
};

struct Pole {
  Complex location;
  int order = 1;
};
using PoleList = std::vector<Pole>;

struct Root {
  Complex location;
  int multiplicity = 1;
  double residual = 0.0;
  // Which of g(alpha^2) +/- beta vanishes, for the squared (branch-free) forms.
  std::optional<int> sign_branch;
  // Transverse modes (n2, n3) sharing this root; empty for plain functions.
  std::vector<std::pair<int, int>> modes;
  double mode_constant = 0.0;
};

struct RootFindOptions {
  double residual_tol = 1e-10;
  double cluster_size = 1e-6;
  double boundary_clearance = 1e-9;
  int max_newton_iter = 100;
  int jitter_retries = 5;
  double jitter = 1e-6;
};

// Z - P inside rect, by phase tracking along the counter-clockwise boundary.
// Throws BoundaryHit if |f| at a sample drops below `clearance` times the
// geometric mean of its neighbours, or if f cannot be evaluated on the contour.
int winding_count(const AnalyticFn& f, const SearchRect& rect, double clearance = 1e-9);

// Sum of pole orders strictly inside rect.
int pole_order_inside(const PoleList& poles, const SearchRect& rect);

// Poles of the waveguide dispersion functions inside rect (closed).
//
// Conducting slab: alpha^2 = -k^2 pi^2, i.e. w = -i/2 +/- sqrt(c + k^2 pi^2 - 1/4),
// with order `alpha_order` (2 for the squared semi-infinite form). When X is
// given, the beta-term adds simple poles at w = +/- sqrt(c + k^2 pi^2/(X-1)^2).
PoleList dispersion_poles(ModeConstant c, std::optional<double> X, const SearchRect& rect,
                          int alpha_order = 1);
// Dielectric slab: (1 + delta) w^2 = c + k^2 pi^2.
PoleList dispersion_poles_dielectric(ModeConstant c, double delta, std::optional<double> X,
                                     const SearchRect& rect, int alpha_order = 1);

// All zeros of f in rect, each with |f(location)| < options.residual_tol.
// Throws NonConvergence, or BoundaryHit after `jitter_retries` perturbations.
// `poles` must list every pole inside rect; poles close outside it may be
// listed too and make counting more robust.
std::vector<Root> find_roots(const AnalyticFn& f, const SearchRect& rect, const PoleList& poles,
                             const RootFindOptions& options = {});
std::vector<Root> find_roots(const AnalyticFn& f, const SearchRect& rect, double tol,
                             const PoleList& poles);

// Damped Newton with central-difference derivative. `multiplicity` scales the
// step (modified Newton for clustered zeros). Returns the final iterate when
// |f| < tol, nothing otherwise.
std::optional<Complex> newton_polish(const AnalyticFn& f, Complex start, double tol,
                                     int multiplicity = 1, int max_iter = 100);

}  // namespace maxspec
