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

// Upper bounds for the resolvent norm of the Maxwell pencil below the
// enclosure strip.

#pragma once

#include <optional>
#include <vector>

#include "enclosure.hpp"
#include "rootfind.hpp"

namespace maxspec {

// With q = sigma_max/eps_min and m = min(eps_min, mu_min):
//   Re w != 0, Im w < -q/2:  (1/m) / (|Im w| - q/2) * (1 + (q/2)^2 / (Re w)^2)
//   Im w < -q:               (1/m) / (|Im w| - q)
// The smaller applicable bound is returned; nothing where neither applies.
std::optional<double> resolvent_bound(Complex omega, const MaterialBounds& b);

struct LevelGrid {
  int nx = 0, ny = 0;
  std::vector<double> re;  // nx abscissae
  std::vector<double> im;  // ny ordinates
  std::vector<std::optional<double>> values;  // row-major, values[j * nx + i]

  const std::optional<double>& at(int i, int j) const { return values[j * nx + i]; }
};

// Regular grid over the closed window; nx, ny >= 2 (a degenerate 1x1 grid
// at the window centre is produced for nx = ny = 1).
LevelGrid resolvent_levelgrid(const MaterialBounds& b, const SearchRect& window, int nx, int ny);

}  // namespace maxspec
