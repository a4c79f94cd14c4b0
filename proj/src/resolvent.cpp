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

#include "resolvent.hpp"

#include <algorithm>
#include <cmath>

namespace maxspec {

std::optional<double> resolvent_bound(Complex omega, const MaterialBounds& b) {
  b.validate();
  require_finite(omega, "omega");
  const double q = b.sigma_max / b.eps_min;
  const double m = std::min(b.eps_min, b.mu_min);
  const double x = omega.real(), y = omega.imag();
  std::optional<double> best;
  if (x != 0.0 && y < -0.5 * q) {
    const double half = 0.5 * q;
    best = (1.0 / m) / (std::abs(y) - half) * (1.0 + half * half / (x * x));
  }
  if (y < -q) {
    const double second = (1.0 / m) / (std::abs(y) - q);
    best = best ? std::min(*best, second) : second;
  }
  return best;
}

LevelGrid resolvent_levelgrid(const MaterialBounds& b, const SearchRect& window, int nx, int ny) {
  const bool single = nx == 1 && ny == 1;
  require(single || (nx >= 2 && ny >= 2), "level grid needs nx, ny >= 2");
  LevelGrid g;
  g.nx = nx;
  g.ny = ny;
  auto axis = [single](double lo, double hi, int n) {
    std::vector<double> v(n);
    for (int i = 0; i < n; ++i) {
      v[i] = single ? 0.5 * (lo + hi) : lo + (hi - lo) * static_cast<double>(i) / (n - 1);
    }
    return v;
  };
  g.re = axis(window.re_lo(), window.re_hi(), nx);
  g.im = axis(window.im_lo(), window.im_hi(), ny);
  g.values.reserve(static_cast<std::size_t>(nx) * ny);
  for (int j = 0; j < ny; ++j) {
    for (int i = 0; i < nx; ++i) g.values.push_back(resolvent_bound({g.re[i], g.im[j]}, b));
  }
  return g;
}

}  // namespace maxspec
