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

#include "export.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace maxspec {

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

void round_numbers(nlohmann::json& j) {
  if (j.is_number_float()) {
    const double v = j.get<double>();
    if (std::isfinite(v)) j = std::strtod(format_number(v).c_str(), nullptr);
  } else if (j.is_structured()) {
    for (auto& child : j) round_numbers(child);
  }
}

namespace {

void append_root(std::string& out, const Root& r) {
  out += format_number(r.location.real()) + ',' + format_number(r.location.imag()) + ',' +
         std::to_string(r.multiplicity) + ',' + format_number(r.mode_constant) + ',';
  if (!r.modes.empty()) {
    out += std::to_string(r.modes.front().first) + ',' + std::to_string(r.modes.front().second);
  } else {
    out += ',';
  }
  out += ',';
  if (r.sign_branch) out += *r.sign_branch > 0 ? "+1" : "-1";
  out += ',' + format_number(r.residual) + '\n';
}

constexpr const char* kRootHeader = "re,im,mult,c,n2,n3,sign,residual\n";

}  // namespace

std::string roots_csv(const std::vector<Root>& roots) {
  std::string out = kRootHeader;
  for (const Root& r : roots) append_root(out, r);
  return out;
}

std::string sweep_csv(const Sweep& sweep) {
  std::string out = std::string("X,") + kRootHeader;
  for (std::size_t k = 0; k < sweep.roots.size() && k < sweep.X_list.size(); ++k) {
    for (const Root& r : sweep.roots[k]) {
      out += format_number(sweep.X_list[k]) + ',';
      append_root(out, r);
    }
  }
  return out;
}

std::string trajectories_csv(const Sweep& sweep) {
  std::string out = "trajectory,X,re,im,c\n";
  for (std::size_t i = 0; i < sweep.trajectories.size(); ++i) {
    const Trajectory& t = sweep.trajectories[i];
    for (const TrajectoryPoint& p : t.points) {
      out += std::to_string(i) + ',' + format_number(p.X) + ',' +
             format_number(p.location.real()) + ',' + format_number(p.location.imag()) + ',' +
             format_number(t.c) + '\n';
    }
  }
  return out;
}

std::string enclosure_csv(const std::vector<BoundarySample>& samples) {
  std::string out = "re,im,branch\n";
  for (const BoundarySample& s : samples) {
    out += format_number(s.point.real()) + ',' + format_number(s.point.imag()) + ',' +
           std::to_string(s.branch) + '\n';
  }
  return out;
}

std::string resolvent_csv(const LevelGrid& grid) {
  std::string out = "re,im,bound\n";
  for (int j = 0; j < grid.ny; ++j) {
    for (int i = 0; i < grid.nx; ++i) {
      out += format_number(grid.re[i]) + ',' + format_number(grid.im[j]) + ',';
      if (const auto& v = grid.at(i, j)) out += format_number(*v);
      out += '\n';
    }
  }
  return out;
}

}  // namespace maxspec
