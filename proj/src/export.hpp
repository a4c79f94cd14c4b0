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

// CSV writers. One header line, ',' separators, '\n' line endings and
// numbers with 12 significant digits.

#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "enclosure.hpp"
#include "resolvent.hpp"
#include "waveguide.hpp"

namespace maxspec {

// %.12g, with "inf", "-inf" and "nan" spelled out.
std::string format_number(double v);

// Rounds every number in j to 12 significant digits, in place.
void round_numbers(nlohmann::json& j);

// re,im,mult,c,n2,n3,sign,residual. n2, n3 are the first member of the mode
// group; sign is empty for truncated roots.
std::string roots_csv(const std::vector<Root>& roots);

// X,re,im,mult,c,n2,n3,sign,residual: every root at every X of the sweep.
std::string sweep_csv(const Sweep& sweep);

// trajectory,X,re,im,c
std::string trajectories_csv(const Sweep& sweep);

// re,im,branch
std::string enclosure_csv(const std::vector<BoundarySample>& samples);

// re,im,bound with an empty bound where the estimate is absent.
std::string resolvent_csv(const LevelGrid& grid);

}  // namespace maxspec
