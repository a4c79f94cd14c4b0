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

// Checks behind the essential spectrum of the conductive waveguide: the
// Dirichlet-to-Neumann sign pattern on the imaginary axis, the decay of the
// Weyl sequence at w = -i/2, and the determinant of the Fourier symbol.

#pragma once

#include <array>
#include <string>
#include <vector>

#include <json.hpp>

#include "errors.hpp"

namespace maxspec {

struct DtNEntry {
  double kappa = 0.0;
  // kappa ((1 - nu) coth kappa - nu)
  double value = 0.0;
};

// Transverse frequencies kappa = sqrt(c) of sin(n2 pi x2/L2) sin(n3 pi x3/L3),
// n2, n3 >= 1, each mode counted once, lowest n_modes by kappa.
std::vector<DtNEntry> dtn_entries(double nu, double L2, double L3, int n_modes);

enum class SignPattern { all_positive, one_sign_change, all_negative, other };

const char* to_string(SignPattern p);

// Sign sequence along increasing kappa. one_sign_change means positive, then
// negative; zero entries give other.
SignPattern dtn_sign_pattern(const std::vector<DtNEntry>& entries);

// (1/kappa_1) ||Delta u||_{L2} / ||grad u||_{L2(x1 > 1)} for the Weyl
// sequence element with transverse frequency kappa, where kappa_1 is the
// lowest transverse frequency of the (L2, L3) cross-section. The numerator is
// integrated numerically to relative 1e-10.
double weyl_decay_ratio(double kappa, double L2 = 1.0, double L3 = 2.0);

using SymbolMatrix = std::array<std::array<Complex, 6>, 6>;

// Fourier symbol of [[-i w, curl], [curl, i w]] on cos/sin modes in x1.
// The re-derived layout; the printed one differs in the signs of entries
// (2,6), (3,5) and (5,1) (1-based) and is kept for comparison.
enum class SymbolLayout { derived, printed };

SymbolMatrix fourier_symbol(Complex omega, double xi, int n2, int n3, double L2, double L3,
                            SymbolLayout layout = SymbolLayout::derived);

// Determinant by LU elimination with partial pivoting.
Complex determinant(SymbolMatrix m);

struct SymbolDeterminant {
  Complex numeric;
  // w^2 (xi^2 + c - w^2)^2
  Complex closed_form;
};

SymbolDeterminant fourier_symbol_det(Complex omega, double xi, int n2, int n3, double L2,
                                     double L3);

struct CheckReport {
  std::string check;
  nlohmann::json parameters;
  bool pass = false;
  std::string detail;

  nlohmann::json to_json() const;
};

CheckReport dtn_check(double L2 = 1.0, double L3 = 2.0, int n_modes = 200);
CheckReport weyl_check(double L2 = 1.0, double L3 = 2.0);
CheckReport fourier_check(int samples = 10000, unsigned seed = 20260101);

std::vector<CheckReport> appendix_checks();

}  // namespace maxspec
