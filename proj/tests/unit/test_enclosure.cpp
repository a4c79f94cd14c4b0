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

#include <gtest/gtest.h>

#include <random>

#include "enclosure.hpp"

namespace maxspec {
namespace {

MaterialBounds slab_bounds() {
  MaterialBounds b;
  b.sigma_max = 1.0;
  b.lambda_min = kPi * kPi / 4;
  b.lambda_e_min = kPi * kPi / 4;
  return b;
}

MaterialBounds fig_bounds(double lambda_min) {
  MaterialBounds b;
  b.sigma_max = 2.0;
  b.lambda_min = lambda_min;
  b.lambda_e_min = std::max(lambda_min, 5.0);
  return b;
}

TEST(Enclosure, Examples) {
  const auto b = slab_bounds();
  EXPECT_TRUE(enclosure_contains({0, -0.25}, b));
  EXPECT_FALSE(enclosure_contains({1, -0.25}, b));
  EXPECT_TRUE(enclosure_contains({2, -0.25}, b));
  EXPECT_FALSE(enclosure_contains({2, -0.75}, b));
  EXPECT_FALSE(enclosure_contains({0, -1.1}, b));
}

TEST(Enclosure, ValidatesBounds) {
  auto b = slab_bounds();
  b.eps_min = 2.0;
  EXPECT_THROW(enclosure_contains({1, 0}, b), InvalidArgument);
  b = slab_bounds();
  b.lambda_e_min = 1.0;
  EXPECT_THROW(spectral_free_gap(b), InvalidArgument);
}

TEST(Enclosure, Gap) {
  EXPECT_DOUBLE_EQ(spectral_free_gap(slab_bounds()), kPi / 2);
  EXPECT_EQ(spectral_free_gap(fig_bounds(0.0)), 0.0);
  MaterialBounds b;
  b.eps_min = 1;
  b.eps_max = 4;
  b.lambda_min = 16;
  b.lambda_e_min = 16;
  EXPECT_DOUBLE_EQ(spectral_free_gap(b), 2.0);
}

TEST(Enclosure, Thresholds) {
  EXPECT_EQ(threshold_case(fig_bounds(0.5)), ThresholdCase::case_i);
  EXPECT_EQ(threshold_case(fig_bounds(1.2)), ThresholdCase::case_ii);
  EXPECT_EQ(threshold_case(fig_bounds(2.0)), ThresholdCase::case_iii);
  EXPECT_EQ(threshold_case(fig_bounds(0.0)), ThresholdCase::below_i);
  EXPECT_STREQ(to_string(ThresholdCase::case_ii), "case_ii");
}

TEST(Enclosure, ConstantCoefficient) {
  EXPECT_TRUE(enclosure_constant({1, -0.5}, 1, 1, 1, 0));
  EXPECT_FALSE(enclosure_constant({1, -0.5}, 1, 1, 1, 2));
  EXPECT_FALSE(enclosure_constant({1, -0.3}, 1, 1, 1, 0));
  EXPECT_TRUE(enclosure_constant({0, -0.7}, 1, 1, 1, 0));
}

TEST(Enclosure, ConstantCaseAgreesWithGeneral) {
  MaterialBounds b;
  b.eps_min = b.eps_max = 1.5;
  b.mu_min = b.mu_max = 0.8;
  b.sigma_min = b.sigma_max = 1.2;
  b.lambda_min = b.lambda_e_min = 2.0;
  const double q = 1.2 / 1.5;
  for (int i = 0; i < 200; ++i) {
    for (int j = 0; j < 200; ++j) {
      const Complex w(-3 + 6.0 * i / 199, -1.0 + 1.0 * j / 199);
      ASSERT_EQ(enclosure_contains(w, b, 0), enclosure_constant(w, 1.5, 1.2, 0.8, 2.0, 0)) << w;
    }
    // The grid barely hits the line, so probe it directly.
    const Complex on(-3 + 6.0 * i / 199, -0.5 * q);
    ASSERT_EQ(enclosure_contains(on, b), enclosure_constant(on, 1.5, 1.2, 0.8, 2.0)) << on;
  }
}

TEST(Enclosure, MonotoneInParameters) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> re(-4, 4), im(-2.5, 0.5);
  const auto base = fig_bounds(1.2);
  auto wider = base;
  wider.sigma_max = 2.5;
  auto lower = base;
  lower.lambda_min = 0.6;
  for (int i = 0; i < 20000; ++i) {
    const Complex w(re(rng), im(rng));
    if (enclosure_contains(w, base)) {
      ASSERT_TRUE(enclosure_contains(w, wider)) << w;
      ASSERT_TRUE(enclosure_contains(w, lower)) << w;
    }
  }
}

TEST(Enclosure, CaseThreeDetaches) {
  const auto b = fig_bounds(2.0);
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> re(-4, 4), im(-2.5, 0.5);
  for (int i = 0; i < 20000; ++i) {
    const Complex w(re(rng), im(rng));
    if (w.real() == 0.0 || !enclosure_contains(w, b, 0)) continue;
    const double y = w.imag();
    ASSERT_LE(y, 0.0);
    ASSERT_GT(2.0 + 3 * y * y - 4 * std::abs(y), 0.0);
  }
}

TEST(BoundarySamples, Examples) {
  auto b = slab_bounds();
  b.sigma_min = 0.0;
  const auto s = enclosure_boundary_samples(b, -0.5, 0.0, 11);
  ASSERT_EQ(s.size(), 22u);
  const auto& top = s[s.size() - 2];
  EXPECT_DOUBLE_EQ(top.point.real(), kPi / 2);
  EXPECT_DOUBLE_EQ(top.point.imag(), 0.0);
  for (std::size_t i = 0; i < s.size(); i += 2) {
    EXPECT_EQ(s[i].point, -std::conj(s[i + 1].point));
    EXPECT_EQ(s[i].branch, 1);
    EXPECT_EQ(s[i + 1].branch, -1);
  }
  EXPECT_THROW(enclosure_boundary_samples(b, 0.1, 0.2, 5), EmptyRange);
  EXPECT_THROW(enclosure_boundary_samples(b, -0.5, 0.0, 1), InvalidArgument);
}

TEST(BoundarySamples, NegativeRadicandOmitted) {
  // lambda = 0.5, q = 2: radicand 0.5 + 3y^2 - 4|y| < 0 for |y| > (4 - sqrt(10))/6.
  const double y0 = (4 - std::sqrt(10.0)) / 6;
  const auto s = enclosure_boundary_samples(fig_bounds(0.5), -1.0, 0.0, 101);
  for (const auto& p : s) EXPECT_LE(std::abs(p.point.imag()), y0 + 1e-12);
  EXPECT_LT(s.size(), 202u);
  // In case iii the curve never touches the imaginary axis.
  for (const auto& p : enclosure_boundary_samples(fig_bounds(2.0), -1.0, 0.0, 101)) {
    EXPECT_GT(std::abs(p.point.real()), 0.5);
  }
}

}  // namespace
}  // namespace maxspec
