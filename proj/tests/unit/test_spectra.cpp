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

#include "spectra.hpp"

namespace maxspec {
namespace {

const Symbolic kHalfPi = Symbolic::exact(Rational(1, 2), 1);

TEST(Symbolic, RecognisesPiMultiples) {
  EXPECT_EQ(Symbolic::sqrt_of(kPi * kPi / 4), kHalfPi);
  EXPECT_EQ(Symbolic::sqrt_of(kPi * kPi / 4).str(), "pi/2");
  EXPECT_EQ(Symbolic::sqrt_of(4.0), Symbolic::exact(Rational(2)));
  EXPECT_EQ(Symbolic::sqrt_of(2.0).str(), "sqrt(2)");
  EXPECT_EQ(Symbolic::sqrt_of(kPi * kPi * 2).str(), "pi*sqrt(2)");
  EXPECT_EQ(Symbolic::sqrt_of(0.0).value(), 0.0);
  EXPECT_EQ(Symbolic::sqrt_of(std::exp(1.0)).kind(), Symbolic::Kind::numeric);
  EXPECT_EQ(Symbolic::infinity(-1).str(), "-inf");
  EXPECT_EQ(kHalfPi.negated().str(), "-pi/2");
}

TEST(EssentialSpectrum, ConductiveCylinder) {
  const auto s = essential_spectrum_conductive(1, 2);
  ASSERT_EQ(s.real_parts().size(), 2u);
  EXPECT_EQ(s.real_parts()[0].hi, kHalfPi.negated());
  EXPECT_EQ(s.real_parts()[1].lo, kHalfPi);
  EXPECT_EQ(s.real_parts()[0].lo.kind(), Symbolic::Kind::neg_inf);
  EXPECT_EQ(s.real_parts()[1].hi.kind(), Symbolic::Kind::pos_inf);
  const std::vector<Complex> pts = {{0, 0}, {0, -0.5}, {0, -1}};
  EXPECT_EQ(s.points(), pts);
  EXPECT_TRUE(s.contains({0, -0.5}));
  EXPECT_FALSE(s.contains({0, -0.25}));
  EXPECT_EQ(essential_spectrum_conductive(1, 1).real_parts()[1].lo,
            Symbolic::exact(Rational(1), 1));
  EXPECT_THROW(essential_spectrum_conductive(0, 1), InvalidArgument);
}

TEST(EssentialSpectrum, SelfAdjointCylinder) {
  const auto s = essential_spectrum_selfadjoint(1, 2);
  EXPECT_EQ(s.points(), std::vector<Complex>{Complex(0, 0)});
  EXPECT_FALSE(s.contains({0, -0.5}));
  EXPECT_TRUE(s.contains(kPi / 2, 0.0));
  for (double x = 0.01; x < kPi / 2 - 1e-6; x += 0.01) {
    EXPECT_FALSE(s.contains(x));
    EXPECT_FALSE(s.contains(-x));
  }
}

TEST(PollutionEnclosure, Examples) {
  const auto a = pollution_enclosure(1, 1, kPi * kPi / 4);
  EXPECT_EQ(a.real_parts()[1].lo, kHalfPi);
  const auto b = pollution_enclosure(1, 1, 0);
  ASSERT_EQ(b.real_parts().size(), 1u);
  EXPECT_TRUE(b.contains(0.0, 0.0));
  EXPECT_TRUE(b.contains(-1e6, 0.0));
  const auto c = pollution_enclosure(4, 1, 16);
  EXPECT_EQ(c.real_parts()[1].lo, Symbolic::exact(Rational(2)));
}

TEST(SafeZone, Examples) {
  const SafeZone zone(pollution_enclosure(1, 1, kPi * kPi / 4), 0.0, 1.0, 1.0);
  EXPECT_TRUE(zone({3, -0.4}));
  EXPECT_FALSE(zone(2.0));
  EXPECT_FALSE(zone({0, -0.7}));
  EXPECT_TRUE(zone(1.0));
}

TEST(SetDistance, Examples) {
  const auto s = essential_spectrum_conductive(1, 2);
  EXPECT_DOUBLE_EQ(set_distance(s, 0.5), 0.5);
  EXPECT_NEAR(set_distance(s, {0, -0.4}), 0.1, 1e-15);
  const auto rays = pollution_enclosure(1, 1, kPi * kPi / 4);
  EXPECT_TRUE(set_contains(rays, -kPi / 2 + 1e-12, 1e-9));
  EXPECT_FALSE(set_contains(rays, -kPi / 2 + 1e-6, 1e-9));
}

TEST(SpectrumSet, NormalizeIdempotentAndMerges) {
  SpectrumSet s;
  s.add_real(Symbolic::exact(3), Symbolic::exact(5))
      .add_real(Symbolic::exact(1), Symbolic::exact(4))
      .add_real(Symbolic::exact(7), Symbolic::exact(8))
      .add_imag(Symbolic::exact(-1), Symbolic::exact(0))
      .add_point({2, 0})
      .add_point({0, -0.5})
      .add_point({6, 1});
  const auto n = s.normalized();
  ASSERT_EQ(n.real_parts().size(), 2u);
  EXPECT_EQ(n.real_parts()[0].lo.value(), 1.0);
  EXPECT_EQ(n.real_parts()[0].hi.value(), 5.0);
  EXPECT_EQ(n.points(), std::vector<Complex>{Complex(6, 1)});
  EXPECT_TRUE(n.normalized() == n);
  EXPECT_THROW(SpectrumSet().add_real(Symbolic::exact(2), Symbolic::exact(1)), InvalidArgument);
}

TEST(SpectrumSet, DistanceZeroIffContained) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-3, 3);
  std::bernoulli_distribution axis(0.3);
  const auto s = essential_spectrum_conductive(1, 2);
  for (int i = 0; i < 10000; ++i) {
    Complex z(u(rng), u(rng));
    if (axis(rng)) z = z.real();
    if (axis(rng)) z = Complex(0, z.imag());
    EXPECT_EQ(s.distance(z) == 0.0, s.contains(z, 0.0)) << z;
  }
}

TEST(SpectrumSet, BuildersAreMirrorSymmetric) {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(-4, 4);
  for (const auto& s : {essential_spectrum_conductive(1, 2), essential_spectrum_selfadjoint(1, 3),
                        pollution_enclosure(2, 1, 3)}) {
    for (int i = 0; i < 2000; ++i) {
      const Complex z(u(rng), i % 3 == 0 ? 0.0 : u(rng) * 0.2);
      EXPECT_DOUBLE_EQ(s.distance(z), s.distance(-std::conj(z)));
    }
  }
}

TEST(SpectrumSet, JsonLayout) {
  const auto j = essential_spectrum_conductive(1, 2).to_json();
  EXPECT_EQ(j["real"][0][0], "-inf");
  EXPECT_EQ(j["real"][1][1], "inf");
  EXPECT_DOUBLE_EQ(j["real"][1][0].get<double>(), kPi / 2);
  EXPECT_EQ(j["exact"]["real"][1][0], "pi/2");
  EXPECT_EQ(j["points"].size(), 3u);
  EXPECT_EQ(j["points"][1][1], -0.5);
}

}  // namespace
}  // namespace maxspec
