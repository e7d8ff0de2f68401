// Copyright 2026 The Plesio Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <set>

#include "plesio/extrema.hpp"
#include "plesio/formula/catalog.hpp"

namespace plesio {
namespace {

std::set<std::array<long, 3>> numerators_over_8(const std::vector<ExtremalPoint>& pts) {
  std::set<std::array<long, 3>> out;
  for (const auto& p : pts) {
    EXPECT_TRUE(p.snapped.has_value());
    if (!p.snapped) continue;
    std::array<long, 3> n{};
    for (int k = 0; k < 3; ++k) {
      const Fraction& f = (*p.snapped)[k];
      EXPECT_EQ(8 % f.den, 0) << "denominator " << f.den;
      n[k] = f.num * (8 / f.den);
    }
    out.insert(n);
  }
  return out;
}

TEST(Extrema, FischerKochMinimaAreThePublishedEighths) {
  const ExtremalSet s = search_extrema(catalog_lookup("FKS").field());
  ASSERT_EQ(s.minima.size(), 12u);
  ASSERT_EQ(s.maxima.size(), 12u);
  const std::set<std::array<long, 3>> minima{{0, 2, 3}, {0, 6, 1}, {1, 0, 6}, {2, 3, 0}, {2, 5, 4}, {3, 0, 2},
                                             {4, 2, 5}, {4, 6, 7}, {5, 4, 2}, {6, 1, 0}, {6, 7, 4}, {7, 4, 6}};
  EXPECT_EQ(numerators_over_8(s.minima), minima);
  EXPECT_NEAR(s.global_min, -std::numbers::sqrt2, 1e-9);
  EXPECT_NEAR(s.global_max, std::numbers::sqrt2, 1e-9);
}

// Oracle: f(-p) = -f(p) for this field, so maxima are the negated minima.
TEST(Extrema, FischerKochMaximaAreNegatedMinima) {
  const ExtremalSet s = search_extrema(catalog_lookup("FKS").field());
  std::set<std::array<long, 3>> negated;
  for (const auto& n : numerators_over_8(s.minima))
    negated.insert({(8 - n[0]) % 8, (8 - n[1]) % 8, (8 - n[2]) % 8});
  EXPECT_EQ(numerators_over_8(s.maxima), negated);
}

TEST(Extrema, SchwarzPHasOneMinimumAndOneMaximum) {
  const ExtremalSet s = find_extrema(catalog_lookup("Schwarz P").field());
  ASSERT_EQ(s.minima.size(), 1u);
  ASSERT_EQ(s.maxima.size(), 1u);
  EXPECT_NEAR(s.global_min, -3.0, 1e-12);
  EXPECT_NEAR(s.global_max, 3.0, 1e-12);
  EXPECT_TRUE(s.minima[0].site(kTwoPi).isApprox(Vec3::Constant(std::numbers::pi), 1e-12));
}

TEST(Extrema, DoubleDiamondMinimaFormAContinuum) {
  const ExtremalSet s = search_extrema(catalog_lookup("Double Diamond").field());
  EXPECT_TRUE(s.degenerate_min.has_value());
  EXPECT_FALSE(s.degenerate_max.has_value());
  EXPECT_THROW(find_extrema(catalog_lookup("Double Diamond").field()), DegenerateLocus);
  EXPECT_NO_THROW(find_extrema(catalog_lookup("Double Diamond").field(), {}, {Kind::Maximum}));
}

TEST(Extrema, ConstantFieldIsDegenerateEverywhere) {
  const ExtremalSet s = search_extrema(PeriodicField(Expr::constant(1.0)));
  EXPECT_TRUE(s.degenerate_min.has_value());
  EXPECT_TRUE(s.degenerate_max.has_value());
}

TEST(Extrema, ResultsDoNotDependOnThreadCount) {
  ExtremaConfig one, many;
  one.threads = 1;
  many.threads = 4;
  const PeriodicField f = catalog_lookup("Gyroid").field();
  const ExtremalSet a = search_extrema(f, one), b = search_extrema(f, many);
  ASSERT_EQ(a.minima.size(), b.minima.size());
  for (std::size_t i = 0; i < a.minima.size(); ++i) {
    EXPECT_EQ(a.minima[i].position, b.minima[i].position);
    EXPECT_EQ(a.minima[i].value, b.minima[i].value);
  }
}

TEST(Extrema, ExtremaAreStationaryPoints) {
  for (const char* name : {"Gyroid", "Diamond", "IWP", "Neovius"}) {
    const PeriodicField f = catalog_lookup(name).field();
    const ExtremalSet s = find_extrema(f);
    for (const auto* pts : {&s.minima, &s.maxima})
      for (const auto& p : *pts) EXPECT_LT(f.gradient(p.site(f.period())).norm(), 1e-7) << name;
  }
}

TEST(Extrema, MinimaAreLocalMinimaUnderRandomProbes) {
  const PeriodicField f = catalog_lookup("FKS").field();
  const ExtremalSet s = find_extrema(f);
  UnitRng rng(17);
  for (const auto& p : s.minima) {
    const Vec3 c = p.site(f.period());
    for (int k = 0; k < 20; ++k) {
      const Vec3 d = (Vec3(rng(), rng(), rng()) - Vec3::Constant(0.5)) * 1e-3;
      EXPECT_GE(f(c + d), p.value - 1e-12);
    }
  }
}

TEST(Extrema, SnapRecoversSimpleFractions) {
  const auto f = detail::snap_coordinate(0.375 + 1e-7, 48, 1e-4);
  ASSERT_TRUE(f.has_value());
  EXPECT_EQ(f->num, 3);
  EXPECT_EQ(f->den, 8);
  EXPECT_FALSE(detail::snap_coordinate(0.3141592, 48, 1e-6).has_value());
}

TEST(Extrema, UnsnappablePointsKeepTheirPosition) {
  // FRP extrema sit at irrational positions.
  const PeriodicField f = catalog_lookup("FRP").field();
  const ExtremalSet s = find_extrema(f);
  for (const auto& p : s.minima) {
    EXPECT_FALSE(p.snapped.has_value());
    EXPECT_EQ(p.site(f.period()), p.position);
  }
}

}  // namespace
}  // namespace plesio
