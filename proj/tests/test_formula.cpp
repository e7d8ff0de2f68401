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

#include <random>

#include "plesio/formula/blocks.hpp"
#include "plesio/formula/catalog.hpp"
#include "plesio/formula/parse.hpp"

namespace plesio {
namespace {

Expr random_expr(std::mt19937_64& rng, int depth) {
  std::uniform_int_distribution<int> pick(0, depth <= 0 ? 1 : 8);
  switch (pick(rng)) {
    case 0: return Expr::constant(static_cast<double>(rng() % 40) / 8.0);
    case 1: return Expr::variable(static_cast<Axis>(rng() % 3));
    case 2: return -random_expr(rng, depth - 1);
    case 3: return random_expr(rng, depth - 1) + random_expr(rng, depth - 1);
    case 4: return random_expr(rng, depth - 1) - random_expr(rng, depth - 1);
    case 5: return random_expr(rng, depth - 1) * random_expr(rng, depth - 1);
    case 6: return random_expr(rng, depth - 1) / random_expr(rng, depth - 1);
    case 7: return Expr::sin(random_expr(rng, depth - 1));
    default: return Expr::cos(random_expr(rng, depth - 1));
  }
}

TEST(Formula, RandomTreesRoundTripThroughText) {
  std::mt19937_64 rng(42);
  for (int i = 0; i < 1000; ++i) {
    const Expr e = random_expr(rng, 5);
    const std::string text = format(e);
    const Expr back = parse(text);
    ASSERT_TRUE(back == e) << text << " reparsed as " << format(back);
    ASSERT_EQ(format(back), text);
  }
}

TEST(Formula, MinimalParentheses) {
  EXPECT_EQ(format(parse("(x + y) + z")), "x + y + z");
  EXPECT_EQ(format(parse("x - (y - z)")), "x - (y - z)");
  EXPECT_EQ(format(parse("x / (y * z)")), "x/(y*z)");
  EXPECT_EQ(format(parse("-2*x")), "-2*x");
  EXPECT_EQ(format(parse("2*(x + y)")), "2*(x + y)");
}

TEST(Formula, ParserAcceptsExponentsAndPi) {
  EXPECT_NEAR(evaluate(PeriodicField(parse("1.5e-1 + pi")), Vec3::Zero()), 0.15 + std::numbers::pi, 1e-15);
}

TEST(Formula, SyntaxErrorsReportOffset) {
  try {
    parse("cos(x");
    FAIL() << "expected SyntaxError";
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.offset(), 5u);
    EXPECT_TRUE(e.expected().count("')'"));
  }
  try {
    parse("cos(w)");
    FAIL() << "expected UnknownIdentifier";
  } catch (const UnknownIdentifier& e) {
    EXPECT_EQ(e.offset(), 4u);
    EXPECT_EQ(e.name(), "w");
  }
  EXPECT_THROW(parse("x +"), SyntaxError);
  EXPECT_THROW(parse("x y"), SyntaxError);
}

TEST(Formula, DivisionByExactZeroRaises) {
  const PeriodicField f(parse("1 / sin(x)"));
  EXPECT_THROW(f(Vec3::Zero()), EvalError);
  EXPECT_NO_THROW(f(Vec3(1, 0, 0)));
}

// Central differences are an independent oracle for the tape's forward-mode
// derivatives.
TEST(Formula, GradientMatchesFiniteDifferencesOnEveryEntry) {
  for (const CatalogEntry& e : Catalog::builtin().entries()) {
    const PeriodicField f = e.field();
    UnitRng rng(3);
    const double h = 1e-5 * f.period();
    for (int s = 0; s < 20; ++s) {
      const Vec3 p = Vec3(rng(), rng(), rng()) * f.period();
      const Vec3 g = f.gradient(p);
      for (int k = 0; k < 3; ++k) {
        const Vec3 d = h * Vec3::Unit(k);
        const double fd = (f(p + d) - f(p - d)) / (2.0 * h);
        ASSERT_LT(std::abs(fd - g[k]) / std::max(1.0, g.norm()), 1e-6) << e.name;
      }
    }
  }
}

TEST(Formula, EveryEntryIsPeriodic) {
  for (const CatalogEntry& e : Catalog::builtin().entries())
    EXPECT_LT(e.field().periodicity_defect(50), 1e-9) << e.name;
}

TEST(Formula, CyclicFlagIsAccurate) {
  for (const CatalogEntry& e : Catalog::builtin().entries()) {
    const PeriodicField f = e.field();
    UnitRng rng(9);
    double worst = 0.0;
    for (int s = 0; s < 20; ++s) {
      const Vec3 p = Vec3(rng(), rng(), rng()) * f.period();
      worst = std::max(worst, std::abs(f(p) - f(Vec3(p.y(), p.z(), p.x()))));
    }
    if (e.has_flag("not-cyclic")) EXPECT_GT(worst, 1e-6) << e.name;
    else EXPECT_LT(worst, 1e-9) << e.name;
  }
}

TEST(Formula, RescalingPreservesGeometry) {
  const PeriodicField f = catalog_lookup("Gyroid").field();
  const PeriodicField g = f.rescaled(1.0);
  EXPECT_DOUBLE_EQ(g.period(), 1.0);
  UnitRng rng(1);
  for (int s = 0; s < 20; ++s) {
    const Vec3 u(rng(), rng(), rng());
    EXPECT_NEAR(g(u), f(u * kTwoPi), 1e-12);
  }
}

TEST(Catalog, LookupIsCaseInsensitiveAndUsesAliases) {
  EXPECT_EQ(catalog_lookup("fks").name, "Fischer-Koch, FKS");
  EXPECT_EQ(catalog_lookup("Fischer-Koch").name, "Fischer-Koch, FKS");
  EXPECT_EQ(catalog_lookup("lidinoid").name, catalog_lookup("Lidinoïd").name);
  EXPECT_EQ(catalog_lookup("KP").source_table, 6);  // names win over aliases
}

TEST(Catalog, UnknownNamesSuggestNeighbors) {
  try {
    catalog_lookup("Gyroyd");
    FAIL() << "expected NotFound";
  } catch (const NotFound& e) {
    ASSERT_FALSE(e.suggestions().empty());
    EXPECT_EQ(e.suggestions().front(), "Gyroid");
  }
}

TEST(Catalog, OverviewBatchHasFifteenEntries) {
  EXPECT_EQ(Catalog::builtin().table6_batch().size(), 15u);
}

TEST(Catalog, HalfFrequencyEntriesUseTheLongerPeriod) {
  for (const CatalogEntry& e : Catalog::builtin().entries())
    if (e.name == "D Surface") EXPECT_NEAR(e.period, 2 * kTwoPi, 1e-15);
}

TEST(Catalog, ExactRangesUseTightTolerance) {
  const KnownRange exact{-1.5, 1.5, false}, rounded{-7.933, 9.46, true};
  EXPECT_TRUE(exact.matches(-1.5 + 5e-7, 1.5));
  EXPECT_FALSE(exact.matches(-1.5 + 5e-6, 1.5));
  EXPECT_TRUE(rounded.matches(-7.93, 9.462));
  EXPECT_FALSE(rounded.matches(-7.863, 9.453));
}

TEST(Blocks, ComposeMatchesTheKSurfaceStructurally) {
  const PeriodicField k = compose_blocks({{0.3, 'E'}, {0.3, 'F'}, {-0.4, 'G'}}, 0.2);
  EXPECT_TRUE(k.expr() == catalog_lookup("K Surface").expr);
}

TEST(Blocks, BlockAIsTheGyroid) {
  EXPECT_TRUE(compose_blocks({{1.0, 'A'}}, 0.0).expr() == catalog_lookup("Gyroid").expr);
  EXPECT_THROW(compose_blocks({}, 0.0), Error);
}

TEST(Blocks, SuperblockReproducesStandardBlocks) {
  const double half_pi = std::numbers::pi / 2.0;
  EXPECT_TRUE(superblock({0.0}, 1, Arity::Sum) == block('E').expr);
  EXPECT_TRUE(superblock({0.0}, 1, Arity::Pairwise) == block('F').expr);
  EXPECT_TRUE(superblock({half_pi, 0.0}, 1, Arity::Pairwise) == block('A').expr);
  EXPECT_THROW(superblock({0.0, 0.0}, 1, Arity::Triple), Error);
}

TEST(Blocks, SuperblockPhaseShiftsAreCosines) {
  const Expr e = superblock({0.3}, 2, Arity::Sum);
  const PeriodicField f(e);
  const Vec3 p(0.1, 0.7, 1.9);
  EXPECT_NEAR(f(p), std::cos(0.2 - 0.3) + std::cos(1.4 - 0.3) + std::cos(3.8 - 0.3), 1e-14);
}

}  // namespace
}  // namespace plesio
