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

#include "plesio/pipeline.hpp"
#include "plesio/report_json.hpp"

namespace plesio {
namespace {

constexpr std::array<Which, 1> kMin{Which::Min};
constexpr std::array<Which, 1> kBoth{Which::Both};

TEST(Pipeline, SchwarzPBothIsTruncatedOctahedra) {
  const SurfaceReport r = run_surface("Schwarz P", kBoth);
  const RunReport* run = r.run(Which::Both);
  ASSERT_NE(run, nullptr);
  ASSERT_TRUE(run->ok());
  ASSERT_EQ(run->classes.size(), 1u);
  EXPECT_EQ(run->classes[0].known, "truncated octahedron");
  EXPECT_EQ(run->classes[0].parallel_hexagon_pairs, 4);
}

TEST(Pipeline, FischerKochMinimaReport) {
  PipelineConfig cfg;
  cfg.partition_samples = 20000;
  const SurfaceReport r = run_surface("FKS", kMin, cfg);
  const RunReport* run = r.run(Which::Min);
  ASSERT_NE(run, nullptr);
  ASSERT_TRUE(run->ok());
  EXPECT_EQ(run->sites, 12);
  ASSERT_EQ(run->classes.size(), 1u);
  EXPECT_EQ(run->classes[0].known, "Josehedron");
  EXPECT_NEAR(run->classes[0].fingerprint.roundness, 0.4798, 5e-4);
  EXPECT_EQ(run->orientation_classes, 6);
  ASSERT_TRUE(run->partition.has_value());
  EXPECT_TRUE(run->partition->ok());
  EXPECT_EQ(r.range_matches(), std::optional<bool>(true));
}

TEST(Pipeline, GyroidMinimaGiveSeventeenFaces) {
  const SurfaceReport r = run_surface("Gyroid", kMin);
  ASSERT_TRUE(r.run(Which::Min)->ok());
  EXPECT_EQ(r.run(Which::Min)->face_counts(), std::vector<int>{17});
}

TEST(Pipeline, DegenerateRunsBecomeErrors) {
  const SurfaceReport r = run_surface("Double Diamond", kAllWhich);
  EXPECT_FALSE(r.run(Which::Min)->ok());
  EXPECT_FALSE(r.run(Which::Min)->errors.empty());
  EXPECT_FALSE(r.run(Which::Both)->ok());
  EXPECT_TRUE(r.run(Which::Max)->ok());
}

TEST(Pipeline, FormulaInputFallsBackToTheParser) {
  const SurfaceReport r = run_surface("cos(x) + cos(y) + cos(z)", kMin);
  EXPECT_TRUE(r.run(Which::Min)->ok());
  EXPECT_EQ(r.run(Which::Min)->classes[0].known, "cube");
  EXPECT_FALSE(r.range_matches().has_value());
  EXPECT_THROW(run_surface("cos(q)", kMin), UnknownIdentifier);
}

TEST(Pipeline, NoveltyWithoutTheReferenceShape) {
  const ShapeFingerprint fp = fingerprint(voronoi_cell(0, fks_minima_set()));
  std::vector<KnownShape> without;
  for (const auto& k : known_shapes())
    if (k.name != "Josehedron") without.push_back(k);
  EXPECT_FALSE(novelty_verdict(fp, without).known);
  EXPECT_TRUE(novelty_verdict(fp, known_shapes()).known);
  EXPECT_EQ(novelty_verdict(fp, known_shapes()).nearest, "Josehedron");

  const ShapeFingerprint cube = fingerprint(voronoi_cell(0, PeriodicPointSet({Vec3::Zero()}, 3.0)));
  const NoveltyVerdict v = novelty_verdict(cube, known_shapes());
  EXPECT_TRUE(v.known);
  EXPECT_EQ(v.nearest, "cube");
  EXPECT_FALSE(novelty_verdict(cube, {}).known);
}

TEST(Pipeline, FingerprintDistanceIsASemimetric) {
  const auto& k = known_shapes();
  for (const auto& a : k)
    for (const auto& b : k) {
      EXPECT_NEAR(fingerprint_distance(a.fingerprint, b.fingerprint), fingerprint_distance(b.fingerprint, a.fingerprint),
                  1e-12);
      if (&a == &b) EXPECT_EQ(fingerprint_distance(a.fingerprint, b.fingerprint), 0.0);
      else EXPECT_GT(fingerprint_distance(a.fingerprint, b.fingerprint), kNoveltyThreshold) << a.name << b.name;
    }
}

TEST(Pipeline, ParseGrid) {
  EXPECT_EQ(parse_grid("-0.4:0.3:0.7"), (std::vector<double>{-0.4, 0.3}));
  const auto g = parse_grid("0:1:0.1");
  ASSERT_EQ(g.size(), 11u);
  EXPECT_EQ(g[3], 0.3);  // rounding keeps accumulated steps out
  EXPECT_EQ(parse_grid("0.2:0.2:0.1"), std::vector<double>{0.2});
  EXPECT_THROW(parse_grid("0:1"), Error);
  EXPECT_THROW(parse_grid("0:1:0"), Error);
  EXPECT_THROW(parse_grid("1:0:0.1"), Error);
  EXPECT_THROW(parse_grid("a:1:0.1"), Error);
}

TEST(Pipeline, BlockSearchRediscoversTheKSurface) {
  SearchConfig cfg;
  cfg.blocks = "EFG";
  cfg.coefficients = parse_grid("-0.4:0.3:0.7");
  cfg.constants = parse_grid("0.2:0.2:0.1");
  const SearchResult r = search_blocks(cfg);
  EXPECT_EQ(r.evaluated, 8);
  EXPECT_EQ(r.evaluated, r.skipped_degenerate + static_cast<int>(r.candidates.size()));
  const std::string k = format(catalog_lookup("K Surface").expr);
  const auto it = std::find_if(r.candidates.begin(), r.candidates.end(), [&](const auto& c) { return c.formula == k; });
  ASSERT_NE(it, r.candidates.end());
  EXPECT_EQ(it->report.run(Which::Both)->classes.size(), 2u);
}

TEST(Pipeline, SingleBlockSearchMatchesItsCatalogEntry) {
  SearchConfig cfg;
  cfg.blocks = "A";
  cfg.coefficients = {1.0};
  const SearchResult r = search_blocks(cfg);
  ASSERT_EQ(r.candidates.size(), 1u);
  const SurfaceReport g = run_surface("Gyroid", kAllWhich);
  for (Which w : kAllWhich) {
    const RunReport *a = r.candidates[0].report.run(w), *b = g.run(w);
    ASSERT_EQ(a->classes.size(), b->classes.size());
    for (std::size_t i = 0; i < a->classes.size(); ++i)
      EXPECT_TRUE(same_fingerprint(a->classes[i].fingerprint, b->classes[i].fingerprint, 1e-9));
  }
}

TEST(Pipeline, SearchEdgeCases) {
  EXPECT_EQ(search_blocks({}).evaluated, 0);
  SearchConfig zero;
  zero.blocks = "AB";
  zero.coefficients = {0.0};
  EXPECT_EQ(search_blocks(zero).evaluated, 0);  // every candidate would be empty
  SearchConfig capped;
  capped.blocks = "EFG";
  capped.coefficients = {-0.4, 0.3};
  capped.budget = 3;
  EXPECT_EQ(search_blocks(capped).evaluated, 3);
}

TEST(Pipeline, JsonIsDeterministicAcrossThreadCounts) {
  PipelineConfig one, four;
  one.extrema.threads = one.clip.threads = 1;
  four.extrema.threads = four.clip.threads = 4;
  const Json a = to_json(run_surface("IWP", kAllWhich, one));
  const Json b = to_json(run_surface("IWP", kAllWhich, four));
  EXPECT_EQ(a.dump(), b.dump());
  for (const char* key : {"surface", "formula", "period", "frame", "range", "extrema", "runs", "errors"})
    EXPECT_TRUE(a.contains(key)) << key;
  for (const char* key : {"sites", "cells", "classes", "class_counts", "orientation_classes", "volume_ratio"})
    EXPECT_TRUE(a["runs"]["min"].contains(key)) << key;
}

TEST(Pipeline, ShapesDoNotDependOnTheFrame) {
  PipelineConfig unit;
  unit.period = 1.0;
  const SurfaceReport a = run_surface("FKS", kAllWhich), b = run_surface("FKS", kAllWhich, unit);
  for (Which w : kAllWhich) {
    const RunReport *ra = a.run(w), *rb = b.run(w);
    ASSERT_EQ(ra->classes.size(), rb->classes.size());
    for (std::size_t i = 0; i < ra->classes.size(); ++i) {
      EXPECT_TRUE(ra->classes[i].fingerprint.same_combinatorics(rb->classes[i].fingerprint));
      EXPECT_NEAR(ra->classes[i].fingerprint.normalized_volume(), rb->classes[i].fingerprint.normalized_volume(), 1e-9);
    }
    EXPECT_EQ(ra->orientation_classes, rb->orientation_classes);
  }
}

// Negating the field swaps minima and maxima.
TEST(Pipeline, NegatedFieldSwapsRuns) {
  const SurfaceReport a = run_surface("FKS", kAllWhich);
  const SurfaceReport b =
      run_surface("neg", PeriodicField(Expr::constant(-1.0) * catalog_lookup("FKS").expr), kAllWhich);
  EXPECT_EQ(a.run(Which::Min)->orientation_classes, b.run(Which::Max)->orientation_classes);
  EXPECT_TRUE(same_fingerprint(a.run(Which::Min)->classes[0].fingerprint, b.run(Which::Max)->classes[0].fingerprint,
                               1e-9));
}

TEST(Pipeline, CatalogBatchCapturesErrors) {
  const CatalogEntry* dd = Catalog::builtin().find("Double Diamond");
  const CatalogEntry* p = Catalog::builtin().find("Schwarz P");
  const auto reps = run_catalog({dd, p});
  ASSERT_EQ(reps.size(), 2u);
  EXPECT_EQ(reps[0].surface, dd->name);
  EXPECT_FALSE(reps[0].run(Which::Min)->errors.empty());
  EXPECT_TRUE(reps[1].run(Which::Both)->ok());
}

}  // namespace
}  // namespace plesio
