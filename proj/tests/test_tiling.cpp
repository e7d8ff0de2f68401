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

namespace plesio {
namespace {

std::vector<std::vector<int>> partition_of(const UnitCellTiling& t) {
  std::vector<std::vector<int>> out;
  for (const auto& oc : t.orientation_classes) out.push_back(oc.members);
  return out;
}

TEST(Tiling, FischerKochUnitCellHasSixOrientationPairs) {
  const UnitCellTiling t = build_tiling(fks_minima_set(8.0));
  ASSERT_EQ(t.cells.size(), 12u);
  ASSERT_EQ(t.orientation_classes.size(), 6u);
  for (const auto& oc : t.orientation_classes) {
    EXPECT_EQ(oc.members.size(), 2u);
    EXPECT_TRUE(oc.rotation.has_value());
    EXPECT_TRUE(oc.proper);
  }
  EXPECT_EQ(t.proper_orientations(), 6);
  EXPECT_NEAR(t.volume_ratio, 1.0, 1e-9);
}

TEST(Tiling, SchwarzPMinimaTileWithCubes) {
  const ExtremalSet e = find_extrema(catalog_lookup("Schwarz P").field());
  const UnitCellTiling t = build_tiling(extremal_sites(e, true, false));
  ASSERT_EQ(t.cells.size(), 1u);
  EXPECT_EQ(t.orientation_classes.size(), 1u);
  EXPECT_EQ(t.cells[0].num_faces(), 6);
}

TEST(Tiling, FischerKochBothGivesFourteenFaceCells) {
  const ExtremalSet e = find_extrema(catalog_lookup("FKS").field());
  const UnitCellTiling t = build_tiling(extremal_sites(e, true, true));
  ASSERT_EQ(t.cells.size(), 24u);
  for (const auto& c : t.cells) {
    EXPECT_EQ(c.num_faces(), 14);
    EXPECT_EQ(c.num_vertices(), 16);
  }
  EXPECT_NEAR(t.volume_ratio, 1.0, 1e-9);
}

TEST(Tiling, ReferenceRecoversTheIdentity) {
  const UnitCellTiling t = build_tiling(fks_minima_set(8.0), 4);
  const auto rot = recover_rotations(t);
  ASSERT_EQ(rot.size(), 12u);
  EXPECT_EQ(rot[4].first, 4);
  EXPECT_TRUE(rot[4].second == SignedPermutation::identity());
}

// Oracle: exhaustively apply all 24 rotations to the reference and record
// which reproduce each cell's vertex set.
TEST(Tiling, RecoveredRotationsReproduceEachCell) {
  const UnitCellTiling t = build_tiling(fks_minima_set(8.0), 2);
  const auto rot = recover_rotations(t);
  const ConvexCell& ref = t.cells[2];
  for (const auto& [i, g] : rot) {
    const ConvexCell& target = t.cells[static_cast<std::size_t>(i)];
    EXPECT_TRUE(g.proper());
    int matching = 0;
    bool recovered_matches = false;
    for (const auto& h : octahedral_group()) {
      if (!h.proper()) continue;
      const bool ok = detail::vertices_match(transform_cell(ref, h, target.site).centered_vertices(),
                                             target.centered_vertices(), SignedPermutation::identity(), 1e-9);
      matching += ok;
      if (h == g) recovered_matches = ok;
    }
    EXPECT_TRUE(recovered_matches) << i;
    EXPECT_GE(matching, 1);
  }
}

TEST(Tiling, DistinctShapesAreNotCongruent) {
  const ExtremalSet e = find_extrema(catalog_lookup("Double Gyroid").field());
  const UnitCellTiling t = build_tiling(extremal_sites(e, true, true));
  EXPECT_THROW(recover_rotations(t), NotCongruent);
}

TEST(Tiling, ClassesSurviveLatticeTranslation) {
  const UnitCellTiling t = build_tiling(fks_minima_set(8.0));
  std::vector<ConvexCell> moved;
  for (std::size_t i = 0; i < t.cells.size(); ++i)
    moved.push_back(translate_cell(t.cells[i], Vec3(static_cast<double>(i % 3) - 1, 2, -1) * 8.0));
  const UnitCellTiling u = classify_tiling(t.set, moved);
  EXPECT_EQ(partition_of(u), partition_of(t));
}

// Mirroring every max-cell through a coordinate plane reproduces the class
// structure of the minima.
TEST(Tiling, MaximaTilingMirrorsMinimaTiling) {
  const ExtremalSet e = find_extrema(catalog_lookup("FKS").field());
  const UnitCellTiling mins = build_tiling(extremal_sites(e, true, false));
  const UnitCellTiling maxs = build_tiling(extremal_sites(e, false, true));
  const SignedPermutation mirror{{0, 1, 2}, {-1, 1, 1}};
  std::vector<ConvexCell> reflected;
  for (const ConvexCell& c : maxs.cells) reflected.push_back(transform_cell(c, mirror, mirror.apply(c.site)));
  const UnitCellTiling r = classify_tiling(maxs.set, reflected);
  EXPECT_EQ(r.orientation_classes.size(), mins.orientation_classes.size());
  for (std::size_t k = 0; k < r.orientation_classes.size(); ++k)
    EXPECT_EQ(r.orientation_classes[k].members.size(), mins.orientation_classes[k].members.size());
  EXPECT_TRUE(congruent(mins.cells[0], r.cells[0], false).congruent);
}

TEST(Tiling, AssemblyTranslatesEveryCell) {
  const UnitCellTiling t = build_tiling(fks_minima_set(8.0));
  const auto cells = tile_assembly(t, 4, 3, 1);
  ASSERT_EQ(cells.size(), 144u);
  EXPECT_TRUE(cells.back().site.isApprox(t.cells.back().site + Vec3(3, 2, 0) * 8.0));
  EXPECT_THROW(tile_assembly(t, 0, 1, 1), Error);
}

// Independent oracle: count neighbor pairs with explicit 2D images.
TEST(Tiling, CairoGraphMatchesBruteForce) {
  const PeriodicPointSet s = fks_minima_set(8.0);
  for (Axis3 ax : {Axis3::X, Axis3::Y, Axis3::Z}) {
    const CairoCheck cc = cairo_projection(s, ax);
    const int a = static_cast<int>(ax);
    std::vector<std::array<double, 2>> p;
    for (const Vec3& q : s.points) {
      std::array<double, 2> r{};
      int k = 0;
      for (int d = 0; d < 3; ++d)
        if (d != a) r[k++] = q[d];
      p.push_back(r);
    }
    int short_edges = 0, long_edges = 0;
    std::vector<int> deg(p.size(), 0);
    for (std::size_t i = 0; i < p.size(); ++i)
      for (std::size_t j = 0; j < p.size(); ++j)
        for (int u = -2; u <= 2; ++u)
          for (int v = -2; v <= 2; ++v) {
            if (i == j && u == 0 && v == 0) continue;
            const double d2 = std::pow(p[j][0] + 8 * u - p[i][0], 2) + std::pow(p[j][1] + 8 * v - p[i][1], 2);
            if (std::abs(d2 - 4.0) < 1e-9) ++short_edges, ++deg[i];
            if (std::abs(d2 - 5.0) < 1e-9) ++long_edges, ++deg[i];
          }
    // Each undirected edge was seen from both ends.
    EXPECT_EQ(short_edges / 2, 4);
    EXPECT_EQ(long_edges / 2, 16);
    std::map<int, int> hist;
    for (int d : deg) ++hist[d];
    EXPECT_EQ(cc.degree_histogram, hist);
    EXPECT_EQ(cc.edges.size(), 20u);
    EXPECT_EQ(cc.faces, 8);
    EXPECT_TRUE(cc.is_cairo());
  }
}

TEST(Tiling, CairoProjectionOfOnePoint) {
  const CairoCheck cc = cairo_projection(PeriodicPointSet({Vec3(1, 2, 3)}, 8.0), Axis3::Z);
  EXPECT_EQ(cc.projected.size(), 1u);
  EXPECT_TRUE(cc.edges.empty());
  EXPECT_FALSE(cc.is_cairo());
}

TEST(Tiling, CairoProjectionsAreIsomorphicAcrossAxes) {
  const PeriodicPointSet s = fks_minima_set(8.0);
  const CairoCheck x = cairo_projection(s, Axis3::X), y = cairo_projection(s, Axis3::Y),
                   z = cairo_projection(s, Axis3::Z);
  EXPECT_EQ(x.degree_histogram, y.degree_histogram);
  EXPECT_EQ(y.degree_histogram, z.degree_histogram);
  EXPECT_EQ(x.edge_lengths, y.edge_lengths);
  EXPECT_EQ(x.faces, z.faces);
}

TEST(Tiling, PartitionOfTheFullTiling) {
  const UnitCellTiling t = build_tiling(fks_minima_set(8.0));
  const PartitionReport r = validate_partition(t.cells, t.set, 100000, 11);
  EXPECT_TRUE(r.ok());
}

}  // namespace
}  // namespace plesio
