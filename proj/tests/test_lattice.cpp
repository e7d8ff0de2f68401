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

// Independent oracle: try all 27 neighboring translates explicitly.
double brute_distance(const Vec3& a, const Vec3& b, double period) {
  double best = std::numeric_limits<double>::infinity();
  for (int i = -1; i <= 1; ++i)
    for (int j = -1; j <= 1; ++j)
      for (int k = -1; k <= 1; ++k) best = std::min(best, (b + Vec3(i, j, k) * period - a).norm());
  return best;
}

TEST(Lattice, PeriodicDistanceMatchesBruteForce) {
  UnitRng rng(21);
  for (int s = 0; s < 500; ++s) {
    const Vec3 a = Vec3(rng(), rng(), rng()) * 8.0, b = Vec3(rng(), rng(), rng()) * 8.0;
    EXPECT_NEAR(periodic_distance(a, b, 8.0), brute_distance(a, b, 8.0), 1e-12);
  }
}

TEST(Lattice, PointsAreWrappedIntoThePeriodCube) {
  const PeriodicPointSet s({Vec3(-1, 9, 3)}, 8.0);
  EXPECT_TRUE(s.points[0].isApprox(Vec3(7, 1, 3)));
  EXPECT_THROW(PeriodicPointSet({}, 0.0), Error);
}

TEST(Lattice, FischerKochRadiiHaveClosedForms) {
  const PeriodicPointSet s = fks_minima_set(8.0);
  const auto cells = voronoi_cells(s);
  const DeloneRadii r = delone_radii(s, std::span<const ConvexCell>(cells));
  EXPECT_NEAR(r.packing_r, std::sqrt(3.5), 1e-9);
  ASSERT_TRUE(r.covering_R.has_value());
  EXPECT_NEAR(*r.covering_R, std::sqrt(69.0) / 3.0, 1e-9);
}

TEST(Lattice, PackingRadiusEqualsTheSmallerInsphereRadius) {
  const PeriodicPointSet s = fks_minima_set(24.0);
  const ConvexCell c = voronoi_cell(0, s);
  double inner = std::numeric_limits<double>::infinity();
  for (const Face& f : c.faces) inner = std::min(inner, f.offset - f.normal.dot(c.site));
  EXPECT_NEAR(packing_radius(s), inner, 1e-9);
  EXPECT_NEAR(inner, std::sqrt(31.5), 1e-9);
}

TEST(Lattice, SimpleCubicRadii) {
  const PeriodicPointSet s({Vec3::Zero()}, 1.0);
  const auto cells = voronoi_cells(s);
  const DeloneRadii r = delone_radii(s, std::span<const ConvexCell>(cells));
  EXPECT_NEAR(r.packing_r, 0.5, 1e-15);
  EXPECT_NEAR(*r.covering_R, std::sqrt(3.0) / 2.0, 1e-12);
}

TEST(Lattice, RadiiScaleWithThePeriod) {
  const PeriodicPointSet a = fks_minima_set(8.0), b = a.rescaled(16.0);
  const auto ca = voronoi_cells(a), cb = voronoi_cells(b);
  const auto ra = delone_radii(a, std::span<const ConvexCell>(ca));
  const auto rb = delone_radii(b, std::span<const ConvexCell>(cb));
  EXPECT_NEAR(rb.packing_r, 2.0 * ra.packing_r, 1e-9);
  EXPECT_NEAR(*rb.covering_R, 2.0 * *ra.covering_R, 1e-9);
}

TEST(Lattice, CoveringRadiusNeedsCells) {
  const PeriodicPointSet s = fks_minima_set();
  EXPECT_THROW(delone_radii(s, std::nullopt, true), MissingCells);
  EXPECT_FALSE(delone_radii(s).covering_R.has_value());
}

TEST(Lattice, ReplicasEnumerateEveryShift) {
  const PeriodicPointSet s = fks_minima_set();
  EXPECT_EQ(replicas(s, 1).size(), 27u * 12u);
  EXPECT_EQ(replicas(s, 2).size(), 125u * 12u);
  EXPECT_THROW(replicas(s, 0), Error);
}

TEST(Lattice, MergeKeepsLabelsAligned) {
  const PeriodicPointSet a({Vec3::Zero()}, 1.0, {"a"});
  const PeriodicPointSet b({Vec3::Constant(0.5)}, 1.0);
  const PeriodicPointSet m = a.merged(b);
  ASSERT_EQ(m.size(), 2u);
  ASSERT_EQ(m.labels.size(), 2u);
  EXPECT_EQ(m.labels[0], "a");
  EXPECT_THROW(a.merged(PeriodicPointSet({Vec3::Zero()}, 2.0)), Error);
}

TEST(Lattice, ExtremalSitesAreLabelled) {
  const ExtremalSet e = find_extrema(catalog_lookup("Schwarz P").field());
  const PeriodicPointSet s = extremal_sites(e, true, true);
  ASSERT_EQ(s.size(), 2u);
  EXPECT_EQ(s.labels[0], "min0");
  EXPECT_EQ(s.labels[1], "max0");
}

}  // namespace
}  // namespace plesio
