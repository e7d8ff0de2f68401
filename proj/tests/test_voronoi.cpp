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
#include <sstream>

#include "plesio/obj.hpp"
#include "plesio/pipeline.hpp"

namespace plesio {
namespace {

PeriodicPointSet bcc(double period) { return PeriodicPointSet({Vec3::Zero(), Vec3::Constant(period / 2)}, period); }

// Structural invariants every cell must satisfy.
void expect_valid(const ConvexCell& c, double eps) {
  EXPECT_EQ(c.euler(), 2);
  for (const Face& f : c.faces) {
    EXPECT_NEAR(f.normal.norm(), 1.0, 1e-12);
    for (int i : f.cycle) EXPECT_NEAR(f.normal.dot(c.vertices[i]), f.offset, eps);
    // Counterclockwise from outside: Newell normal agrees with the outward normal.
    EXPECT_GT(newell_normal(c.face_points(f)).dot(f.normal), 0.0);
    EXPECT_LT(f.normal.dot(c.site), f.offset - eps);  // site strictly inside
  }
  for (const Vec3& v : c.vertices) {
    int planes = 0;
    for (const Face& f : c.faces) {
      EXPECT_LE(f.normal.dot(v) - f.offset, eps);
      planes += std::abs(f.normal.dot(v) - f.offset) <= eps;
    }
    EXPECT_GE(planes, 3);
  }
}

TEST(Voronoi, SimpleCubicGivesTheUnitCube) {
  const ConvexCell c = voronoi_cell(0, PeriodicPointSet({Vec3::Zero()}, 1.0));
  EXPECT_EQ(c.num_faces(), 6);
  EXPECT_EQ(c.num_vertices(), 8);
  EXPECT_EQ(c.num_edges(), 12);
  EXPECT_NEAR(cell_volume(c), 1.0, 1e-12);
  expect_valid(c, 1e-9);
}

TEST(Voronoi, BodyCenteredGivesTruncatedOctahedra) {
  const auto cells = voronoi_cells(bcc(kTwoPi));
  for (const auto& c : cells) {
    EXPECT_EQ(c.num_faces(), 14);
    EXPECT_EQ(c.num_vertices(), 24);
    EXPECT_NEAR(cell_volume(c), std::pow(kTwoPi, 3) / 2.0, 1e-9);
    expect_valid(c, 1e-9);
  }
}

TEST(Voronoi, FischerKochMinimaGiveTwelveFaceCells) {
  for (const ConvexCell& c : voronoi_cells(fks_minima_set(24.0))) {
    EXPECT_EQ(c.num_faces(), 12);
    EXPECT_EQ(c.num_vertices(), 12);
    EXPECT_EQ(c.num_edges(), 22);
    EXPECT_NEAR(cell_volume(c), 1152.0, 1e-7);
    expect_valid(c, 1e-6 * 24.0);
  }
}

// Oracle: the nearest-site rule alone, estimated by sampling.
TEST(Voronoi, VolumeAgreesWithMonteCarloOwnership) {
  const PeriodicPointSet s = fks_minima_set(24.0);
  const ConvexCell c = voronoi_cell(0, s);
  UnitRng rng(99);
  const int n = 200000;
  int owned = 0;
  for (int k = 0; k < n; ++k) {
    const Vec3 x = Vec3(rng(), rng(), rng()) * 24.0;
    std::size_t best = 0;
    double bd = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < s.size(); ++i) {
      const double d = periodic_distance(x, s.points[i], 24.0);
      if (d < bd) bd = d, best = i;
    }
    owned += best == 0;
  }
  const double estimate = static_cast<double>(owned) / n * std::pow(24.0, 3);
  const double sigma = std::sqrt((1.0 / 12) * (11.0 / 12) / n) * std::pow(24.0, 3);
  EXPECT_NEAR(cell_volume(c), estimate, 5 * sigma);
}

TEST(Voronoi, ClippingOrderDoesNotMatter) {
  const PeriodicPointSet s = fks_minima_set(8.0);
  auto nb = neighbor_candidates(3, s, 1);
  const ConvexCell a = clip_cell(s.points[3], nb, s.period, 1e-6 * s.period);
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 5; ++trial) {
    std::shuffle(nb.begin(), nb.end(), rng);
    const ConvexCell b = clip_cell(s.points[3], nb, s.period, 1e-6 * s.period);
    ASSERT_EQ(a.num_vertices(), b.num_vertices());
    ASSERT_EQ(a.num_faces(), b.num_faces());
    for (const Vec3& v : a.vertices) {
      double best = std::numeric_limits<double>::infinity();
      for (const Vec3& w : b.vertices) best = std::min(best, (v - w).norm());
      EXPECT_LT(best, 1e-9);
    }
  }
}

TEST(Voronoi, FacesBisectTheirGeneratingNeighbor) {
  for (const char* name : {"FKS", "Gyroid", "IWP"}) {
    const PeriodicPointSet s = extremal_sites(find_extrema(catalog_lookup(name).field()), true, false);
    for (const ConvexCell& c : voronoi_cells(s))
      for (const Face& f : c.faces)
        EXPECT_NEAR(2.0 * (f.offset - f.normal.dot(c.site)), (f.neighbor.point - c.site).norm(), 1e-9) << name;
  }
}

TEST(Voronoi, CellsRespectRadiusBounds) {
  const PeriodicPointSet s = extremal_sites(find_extrema(catalog_lookup("Gyroid").field()), true, true);
  const double r = packing_radius(s);
  for (const ConvexCell& c : voronoi_cells(s)) {
    EXPECT_LE(circumradius(c), s.period * std::sqrt(3.0) / 2.0);
    EXPECT_GE(circumradius(c), r);
  }
}

TEST(Voronoi, TranslatedSiteGivesTranslatedCell) {
  const PeriodicPointSet s = fks_minima_set(8.0);
  const ConvexCell a = voronoi_cell(0, s);
  const Vec3 t(8.0, -16.0, 8.0);
  auto nb = neighbor_candidates(0, s, 1);
  for (Neighbor& n : nb) n.point += t;
  const ConvexCell b = clip_cell(s.points[0] + t, nb, s.period, 1e-6 * s.period);
  ASSERT_EQ(a.num_vertices(), b.num_vertices());
  for (std::size_t i = 0; i < a.vertices.size(); ++i) {
    double best = std::numeric_limits<double>::infinity();
    for (const Vec3& w : b.vertices) best = std::min(best, (a.vertices[i] + t - w).norm());
    EXPECT_LT(best, 1e-9);
  }
}

TEST(Voronoi, MissingNeighborsLeaveTheCellUnbounded) {
  const std::vector<Neighbor> nb{{Vec3(1, 0, 0), 0, Shift3::Zero()}, {Vec3(-1, 0, 0), 0, Shift3::Zero()}};
  EXPECT_THROW(clip_cell(Vec3::Zero(), nb, 4.0, 1e-9), UnboundedCell);
}

TEST(Voronoi, PartitionHoldsForFischerKoch) {
  const PeriodicPointSet s = fks_minima_set(8.0);
  const PartitionReport r = validate_partition(voronoi_cells(s), s, 100000, 1);
  EXPECT_EQ(r.gaps, 0);
  EXPECT_EQ(r.overlaps, 0);
  EXPECT_NEAR(r.volume_ratio, 1.0, 1e-9);
}

TEST(Voronoi, PartitionHoldsForASinglePoint) {
  const PeriodicPointSet s({Vec3(0.2, 0.3, 0.4)}, 1.0);
  EXPECT_TRUE(validate_partition(voronoi_cells(s), s, 1000, 1).ok());
}

// Negative control: one vertex pushed outward must be caught.
TEST(Voronoi, PerturbedCellIsAnOverlap) {
  const PeriodicPointSet s = fks_minima_set(8.0);
  auto cells = voronoi_cells(s);
  Vec3& v = cells[0].vertices[0];
  v += (v - cells[0].site).normalized() * 1e-2;
  EXPECT_THROW(validate_partition(cells, s, 100000, 1), PartitionOverlap);
  const PartitionReport r = check_partition(cells, s, 100000, 1);
  EXPECT_FALSE(r.ok());
  EXPECT_GT(r.volume_ratio, 1.0 + 1e-9);
}

TEST(Voronoi, ObjExportIsOneBasedAndCounterclockwise) {
  const PeriodicPointSet s({Vec3::Zero(), Vec3(1.0 / 3.0, 0.5, 0.5)}, 1.0);
  const auto cells = voronoi_cells(s);
  std::ostringstream os;
  write_obj(os, cells);
  std::istringstream in(os.str());
  std::vector<Vec3> verts;
  std::string line;
  int objects = 0, faces = 0;
  std::size_t offset = 0;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string tag;
    ls >> tag;
    if (tag == "o") {
      ++objects;
      offset = verts.size();
    } else if (tag == "v") {
      std::string tok;
      Vec3 p;
      for (int k = 0; k < 3; ++k) {
        ls >> tok;
        std::string digits;
        for (char ch : tok.substr(0, tok.find('e')))
          if (std::isdigit(static_cast<unsigned char>(ch))) digits += ch;
        digits.erase(0, digits.find_first_not_of('0'));
        EXPECT_LE(digits.size(), 9u) << tok;
        p[k] = std::stod(tok);
      }
      verts.push_back(p);
    } else if (tag == "f") {
      ++faces;
      std::vector<Vec3> poly;
      std::size_t idx;
      while (ls >> idx) {
        ASSERT_GE(idx, offset + 1);
        ASSERT_LE(idx, verts.size());
        poly.push_back(verts[idx - 1]);
      }
      const ConvexCell& c = cells[static_cast<std::size_t>(objects - 1)];
      Vec3 centroid = Vec3::Zero();
      for (const Vec3& p : poly) centroid += p;
      centroid /= static_cast<double>(poly.size());
      EXPECT_GT(newell_normal(poly).dot(centroid - c.site), 0.0);
    }
  }
  EXPECT_EQ(objects, 2);
  EXPECT_EQ(faces, cells[0].num_faces() + cells[1].num_faces());
}

}  // namespace
}  // namespace plesio
