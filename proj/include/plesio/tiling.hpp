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

#pragma once

#include "plesio/anatomy.hpp"
#include "plesio/voronoi.hpp"

namespace plesio {

/// Cells that are pure translates of one another. `rotation` maps the
/// reference cell onto the members (first match in group order); it is
/// empty when no element of the group does, and `proper` tells whether the
/// match needed a reflection.
struct OrientationClass {
  std::vector<int> members;
  std::optional<SignedPermutation> rotation;
  bool proper = false;
};

struct UnitCellTiling {
  PeriodicPointSet set;
  std::vector<ConvexCell> cells;
  int reference = 0;
  std::vector<OrientationClass> orientation_classes;  // sorted by first member
  double volume_ratio = 0.0;                          // sum of volumes / period^3

  /// Orientation classes whose members are proper-congruent to the reference.
  int proper_orientations() const {
    int n = 0;
    for (const auto& c : orientation_classes) n += c.rotation && c.proper;
    return n;
  }
};

class NotCongruent : public Error {
 public:
  explicit NotCongruent(int site)
      : Error("cell " + std::to_string(site) + " is not congruent to the reference under O_h"),
        site_(site) {}
  int site() const { return site_; }

 private:
  int site_;
};

/// Group prebuilt cells into translation classes and relate each class to
/// the reference cell.
inline UnitCellTiling classify_tiling(const PeriodicPointSet& set, std::vector<ConvexCell> cells,
                                      int reference = 0, double tol_rel = 1e-6) {
  if (cells.empty()) throw Error("tiling needs at least one cell");
  if (reference < 0 || reference >= static_cast<int>(cells.size())) throw Error("reference out of range");
  UnitCellTiling t;
  t.set = set;
  t.reference = reference;
  t.cells = std::move(cells);
  double vol = 0.0;
  for (const ConvexCell& c : t.cells) vol += cell_volume(c);
  t.volume_ratio = vol / std::pow(set.period, 3);

  const double eps = tol_rel * std::cbrt(cell_volume(t.cells[reference]));
  const auto identity = SignedPermutation::identity();
  for (int i = 0; i < static_cast<int>(t.cells.size()); ++i) {
    bool placed = false;
    for (OrientationClass& oc : t.orientation_classes) {
      const ConvexCell& rep = t.cells[oc.members.front()];
      if (detail::vertices_match(rep.centered_vertices(), t.cells[i].centered_vertices(), identity, eps)) {
        oc.members.push_back(i);
        placed = true;
        break;
      }
    }
    if (placed) continue;
    OrientationClass oc;
    oc.members = {i};
    const auto m = congruent(t.cells[reference], t.cells[i], true, tol_rel);
    if (m.congruent) oc.rotation = m.rotation, oc.proper = m.proper;
    t.orientation_classes.push_back(std::move(oc));
  }
  return t;
}

/// Voronoi cells of every site, classed against the reference site.
inline UnitCellTiling build_tiling(const PeriodicPointSet& set, int reference = 0,
                                   const ClipConfig& cfg = {}) {
  if (set.size() == 0) throw Error("tiling needs a nonempty point set");
  return classify_tiling(set, voronoi_cells(set, cfg), reference);
}

/// A proper group element mapping the reference onto each cell.
inline std::vector<std::pair<int, SignedPermutation>> recover_rotations(const UnitCellTiling& t,
                                                                        double tol_rel = 1e-6) {
  std::vector<std::pair<int, SignedPermutation>> out;
  for (int i = 0; i < static_cast<int>(t.cells.size()); ++i) {
    const auto m = congruent(t.cells[t.reference], t.cells[i], false, tol_rel);
    if (!m.congruent) throw NotCongruent(i);
    out.emplace_back(i, *m.rotation);
  }
  return out;
}

/// Copies of every cell translated by the lattice vectors in
/// [0,nx) x [0,ny) x [0,nz).
inline std::vector<ConvexCell> tile_assembly(const UnitCellTiling& t, int nx, int ny, int nz) {
  if (nx < 1 || ny < 1 || nz < 1) throw Error("assembly counts must be positive");
  std::vector<ConvexCell> out;
  for (int i = 0; i < nx; ++i)
    for (int j = 0; j < ny; ++j)
      for (int k = 0; k < nz; ++k)
        for (const ConvexCell& c : t.cells) out.push_back(translate_cell(c, Vec3(i, j, k) * t.set.period));
  return out;
}

enum class Axis3 { X = 0, Y = 1, Z = 2 };

struct Edge2 {
  int a, b;
  std::array<int, 2> shift;  // b is taken at its translate by shift * period
  double length;
};

/// The periodic graph of a point set projected along one axis onto the torus.
struct CairoCheck {
  Axis3 axis = Axis3::Z;
  double period = 8.0;
  std::vector<std::array<double, 2>> projected;
  std::vector<Edge2> edges;
  std::map<int, int> degree_histogram;  // degree -> nodes
  std::vector<ValueClass> edge_lengths;
  int faces = 0;  // torus faces, E - V

  /// Cairo combinatorics: eight valence-3 and four valence-4 nodes per
  /// twelve, every face a pentagon.
  bool is_cairo() const {
    const int v = static_cast<int>(projected.size());
    if (v == 0 || v % 3 != 0) return false;
    const std::map<int, int> want{{3, 2 * v / 3}, {4, v / 3}};
    return degree_histogram == want && 5 * faces == 2 * static_cast<int>(edges.size());
  }
};

/// Join projected nodes whose periodic distance is at most sqrt(5)/8 of the
/// period; the scale-free threshold is the longer Cairo edge.
inline CairoCheck cairo_projection(const PeriodicPointSet& set, Axis3 axis) {
  CairoCheck out;
  out.axis = axis;
  out.period = set.period;
  const int ax = static_cast<int>(axis);
  const int u = (ax + 1) % 3, w = (ax + 2) % 3;
  const double p = set.period;
  const double merge = 1e-9 * p;
  for (const Vec3& q : set.points) {
    const std::array<double, 2> pt{wrap(q[std::min(u, w)], p), wrap(q[std::max(u, w)], p)};
    bool dup = false;
    for (const auto& r : out.projected) {
      double dx = std::abs(r[0] - pt[0]), dy = std::abs(r[1] - pt[1]);
      dx = std::min(dx, p - dx);
      dy = std::min(dy, p - dy);
      dup = dup || std::hypot(dx, dy) <= merge;
    }
    if (!dup) out.projected.push_back(pt);
  }
  const double reach = std::sqrt(5.0) / 8.0 * p + 1e-9 * p;
  const int n = static_cast<int>(out.projected.size());
  std::vector<int> degree(n, 0);
  // Shifts in [-1,1]^2 suffice because reach < period / 2.
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b)
      for (int i = -1; i <= 1; ++i)
        for (int j = -1; j <= 1; ++j) {
          if (a == b && (i < 0 || (i == 0 && j <= 0))) continue;
          const double dx = out.projected[b][0] + i * p - out.projected[a][0];
          const double dy = out.projected[b][1] + j * p - out.projected[a][1];
          const double len = std::hypot(dx, dy);
          if (len > reach) continue;
          out.edges.push_back({a, b, {i, j}, len});
          ++degree[a];
          ++degree[b];
        }
  for (int d : degree) ++out.degree_histogram[d];
  std::vector<double> lengths;
  for (const auto& e : out.edges) lengths.push_back(e.length);
  out.edge_lengths = cluster_values(lengths, 1e-9 * p);
  out.faces = static_cast<int>(out.edges.size()) - n;
  return out;
}

}  // namespace plesio
