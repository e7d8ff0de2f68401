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

#include "plesio/core.hpp"

namespace plesio {

/// The point whose bisector with the cell's site generated a face.
struct Neighbor {
  Vec3 point = Vec3::Zero();
  int source = -1;  // index in the generating point set, -1 when not periodic
  Shift3 shift = Shift3::Zero();
};

struct Face {
  std::vector<int> cycle;  // counterclockwise seen from outside
  Vec3 normal = Vec3::Zero();
  double offset = 0.0;  // normal . x = offset on the face plane
  Neighbor neighbor;
};

/// A bounded convex polyhedron around a generating site.
struct ConvexCell {
  Vec3 site = Vec3::Zero();
  int site_index = -1;
  std::vector<Vec3> vertices;
  std::vector<Face> faces;
  std::vector<std::array<int, 2>> edges;  // i < j, sorted

  int num_faces() const { return static_cast<int>(faces.size()); }
  int num_vertices() const { return static_cast<int>(vertices.size()); }
  int num_edges() const { return static_cast<int>(edges.size()); }
  int euler() const { return num_vertices() - num_edges() + num_faces(); }

  std::vector<Vec3> centered_vertices() const {
    std::vector<Vec3> out;
    for (const Vec3& v : vertices) out.push_back(v - site);
    return out;
  }

  std::vector<Vec3> face_points(const Face& f) const {
    std::vector<Vec3> out;
    for (int i : f.cycle) out.push_back(vertices[i]);
    return out;
  }

  /// Valence of every vertex.
  std::vector<int> valences() const {
    std::vector<int> deg(vertices.size(), 0);
    for (const auto& e : edges) ++deg[e[0]], ++deg[e[1]];
    return deg;
  }
};

/// Newell normal (unnormalized, length = 2 * area) of a polygon.
inline Vec3 newell_normal(const std::vector<Vec3>& pts) {
  Vec3 n = Vec3::Zero();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const Vec3& a = pts[i];
    const Vec3& b = pts[(i + 1) % pts.size()];
    n.x() += (a.y() - b.y()) * (a.z() + b.z());
    n.y() += (a.z() - b.z()) * (a.x() + b.x());
    n.z() += (a.x() - b.x()) * (a.y() + b.y());
  }
  return n;
}

inline double polygon_area(const std::vector<Vec3>& pts) { return 0.5 * newell_normal(pts).norm(); }

/// Volume as a fan of tetrahedra from the site over triangulated faces.
inline double cell_volume(const ConvexCell& c) {
  double vol = 0.0;
  for (const Face& f : c.faces) {
    const Vec3 a = c.vertices[f.cycle[0]] - c.site;
    for (std::size_t k = 1; k + 1 < f.cycle.size(); ++k) {
      const Vec3 b = c.vertices[f.cycle[k]] - c.site;
      const Vec3 d = c.vertices[f.cycle[k + 1]] - c.site;
      vol += a.dot(b.cross(d));
    }
  }
  return vol / 6.0;
}

/// Largest vertex distance from the site.
inline double circumradius(const ConvexCell& c) {
  double r = 0.0;
  for (const Vec3& v : c.vertices) r = std::max(r, (v - c.site).norm());
  return r;
}

/// Rebuild the undirected edge list from face cycles.
inline std::vector<std::array<int, 2>> edges_from_faces(const std::vector<Face>& faces) {
  std::vector<std::array<int, 2>> edges;
  for (const Face& f : faces)
    for (std::size_t k = 0; k < f.cycle.size(); ++k) {
      int a = f.cycle[k], b = f.cycle[(k + 1) % f.cycle.size()];
      if (a > b) std::swap(a, b);
      edges.push_back({a, b});
    }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return edges;
}

/// Apply x -> g(x - site) + new_site. Reflections reverse face cycles so they
/// stay counterclockwise from outside.
inline ConvexCell transform_cell(const ConvexCell& c, const SignedPermutation& g, const Vec3& new_site) {
  ConvexCell out = c;
  out.site = new_site;
  for (std::size_t i = 0; i < c.vertices.size(); ++i)
    out.vertices[i] = g.apply(c.vertices[i] - c.site) + new_site;
  for (Face& f : out.faces) {
    f.normal = g.apply(f.normal);
    f.offset = f.normal.dot(out.vertices[f.cycle[0]]);
    f.neighbor.point = g.apply(f.neighbor.point - c.site) + new_site;
    if (!g.proper()) std::reverse(f.cycle.begin(), f.cycle.end());
  }
  return out;
}

inline ConvexCell translate_cell(const ConvexCell& c, const Vec3& t) {
  return transform_cell(c, SignedPermutation::identity(), c.site + t);
}

}  // namespace plesio
