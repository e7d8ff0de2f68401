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

#include <limits>

#include "plesio/cell.hpp"
#include "plesio/lattice.hpp"

namespace plesio {

struct ClipConfig {
  double eps_rel = 1e-6;  // vertex merge and plane tolerance, relative to the period
  int shells = 1;
  int validation_shells = 2;  // 0 disables the post-hoc check
  int threads = 0;
};

/// Clipping left part of the seed box on the cell boundary.
class UnboundedCell : public Error {
 public:
  using Error::Error;
};

/// Merging at tolerance produced something that is not a convex solid.
class ToleranceCollapse : public Error {
 public:
  using Error::Error;
};

/// A replica outside the clipping shells still cuts the cell.
class ShellValidationError : public Error {
 public:
  using Error::Error;
};

namespace detail {

struct ClipPolygon {
  std::vector<Vec3> pts;
  Vec3 normal;
  double offset;
  int generator;  // index into the neighbor list, or -1 for the seed box
};

// Vertices in counterclockwise order around `normal`, starting from the point
// farthest from the centroid.
inline std::vector<int> order_around(const std::vector<Vec3>& pts, const std::vector<int>& idx,
                                     const Vec3& normal) {
  Vec3 c = Vec3::Zero();
  for (int i : idx) c += pts[i];
  c /= static_cast<double>(idx.size());
  int far = idx.front();
  for (int i : idx)
    if ((pts[i] - c).squaredNorm() > (pts[far] - c).squaredNorm()) far = i;
  const Vec3 u = (pts[far] - c).normalized();
  const Vec3 w = normal.cross(u);
  std::vector<std::pair<double, int>> ang;
  for (int i : idx) {
    const Vec3 d = pts[i] - c;
    double a = std::atan2(d.dot(w), d.dot(u));
    if (i == far) a = 0.0;
    if (a < 0.0) a += kTwoPi;
    ang.emplace_back(a, i);
  }
  std::sort(ang.begin(), ang.end());
  std::vector<int> out;
  for (auto& [a, i] : ang) out.push_back(i);
  return out;
}

inline void dedupe(std::vector<Vec3>& pts, double eps) {
  std::vector<Vec3> out;
  for (const Vec3& p : pts) {
    bool dup = false;
    for (const Vec3& q : out)
      if ((p - q).norm() <= eps) dup = true;
    if (!dup) out.push_back(p);
  }
  pts.swap(out);
}

// Clip the polygon soup by {x : normal . x <= offset}. Returns false when the
// plane does not cut the solid by more than eps.
inline bool clip(std::vector<ClipPolygon>& polys, const Vec3& normal, double offset, int generator,
                 double eps) {
  double worst = -1.0;
  for (const auto& poly : polys)
    for (const Vec3& p : poly.pts) worst = std::max(worst, normal.dot(p) - offset);
  if (worst <= eps) return false;

  std::vector<ClipPolygon> kept;
  std::vector<Vec3> cap;
  for (const auto& poly : polys) {
    std::vector<Vec3> out;
    const std::size_t n = poly.pts.size();
    for (std::size_t k = 0; k < n; ++k) {
      Vec3 a = poly.pts[k], b = poly.pts[(k + 1) % n];
      double da = normal.dot(a) - offset, db = normal.dot(b) - offset;
      if (da <= eps) {
        out.push_back(a);
        if (da >= -eps) cap.push_back(a);
      }
      if ((da < -eps && db > eps) || (da > eps && db < -eps)) {
        // Same edge, same rounding, whichever face visits it.
        if (lex_less(b, a)) std::swap(a, b), std::swap(da, db);
        const Vec3 x = a + (da / (da - db)) * (b - a);
        out.push_back(x);
        cap.push_back(x);
      }
    }
    dedupe(out, eps);
    if (out.size() >= 3) kept.push_back({std::move(out), poly.normal, poly.offset, poly.generator});
  }
  dedupe(cap, eps);
  if (cap.size() >= 3) {
    std::vector<int> idx(cap.size());
    for (std::size_t i = 0; i < cap.size(); ++i) idx[i] = static_cast<int>(i);
    std::vector<Vec3> ordered;
    for (int i : order_around(cap, idx, normal)) ordered.push_back(cap[i]);
    kept.push_back({std::move(ordered), normal, offset, generator});
  }
  polys.swap(kept);
  return true;
}

inline double max_radius(const std::vector<ClipPolygon>& polys, const Vec3& site) {
  double r = 0.0;
  for (const auto& poly : polys)
    for (const Vec3& p : poly.pts) r = std::max(r, (p - site).norm());
  return r;
}

// Merge the soup into a cell with shared vertex indices and face cycles
// re-derived from plane incidence.
inline ConvexCell assemble(const Vec3& site, const std::vector<ClipPolygon>& polys,
                           const std::vector<Neighbor>& neighbors, double eps) {
  ConvexCell cell;
  cell.site = site;

  std::vector<Vec3> verts;
  std::vector<int> weight;
  for (const auto& poly : polys)
    for (const Vec3& p : poly.pts) {
      bool merged = false;
      for (std::size_t i = 0; i < verts.size() && !merged; ++i)
        if ((verts[i] - p).norm() <= eps) {
          verts[i] = (verts[i] * weight[i] + p) / (weight[i] + 1.0);
          ++weight[i];
          merged = true;
        }
      if (!merged) {
        verts.push_back(p);
        weight.push_back(1);
      }
    }

  // Distinct planes; coplanar pieces from one generator collapse here.
  std::vector<const ClipPolygon*> planes;
  for (const auto& poly : polys) {
    bool dup = false;
    for (const ClipPolygon* q : planes)
      if (q->normal.dot(poly.normal) > 1.0 - 1e-12 && std::abs(q->offset - poly.offset) <= eps)
        dup = true;
    if (!dup) planes.push_back(&poly);
  }

  std::vector<std::vector<int>> incident(verts.size());
  std::vector<Face> faces;
  for (const ClipPolygon* pl : planes) {
    std::vector<int> on;
    for (std::size_t i = 0; i < verts.size(); ++i)
      if (std::abs(pl->normal.dot(verts[i]) - pl->offset) <= eps) on.push_back(static_cast<int>(i));
    if (on.size() < 3) continue;
    Face f;
    f.cycle = order_around(verts, on, pl->normal);
    std::vector<Vec3> pts;
    for (int i : f.cycle) pts.push_back(verts[i]);
    if (polygon_area(pts) <= eps * eps * 1e3) continue;
    if (pl->generator < 0) throw UnboundedCell("seed box face survived clipping");
    f.normal = pl->normal;
    f.offset = pl->offset;
    f.neighbor = neighbors[pl->generator];
    for (int i : f.cycle) incident[i].push_back(static_cast<int>(faces.size()));
    faces.push_back(std::move(f));
  }

  // Drop unreferenced vertices, then refine each onto its planes.
  std::vector<int> remap(verts.size(), -1);
  for (std::size_t i = 0; i < verts.size(); ++i) {
    if (incident[i].empty()) continue;
    if (incident[i].size() < 3)
      throw ToleranceCollapse("vertex on fewer than three faces after merging");
    Eigen::MatrixXd a(incident[i].size(), 3);
    Eigen::VectorXd b(incident[i].size());
    for (std::size_t r = 0; r < incident[i].size(); ++r) {
      a.row(static_cast<Eigen::Index>(r)) = faces[incident[i][r]].normal.transpose();
      b[static_cast<Eigen::Index>(r)] = faces[incident[i][r]].offset;
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const auto& sv = svd.singularValues();
    if (sv[2] > 1e-6 * sv[0]) {
      const Vec3 refined = svd.solve(b);
      if ((refined - verts[i]).norm() <= 10.0 * eps) verts[i] = refined;
    }
    remap[i] = static_cast<int>(cell.vertices.size());
    cell.vertices.push_back(verts[i]);
  }
  for (Face& f : faces)
    for (int& i : f.cycle) i = remap[i];
  cell.faces = std::move(faces);
  cell.edges = edges_from_faces(cell.faces);

  if (cell.num_vertices() < 4 || cell.num_faces() < 4)
    throw ToleranceCollapse("merged solid has fewer than four vertices or faces");
  std::vector<int> uses(cell.edges.size(), 0);
  for (const Face& f : cell.faces)
    for (std::size_t k = 0; k < f.cycle.size(); ++k) {
      std::array<int, 2> e{f.cycle[k], f.cycle[(k + 1) % f.cycle.size()]};
      if (e[0] > e[1]) std::swap(e[0], e[1]);
      ++uses[std::lower_bound(cell.edges.begin(), cell.edges.end(), e) - cell.edges.begin()];
    }
  for (int u : uses)
    if (u != 2) throw ToleranceCollapse("edge not shared by exactly two faces");
  if (cell.euler() != 2) throw ToleranceCollapse("Euler characteristic is not 2");
  return cell;
}

}  // namespace detail

/// Intersection of the bisector half-spaces of `site` against `neighbors`,
/// processed in the given order, starting from a cube of half-width
/// `box_half_width` around the site.
inline ConvexCell clip_cell(const Vec3& site, const std::vector<Neighbor>& neighbors,
                            double box_half_width, double eps) {
  std::vector<detail::ClipPolygon> polys;
  for (int axis = 0; axis < 3; ++axis)
    for (double s : {-1.0, 1.0}) {
      const Vec3 n = s * Vec3::Unit(axis);
      const int u = (axis + 1) % 3, v = (axis + 2) % 3;
      std::vector<Vec3> pts;
      for (auto [a, b] : {std::pair{-1, -1}, {1, -1}, {1, 1}, {-1, 1}}) {
        Vec3 p = site + box_half_width * n;
        p[u] += a * box_half_width;
        p[v] += b * box_half_width * s;
        pts.push_back(p);
      }
      polys.push_back({pts, n, n.dot(site) + box_half_width, -1});
    }
  for (auto& poly : polys) {
    std::vector<int> idx{0, 1, 2, 3};
    std::vector<Vec3> ordered;
    for (int i : detail::order_around(poly.pts, idx, poly.normal)) ordered.push_back(poly.pts[i]);
    poly.pts = ordered;
  }

  double reach = detail::max_radius(polys, site);
  for (std::size_t g = 0; g < neighbors.size(); ++g) {
    const Vec3 d = neighbors[g].point - site;
    const double dist = d.norm();
    if (dist <= eps) throw Error("neighbor coincides with the site");
    // A bisector farther than the current reach cannot touch the cell.
    if (dist > 2.0 * reach) continue;
    const Vec3 n = d / dist;
    if (detail::clip(polys, n, n.dot(site) + 0.5 * dist, static_cast<int>(g), eps))
      reach = detail::max_radius(polys, site);
  }
  return detail::assemble(site, polys, neighbors, eps);
}

/// Neighbor candidates for one site: every replica within `shells` except
/// the site itself, nearest first with a deterministic tie-break.
inline std::vector<Neighbor> neighbor_candidates(std::size_t site_index, const PeriodicPointSet& set,
                                                 int shells) {
  const Vec3 site = set.points[site_index];
  std::vector<std::pair<double, Neighbor>> cand;
  for (const Replica& r : replicas(set, shells)) {
    if (r.source == static_cast<int>(site_index) && r.shift == Shift3::Zero()) continue;
    cand.push_back({(r.point - site).squaredNorm(), Neighbor{r.point, r.source, r.shift}});
  }
  std::stable_sort(cand.begin(), cand.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Neighbor> out;
  for (auto& [d, n] : cand) out.push_back(n);
  return out;
}

/// Largest amount by which any bisector against `shells` replicas cuts the cell.
inline double shell_violation(const ConvexCell& cell, const PeriodicPointSet& set, int shells) {
  double worst = 0.0;
  for (const Neighbor& nb : neighbor_candidates(static_cast<std::size_t>(cell.site_index), set, shells)) {
    const Vec3 d = nb.point - cell.site;
    const Vec3 n = d.normalized();
    const double off = n.dot(cell.site) + 0.5 * d.norm();
    for (const Vec3& v : cell.vertices) worst = std::max(worst, n.dot(v) - off);
  }
  return worst;
}

/// The periodic Voronoi cell of one site.
inline ConvexCell voronoi_cell(std::size_t site_index, const PeriodicPointSet& set,
                               const ClipConfig& cfg = {}) {
  if (set.size() == 0) throw Error("empty point set");
  const double eps = cfg.eps_rel * set.period;
  ConvexCell cell = clip_cell(set.points.at(site_index), neighbor_candidates(site_index, set, cfg.shells),
                              set.period, eps);
  cell.site_index = static_cast<int>(site_index);
  if (cfg.validation_shells > cfg.shells) {
    const double cut = shell_violation(cell, set, cfg.validation_shells);
    if (cut > eps)
      throw ShellValidationError("a replica beyond the clipping shells cuts the cell by " +
                                 std::to_string(cut));
  }
  return cell;
}

/// Cells of every site, built in parallel; order follows the set.
inline std::vector<ConvexCell> voronoi_cells(const PeriodicPointSet& set, const ClipConfig& cfg = {}) {
  return detail::parallel_map(set.size(), cfg.threads,
                              [&](std::size_t i) { return voronoi_cell(i, set, cfg); });
}

struct PartitionReport {
  int samples = 0;
  int gaps = 0;      // nearest site's cell misses the point
  int overlaps = 0;  // some other cell strictly contains the point
  double volume_ratio = 0.0;
  std::optional<Vec3> first_gap;
  std::optional<Vec3> first_overlap;
  bool ok(double volume_tol = 1e-9) const {
    return gaps == 0 && overlaps == 0 && std::abs(volume_ratio - 1.0) <= volume_tol;
  }
};

class PartitionGap : public Error {
 public:
  PartitionGap(const std::string& what, Vec3 p) : Error(what), point(p) {}
  Vec3 point;
};

class PartitionOverlap : public Error {
 public:
  PartitionOverlap(const std::string& what, Vec3 p) : Error(what), point(p) {}
  Vec3 point;
};

/// Sample the period cube and compare each point's nearest site with the
/// cells that contain it. Face planes come from the current vertex cycles, so
/// edited cells are checked as they are.
inline PartitionReport check_partition(const std::vector<ConvexCell>& cells, const PeriodicPointSet& set,
                                       int samples, std::uint64_t seed, double eps_rel = 1e-6) {
  if (cells.size() != set.size()) throw Error("need one cell per site");
  const double eps = eps_rel * set.period;
  struct Plane {
    Vec3 n;
    double d;
  };
  std::vector<std::vector<Plane>> planes(cells.size());
  PartitionReport rep;
  double volume = 0.0;
  for (std::size_t c = 0; c < cells.size(); ++c) {
    for (const Face& f : cells[c].faces) {
      const auto pts = cells[c].face_points(f);
      const Vec3 n = newell_normal(pts).normalized();
      Vec3 centroid = Vec3::Zero();
      for (const Vec3& p : pts) centroid += p;
      centroid /= static_cast<double>(pts.size());
      planes[c].push_back({n, n.dot(centroid)});
    }
    volume += cell_volume(cells[c]);
  }
  rep.volume_ratio = volume / std::pow(set.period, 3);

  auto margin = [&](std::size_t c, const Vec3& p) {
    double m = -std::numeric_limits<double>::infinity();
    for (const Plane& pl : planes[c]) m = std::max(m, pl.n.dot(p) - pl.d);
    return m;  // <= 0 inside
  };

  UnitRng rng(seed);
  for (int s = 0; s < samples; ++s) {
    const Vec3 x = Vec3(rng(), rng(), rng()) * set.period;
    std::size_t best = 0;
    double best_d = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < set.size(); ++i) {
      const double d = periodic_distance(x, set.points[i], set.period);
      if (d < best_d) best_d = d, best = i;
    }
    ++rep.samples;
    for (std::size_t c = 0; c < cells.size(); ++c) {
      const Vec3 image = cells[c].site + min_image(x, cells[c].site, set.period);
      const double m = margin(c, image);
      if (c == best && m > eps) {
        ++rep.gaps;
        if (!rep.first_gap) rep.first_gap = x;
      }
      if (c != best && m < -eps) {
        ++rep.overlaps;
        if (!rep.first_overlap) rep.first_overlap = x;
      }
    }
  }
  return rep;
}

/// check_partition that throws on any violation. A volume sum above the
/// period volume counts as overlap, below as a gap.
inline PartitionReport validate_partition(const std::vector<ConvexCell>& cells,
                                          const PeriodicPointSet& set, int samples,
                                          std::uint64_t seed, double eps_rel = 1e-6) {
  PartitionReport rep = check_partition(cells, set, samples, seed, eps_rel);
  if (rep.first_overlap) throw PartitionOverlap("cells overlap at a sample point", *rep.first_overlap);
  if (rep.first_gap) throw PartitionGap("sample point not covered by its nearest cell", *rep.first_gap);
  if (rep.volume_ratio > 1.0 + 1e-9)
    throw PartitionOverlap("cell volumes exceed the period volume", Vec3::Zero());
  if (rep.volume_ratio < 1.0 - 1e-9)
    throw PartitionGap("cell volumes fall short of the period volume", Vec3::Zero());
  return rep;
}

}  // namespace plesio
