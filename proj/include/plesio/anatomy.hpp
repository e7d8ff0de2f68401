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

#include <map>
#include <optional>

#include "plesio/cell.hpp"

namespace plesio {

/// A measured value and how many elements share it.
struct ValueClass {
  double value;
  int count;
  bool operator==(const ValueClass&) const = default;
};

/// Group values whose sorted neighbors differ by at most tol; each class
/// reports the mean of its members.
inline std::vector<ValueClass> cluster_values(std::vector<double> values, double tol) {
  std::sort(values.begin(), values.end());
  std::vector<ValueClass> out;
  double sum = 0.0;
  int n = 0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (n > 0 && values[i] - values[i - 1] > tol) {
      out.push_back({sum / n, n});
      sum = 0.0;
      n = 0;
    }
    sum += values[i];
    ++n;
  }
  if (n > 0) out.push_back({sum / n, n});
  return out;
}

/// Rotation-, reflection- and translation-invariant description of a cell.
struct ShapeFingerprint {
  int faces = 0;
  int vertices = 0;
  int edges = 0;
  std::map<int, int> face_degrees;  // degree -> count
  std::vector<ValueClass> edge_lengths;
  std::vector<ValueClass> face_distances;
  std::vector<ValueClass> vertex_radii;
  double volume = 0.0;
  double roundness = 0.0;

  double scale() const { return std::cbrt(volume); }

  double mean_edge() const {
    double s = 0.0;
    int n = 0;
    for (const auto& c : edge_lengths) s += c.value * c.count, n += c.count;
    return n ? s / n : 0.0;
  }

  /// Volume over the cube of the mean edge length; scale-free.
  double normalized_volume() const {
    const double e = mean_edge();
    return e > 0.0 ? volume / (e * e * e) : 0.0;
  }

  bool same_combinatorics(const ShapeFingerprint& o) const {
    return faces == o.faces && vertices == o.vertices && edges == o.edges &&
           face_degrees == o.face_degrees;
  }
};

inline double roundness(const ConvexCell& c) {
  const double r = circumradius(c);
  return cell_volume(c) / (4.0 / 3.0 * std::numbers::pi * r * r * r);
}

inline ShapeFingerprint fingerprint(const ConvexCell& c, double tol_rel = 1e-4) {
  ShapeFingerprint fp;
  fp.faces = c.num_faces();
  fp.vertices = c.num_vertices();
  fp.edges = c.num_edges();
  for (const Face& f : c.faces) ++fp.face_degrees[static_cast<int>(f.cycle.size())];
  fp.volume = cell_volume(c);
  fp.roundness = roundness(c);
  const double tol = tol_rel * fp.scale();
  std::vector<double> lengths, dists, radii;
  for (const auto& e : c.edges) lengths.push_back((c.vertices[e[0]] - c.vertices[e[1]]).norm());
  for (const Face& f : c.faces) dists.push_back(std::abs(f.offset - f.normal.dot(c.site)));
  for (const Vec3& v : c.vertices) radii.push_back((v - c.site).norm());
  fp.edge_lengths = cluster_values(lengths, tol);
  fp.face_distances = cluster_values(dists, tol);
  fp.vertex_radii = cluster_values(radii, tol);
  return fp;
}

namespace detail {

inline bool classes_match(const std::vector<ValueClass>& a, const std::vector<ValueClass>& b,
                          double tol) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i].count != b[i].count || std::abs(a[i].value - b[i].value) > tol) return false;
  return true;
}

}  // namespace detail

/// Fingerprints equal up to tol_rel of the scale in every measured length.
inline bool same_fingerprint(const ShapeFingerprint& a, const ShapeFingerprint& b,
                             double tol_rel = 1e-4) {
  const double tol = tol_rel * std::max(a.scale(), b.scale());
  return a.same_combinatorics(b) && detail::classes_match(a.edge_lengths, b.edge_lengths, tol) &&
         detail::classes_match(a.face_distances, b.face_distances, tol) &&
         detail::classes_match(a.vertex_radii, b.vertex_radii, tol) &&
         std::abs(a.volume - b.volume) <= tol * a.scale() * a.scale() * 3.0;
}

/// Foot of the perpendicular from the site onto a face plane.
struct FacePoint {
  Vec3 point;
  double distance;
  bool inside_face;
};

inline std::vector<FacePoint> face_closest_points(const ConvexCell& c, double eps_rel = 1e-9) {
  std::vector<FacePoint> out;
  const double eps = eps_rel * std::cbrt(cell_volume(c));
  for (const Face& f : c.faces) {
    const double d = f.offset - f.normal.dot(c.site);
    const Vec3 foot = c.site + d * f.normal;
    bool inside = true;
    for (std::size_t k = 0; k < f.cycle.size(); ++k) {
      const Vec3& a = c.vertices[f.cycle[k]];
      const Vec3& b = c.vertices[f.cycle[(k + 1) % f.cycle.size()]];
      if ((b - a).cross(foot - a).dot(f.normal) < -eps * (b - a).norm()) inside = false;
    }
    out.push_back({foot, std::abs(d), inside});
  }
  return out;
}

/// Interior angles in degrees, in cycle order: entry k is the angle at
/// cycle[k].
inline std::vector<double> face_angles(const ConvexCell& c, const Face& f) {
  std::vector<double> out;
  const std::size_t n = f.cycle.size();
  for (std::size_t k = 0; k < n; ++k) {
    const Vec3& prev = c.vertices[f.cycle[(k + n - 1) % n]];
    const Vec3& cur = c.vertices[f.cycle[k]];
    const Vec3& next = c.vertices[f.cycle[(k + 1) % n]];
    const Vec3 u = (prev - cur).normalized(), v = (next - cur).normalized();
    out.push_back(std::atan2(u.cross(v).norm(), u.dot(v)) * 180.0 / std::numbers::pi);
  }
  return out;
}

/// Interior angles of every quadrilateral face.
inline std::vector<std::array<double, 4>> quad_angle_check(const ConvexCell& c) {
  std::vector<std::array<double, 4>> out;
  for (const Face& f : c.faces) {
    if (f.cycle.size() != 4) continue;
    auto a = face_angles(c, f);
    out.push_back({a[0], a[1], a[2], a[3]});
  }
  return out;
}

/// The two angles at the ends of a quad's longest edge.
inline std::array<double, 2> angles_at_longest_edge(const ConvexCell& c, const Face& f) {
  const std::size_t n = f.cycle.size();
  std::size_t longest = 0;
  double best = -1.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double len = (c.vertices[f.cycle[(k + 1) % n]] - c.vertices[f.cycle[k]]).norm();
    if (len > best) best = len, longest = k;
  }
  const auto a = face_angles(c, f);
  return {a[longest], a[(longest + 1) % n]};
}

/// Handedness of a face seen from outside: +1 when, walking counterclockwise,
/// the edge after the longest edge is longer than the edge before it, -1 when
/// shorter, 0 when they tie.
inline int face_handedness(const ConvexCell& c, const Face& f, double tol_rel = 1e-6) {
  const std::size_t n = f.cycle.size();
  std::vector<double> len(n);
  for (std::size_t k = 0; k < n; ++k)
    len[k] = (c.vertices[f.cycle[(k + 1) % n]] - c.vertices[f.cycle[k]]).norm();
  const std::size_t longest = static_cast<std::size_t>(std::max_element(len.begin(), len.end()) - len.begin());
  const double after = len[(longest + 1) % n], before = len[(longest + n - 1) % n];
  const double tol = tol_rel * len[longest];
  if (after > before + tol) return 1;
  if (after < before - tol) return -1;
  return 0;
}

/// Edge lengths and interior angles read counterclockwise from outside, as
/// alternating entries (length of edge k, angle at the end of edge k).
inline std::vector<double> face_signature(const ConvexCell& c, const Face& f) {
  const std::size_t n = f.cycle.size();
  const auto ang = face_angles(c, f);
  std::vector<double> sig;
  for (std::size_t k = 0; k < n; ++k) {
    sig.push_back((c.vertices[f.cycle[(k + 1) % n]] - c.vertices[f.cycle[k]]).norm());
    sig.push_back(ang[(k + 1) % n]);
  }
  return sig;
}

namespace detail {

inline bool cyclic_equal(const std::vector<double>& a, const std::vector<double>& b,
                         double len_tol, double ang_tol) {
  if (a.size() != b.size()) return false;
  const std::size_t n = a.size();
  for (std::size_t shift = 0; shift < n; shift += 2) {
    bool ok = true;
    for (std::size_t k = 0; k < n && ok; ++k) {
      const double tol = k % 2 == 0 ? len_tol : ang_tol;
      ok = std::abs(a[k] - b[(k + shift) % n]) <= tol;
    }
    if (ok) return true;
  }
  return false;
}

// The signature of the mirror image: traverse the cycle the other way.
inline std::vector<double> mirrored_signature(const std::vector<double>& sig) {
  const std::size_t n = sig.size() / 2;
  std::vector<double> out;
  for (std::size_t k = 0; k < n; ++k) {
    // Reversed walk: edge k of the mirror is edge n-1-k; the angle at its
    // end is the angle at the start of the original edge.
    const std::size_t e = n - 1 - k;
    out.push_back(sig[2 * e]);
    out.push_back(sig[2 * ((e + n - 1) % n) + 1]);
  }
  return out;
}

}  // namespace detail

/// Faces grouped by oriented congruence (same cyclic length/angle sequence
/// seen from outside). `mirror_of[i]` is the class whose members are mirror
/// images of class i, or -1.
struct FaceClasses {
  std::vector<std::vector<int>> classes;
  std::vector<int> mirror_of;
};

inline FaceClasses oriented_face_classes(const ConvexCell& c, double tol_rel = 1e-6) {
  const double len_tol = tol_rel * std::cbrt(cell_volume(c));
  const double ang_tol = 1e-6;
  FaceClasses out;
  std::vector<std::vector<double>> reps;
  for (std::size_t i = 0; i < c.faces.size(); ++i) {
    const auto sig = face_signature(c, c.faces[i]);
    bool placed = false;
    for (std::size_t k = 0; k < reps.size() && !placed; ++k)
      if (detail::cyclic_equal(reps[k], sig, len_tol, ang_tol)) {
        out.classes[k].push_back(static_cast<int>(i));
        placed = true;
      }
    if (!placed) {
      reps.push_back(sig);
      out.classes.push_back({static_cast<int>(i)});
    }
  }
  out.mirror_of.assign(reps.size(), -1);
  for (std::size_t a = 0; a < reps.size(); ++a)
    for (std::size_t b = 0; b < reps.size(); ++b)
      if (a != b && detail::cyclic_equal(detail::mirrored_signature(reps[a]), reps[b], len_tol, ang_tol))
        out.mirror_of[a] = static_cast<int>(b);
  return out;
}

/// Pairs of equilateral hexagonal faces with antiparallel normals.
inline std::vector<std::pair<int, int>> parallel_regular_hexagons(const ConvexCell& c,
                                                                  double tol_rel = 1e-6) {
  const double tol = tol_rel * std::cbrt(cell_volume(c));
  std::vector<int> hexes;
  for (std::size_t i = 0; i < c.faces.size(); ++i) {
    const Face& f = c.faces[i];
    if (f.cycle.size() != 6) continue;
    double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
    for (std::size_t k = 0; k < 6; ++k) {
      const double len = (c.vertices[f.cycle[(k + 1) % 6]] - c.vertices[f.cycle[k]]).norm();
      lo = std::min(lo, len);
      hi = std::max(hi, len);
    }
    if (hi - lo <= tol) hexes.push_back(static_cast<int>(i));
  }
  std::vector<std::pair<int, int>> out;
  for (std::size_t a = 0; a < hexes.size(); ++a)
    for (std::size_t b = a + 1; b < hexes.size(); ++b)
      if (c.faces[hexes[a]].normal.dot(c.faces[hexes[b]].normal) < -1.0 + 1e-9)
        out.emplace_back(hexes[a], hexes[b]);
  return out;
}

struct CongruenceResult {
  bool congruent = false;
  std::optional<SignedPermutation> rotation;  // maps a's centered vertices onto b's
  Vec3 translation = Vec3::Zero();           // x -> rotation(x) + translation
  bool proper = false;
};

namespace detail {

// Each transformed vertex of a must have a distinct partner in b within eps.
inline bool vertices_match(const std::vector<Vec3>& a, const std::vector<Vec3>& b,
                           const SignedPermutation& g, double eps) {
  if (a.size() != b.size()) return false;
  std::vector<char> used(b.size(), 0);
  for (const Vec3& v : a) {
    const Vec3 w = g.apply(v);
    bool found = false;
    for (std::size_t j = 0; j < b.size() && !found; ++j)
      if (!used[j] && (b[j] - w).norm() <= eps) used[j] = found = true;
    if (!found) return false;
  }
  return true;
}

}  // namespace detail

/// Search the octahedral group for an element mapping cell a onto cell b
/// (each centered on its site). Proper elements are tried first.
inline CongruenceResult congruent(const ConvexCell& a, const ConvexCell& b, bool allow_reflection,
                                  double tol_rel = 1e-6) {
  CongruenceResult r;
  if (a.num_vertices() != b.num_vertices() || a.num_faces() != b.num_faces()) return r;
  const double eps = tol_rel * std::cbrt(cell_volume(a));
  const auto va = a.centered_vertices(), vb = b.centered_vertices();
  for (const SignedPermutation& g : octahedral_group()) {
    if (!g.proper() && !allow_reflection) break;
    if (detail::vertices_match(va, vb, g, eps)) {
      r.congruent = true;
      r.rotation = g;
      r.proper = g.proper();
      r.translation = b.site - g.apply(a.site);
      return r;
    }
  }
  return r;
}

/// Partition of cells into classes congruent under the full group. Within a
/// class, `families` splits members by proper congruence; two families mean
/// a chiral pair.
struct ShapeClass {
  std::vector<int> members;
  std::vector<std::vector<int>> families;
  bool chiral() const { return families.size() > 1; }
};

inline std::vector<ShapeClass> shape_classes(const std::vector<ConvexCell>& cells, double tol_rel = 1e-6) {
  std::vector<ShapeClass> out;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    bool placed = false;
    for (ShapeClass& sc : out) {
      const auto m = congruent(cells[sc.members.front()], cells[i], true, tol_rel);
      if (!m.congruent) continue;
      sc.members.push_back(static_cast<int>(i));
      bool in_family = false;
      for (auto& fam : sc.families)
        if (congruent(cells[fam.front()], cells[i], false, tol_rel).congruent) {
          fam.push_back(static_cast<int>(i));
          in_family = true;
          break;
        }
      if (!in_family) sc.families.push_back({static_cast<int>(i)});
      placed = true;
      break;
    }
    if (!placed) out.push_back({{static_cast<int>(i)}, {{static_cast<int>(i)}}});
  }
  return out;
}

}  // namespace plesio
