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

#include <optional>
#include <span>

#include "plesio/cell.hpp"
#include "plesio/extrema.hpp"

namespace plesio {

/// Base points of a cubic-periodic Delone set; translates by the period are
/// implied.
struct PeriodicPointSet {
  std::vector<Vec3> points;
  double period = 1.0;
  std::vector<std::string> labels;  // optional provenance per point

  PeriodicPointSet() = default;
  PeriodicPointSet(std::vector<Vec3> pts, double p, std::vector<std::string> l = {})
      : points(std::move(pts)), period(p), labels(std::move(l)) {
    if (!(period > 0.0)) throw Error("period must be positive");
    for (Vec3& q : points) q = wrap(q, period);
  }

  std::size_t size() const { return points.size(); }

  /// The same set with every coordinate multiplied by new_period / period.
  PeriodicPointSet rescaled(double new_period) const {
    std::vector<Vec3> pts;
    for (const Vec3& q : points) pts.push_back(q * (new_period / period));
    return PeriodicPointSet(std::move(pts), new_period, labels);
  }

  /// Union of the sets; both must share the period.
  PeriodicPointSet merged(const PeriodicPointSet& other) const {
    if (std::abs(other.period - period) > 1e-12 * period) throw Error("period mismatch in merge");
    PeriodicPointSet out = *this;
    out.points.insert(out.points.end(), other.points.begin(), other.points.end());
    if (!labels.empty() || !other.labels.empty()) {
      out.labels.resize(points.size());
      auto l = other.labels;
      l.resize(other.points.size());
      out.labels.insert(out.labels.end(), l.begin(), l.end());
    }
    return out;
  }
};

/// Sites of the given extremal kind(s), snapped when possible.
inline PeriodicPointSet extremal_sites(const ExtremalSet& s, bool minima, bool maxima) {
  std::vector<Vec3> pts;
  std::vector<std::string> labels;
  const double period = s.field.period();
  auto add = [&](const std::vector<ExtremalPoint>& v, const char* tag) {
    for (std::size_t i = 0; i < v.size(); ++i) {
      pts.push_back(v[i].site(period));
      labels.push_back(std::string(tag) + std::to_string(i));
    }
  };
  if (minima) add(s.minima, "min");
  if (maxima) add(s.maxima, "max");
  return PeriodicPointSet(std::move(pts), period, std::move(labels));
}

/// Minimum distance between a and any lattice translate of b.
inline double periodic_distance(const Vec3& a, const Vec3& b, double period) {
  return min_image(a, b, period).norm();
}

struct Replica {
  Vec3 point;
  int source;
  Shift3 shift;
};

/// Every base point translated by each lattice vector with components in
/// [-shells, shells], in a fixed order.
inline std::vector<Replica> replicas(const PeriodicPointSet& set, int shells) {
  if (shells < 1) throw Error("replicas needs shells >= 1");
  std::vector<Replica> out;
  out.reserve(set.size() * static_cast<std::size_t>(std::pow(2 * shells + 1, 3)));
  for (int i = -shells; i <= shells; ++i)
    for (int j = -shells; j <= shells; ++j)
      for (int k = -shells; k <= shells; ++k)
        for (std::size_t s = 0; s < set.size(); ++s) {
          const Shift3 sh(i, j, k);
          out.push_back({set.points[s] + sh.cast<double>() * set.period, static_cast<int>(s), sh});
        }
  return out;
}

struct DeloneRadii {
  double packing_r = 0.0;
  std::optional<double> covering_R;
};

class MissingCells : public Error {
 public:
  MissingCells() : Error("covering radius requires the Voronoi cells of the set") {}
};

/// Half the smallest periodic distance between distinct points (including a
/// point and its own translates).
inline double packing_radius(const PeriodicPointSet& set) {
  double best = set.period;
  for (std::size_t i = 0; i < set.size(); ++i)
    for (std::size_t j = i + 1; j < set.size(); ++j)
      best = std::min(best, periodic_distance(set.points[i], set.points[j], set.period));
  return 0.5 * best;
}

/// Packing radius, and covering radius from the cells' vertices when given.
inline DeloneRadii delone_radii(const PeriodicPointSet& set,
                                std::optional<std::span<const ConvexCell>> cells = std::nullopt,
                                bool want_covering = false) {
  DeloneRadii r{packing_radius(set), std::nullopt};
  if (cells) {
    double cover = 0.0;
    for (const ConvexCell& c : *cells) cover = std::max(cover, circumradius(c));
    r.covering_R = cover;
  } else if (want_covering) {
    throw MissingCells();
  }
  return r;
}

}  // namespace plesio
