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

#include <numeric>
#include <optional>

#include "plesio/formula/field.hpp"

namespace plesio {

enum class Kind { Minimum, Maximum };

inline const char* kind_name(Kind k) { return k == Kind::Minimum ? "minimum" : "maximum"; }

/// Reduced fraction num/den of the period.
struct Fraction {
  long num = 0;
  long den = 1;
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  bool operator==(const Fraction&) const = default;
};

struct ExtremalPoint {
  Vec3 position = Vec3::Zero();  // in [0, period)^3
  double value = 0.0;
  Kind kind = Kind::Minimum;
  std::optional<std::array<Fraction, 3>> snapped;

  /// Exact rational position when snapped, else the optimizer's position.
  Vec3 site(double period) const {
    if (!snapped) return position;
    const auto& s = *snapped;
    return Vec3(s[0].value(), s[1].value(), s[2].value()) * period;
  }
};

struct ExtremaConfig {
  int grid = 8;  // starts = grid^3
  std::uint64_t seed = 1;
  double grad_tol = 1e-8;
  double dedup_radius = 0.0;        // 0: period / 64
  int snap_denominator_max = 48;
  double snap_tol = 0.0;            // 0: 1e-4 * period
  int max_points = 200;
  double degenerate_spacing = 0.0;  // 0: period / 256
  double value_tol_rel = 1e-6;      // of the range width
  int threads = 0;                  // 0: hardware concurrency

  int starts() const { return grid * grid * grid; }
};

struct DegenerateInfo {
  Kind kind;
  std::string reason;
};

/// The extremal set is not a finite point set (a curve, a surface, or more
/// points than the configured bound).
class DegenerateLocus : public Error {
 public:
  explicit DegenerateLocus(DegenerateInfo info)
      : Error(std::string("degenerate ") + kind_name(info.kind) + " locus: " + info.reason),
        info_(std::move(info)) {}
  const DegenerateInfo& info() const { return info_; }

 private:
  DegenerateInfo info_;
};

struct ExtremalSet {
  PeriodicField field;
  std::vector<ExtremalPoint> minima;
  std::vector<ExtremalPoint> maxima;
  double global_min = 0.0;
  double global_max = 0.0;
  std::optional<DegenerateInfo> degenerate_min;
  std::optional<DegenerateInfo> degenerate_max;

  const std::vector<ExtremalPoint>& points(Kind k) const {
    return k == Kind::Minimum ? minima : maxima;
  }
  const std::optional<DegenerateInfo>& degenerate(Kind k) const {
    return k == Kind::Minimum ? degenerate_min : degenerate_max;
  }
  std::pair<double, double> range() const { return {global_min, global_max}; }
};

namespace detail {

// Local descent on g = sign * f.
class Descent {
 public:
  Descent(const PeriodicField& f, double sign, double grad_tol)
      : f_(f), sign_(sign), grad_tol_(grad_tol), max_step_(f.period() / 8.0) {}

  std::pair<double, Vec3> eval(const Vec3& p) const {
    auto [v, g] = f_.value_and_gradient(p);
    return {sign_ * v, sign_ * g};
  }

  Mat3 hessian(const Vec3& p) const {
    const double h = 1e-6 * f_.period();
    Mat3 hs;
    for (int i = 0; i < 3; ++i) {
      const Vec3 e = h * Vec3::Unit(i);
      hs.col(i) = (eval(p + e).second - eval(p - e).second) / (2.0 * h);
    }
    return 0.5 * (hs + hs.transpose());
  }

  // Returns the converged point, or nullopt when the gradient tolerance is
  // not reached.
  std::optional<Vec3> run(Vec3 x) const {
    auto [fx, gx] = eval(x);
    // Steepest descent moves away from the arbitrary start quickly.
    for (int it = 0; it < 12 && gx.norm() > grad_tol_; ++it) {
      Vec3 dir = -gx;
      if (!line_search(x, fx, gx, dir)) break;
    }
    Mat3 inv_h = Mat3::Identity();
    bool scaled = false;
    for (int it = 0; it < 400 && gx.norm() > 1e-3 * grad_tol_; ++it) {
      Vec3 dir = -inv_h * gx;
      if (dir.dot(gx) >= 0.0) {
        inv_h.setIdentity();
        dir = -gx;
      }
      const Vec3 x0 = x, g0 = gx;
      if (!line_search(x, fx, gx, dir)) {
        if (inv_h == Mat3::Identity()) break;
        inv_h.setIdentity();
        continue;
      }
      const Vec3 s = x - x0, y = gx - g0;
      const double sy = s.dot(y);
      if (sy <= 1e-300) continue;
      if (!scaled) {
        inv_h *= sy / y.squaredNorm();
        scaled = true;
      }
      const Mat3 v = Mat3::Identity() - (s * y.transpose()) / sy;
      inv_h = v * inv_h * v.transpose() + (s * s.transpose()) / sy;
    }
    polish(x, fx, gx);
    if (!(gx.norm() < grad_tol_)) return std::nullopt;
    return x;
  }

 private:
  // Armijo backtracking along dir; updates x, fx, gx on success.
  bool line_search(Vec3& x, double& fx, Vec3& gx, Vec3 dir) const {
    const double len = dir.norm();
    if (!(len > 0.0)) return false;
    if (len > max_step_) dir *= max_step_ / len;
    const double slope = gx.dot(dir);
    if (slope >= 0.0) return false;
    double t = 1.0;
    for (int k = 0; k < 60; ++k, t *= 0.5) {
      const Vec3 xn = x + t * dir;
      auto [fn, gn] = eval(xn);
      if (fn <= fx + 1e-4 * t * slope) {
        x = xn;
        fx = fn;
        gx = gn;
        return true;
      }
    }
    return false;
  }

  // Newton steps with the finite-difference Hessian of the exact gradient;
  // only taken where the Hessian is positive definite and the step helps.
  void polish(Vec3& x, double& fx, Vec3& gx) const {
    for (int it = 0; it < 8 && gx.norm() > 1e-6 * grad_tol_; ++it) {
      Eigen::SelfAdjointEigenSolver<Mat3> eig(hessian(x));
      if (eig.eigenvalues().minCoeff() <= 1e-9 * std::max(1.0, eig.eigenvalues().maxCoeff()))
        return;
      const Vec3 step = -eig.eigenvectors() *
                        (eig.eigenvectors().transpose() * gx).cwiseQuotient(eig.eigenvalues());
      auto [fn, gn] = eval(x + step);
      if (!(gn.norm() < gx.norm())) return;
      x += step;
      fx = fn;
      gx = gn;
    }
  }

  const PeriodicField& f_;
  double sign_;
  double grad_tol_;
  double max_step_;
};

inline bool lex_less(const Vec3& a, const Vec3& b) {
  return std::lexicographical_compare(a.data(), a.data() + 3, b.data(), b.data() + 3);
}

inline std::optional<Fraction> snap_coordinate(double u, int qmax, double tol) {
  for (long q = 1; q <= qmax; ++q) {
    const long p = std::lround(u * static_cast<double>(q));
    if (std::abs(u - static_cast<double>(p) / static_cast<double>(q)) <= tol) {
      const long r = p % q == 0 ? q : std::gcd(p, q);
      Fraction f{p / r, q / r};
      if (f.num == f.den) f.num = 0, f.den = 1;
      return f;
    }
  }
  return std::nullopt;
}

}  // namespace detail

/// Fill `point.snapped` when every coordinate is within snap_tol of a fraction
/// p/q (q <= snap_denominator_max) of the period and the field confirms the
/// rational point is an extremum of the same value.
inline ExtremalPoint snap_rational(ExtremalPoint point, const PeriodicField& field,
                                   const ExtremaConfig& cfg = {}) {
  const double period = field.period();
  const double tol = (cfg.snap_tol > 0.0 ? cfg.snap_tol : 1e-4 * period) / period;
  std::array<Fraction, 3> fr;
  for (int i = 0; i < 3; ++i) {
    auto f = detail::snap_coordinate(point.position[i] / period, cfg.snap_denominator_max, tol);
    if (!f) {
      point.snapped.reset();
      return point;
    }
    fr[i] = *f;
  }
  const Vec3 exact = Vec3(fr[0].value(), fr[1].value(), fr[2].value()) * period;
  auto [v, g] = field.value_and_gradient(exact);
  if (g.norm() < cfg.grad_tol && std::abs(v - point.value) < 1e-9) {
    point.snapped = fr;
  } else {
    point.snapped.reset();
  }
  return point;
}

/// Multistart search for all global minima and maxima within one period.
/// Degenerate loci are recorded on the result instead of thrown.
inline ExtremalSet search_extrema(const PeriodicField& field, const ExtremaConfig& cfg = {}) {
  if (cfg.starts() < 64) throw Error("extremum search needs at least 64 starts");
  const double period = field.period();
  const double dedup = cfg.dedup_radius > 0.0 ? cfg.dedup_radius : period / 64.0;
  const double spacing = cfg.degenerate_spacing > 0.0 ? cfg.degenerate_spacing : period / 256.0;

  // Jittered grid starts, drawn sequentially so they do not depend on threads.
  std::vector<Vec3> starts;
  UnitRng rng(cfg.seed);
  for (int i = 0; i < cfg.grid; ++i)
    for (int j = 0; j < cfg.grid; ++j)
      for (int k = 0; k < cfg.grid; ++k) {
        const Vec3 cell(i, j, k);
        const Vec3 jitter(rng(), rng(), rng());
        starts.push_back((cell + jitter) * (period / cfg.grid));
      }

  struct Run {
    std::optional<Vec3> min_at, max_at;
  };
  const detail::Descent down(field, 1.0, cfg.grad_tol), up(field, -1.0, cfg.grad_tol);
  auto runs = detail::parallel_map(starts.size(), cfg.threads, [&](std::size_t i) {
    return Run{down.run(starts[i]), up.run(starts[i])};
  });

  ExtremalSet out{field, {}, {}, 0.0, 0.0, std::nullopt, std::nullopt};
  std::vector<std::pair<double, Vec3>> found[2];
  for (const Run& r : runs) {
    if (r.min_at) found[0].emplace_back(field(*r.min_at), wrap(*r.min_at, period));
    if (r.max_at) found[1].emplace_back(field(*r.max_at), wrap(*r.max_at, period));
  }
  if (found[0].empty() || found[1].empty()) throw Error("no local descent converged");
  double lo = found[0][0].first, hi = found[1][0].first;
  for (auto& [v, p] : found[0]) lo = std::min(lo, v);
  for (auto& [v, p] : found[1]) hi = std::max(hi, v);
  out.global_min = lo;
  out.global_max = hi;
  const double value_tol = cfg.value_tol_rel * std::max(hi - lo, 1e-300);

  for (int kind = 0; kind < 2; ++kind) {
    const Kind k = kind == 0 ? Kind::Minimum : Kind::Maximum;
    const double extreme = kind == 0 ? lo : hi;
    const detail::Descent& desc = kind == 0 ? down : up;
    std::optional<DegenerateInfo>& degenerate = kind == 0 ? out.degenerate_min : out.degenerate_max;

    std::vector<Vec3> pts;
    for (auto& [v, p] : found[kind])
      if (std::abs(v - extreme) <= value_tol) pts.push_back(p);
    std::sort(pts.begin(), pts.end(), detail::lex_less);

    // Single-linkage clusters under the periodic metric.
    std::vector<int> cluster(pts.size(), -1);
    int clusters = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (cluster[i] >= 0) continue;
      cluster[i] = clusters;
      std::vector<std::size_t> stack{i};
      while (!stack.empty()) {
        const std::size_t a = stack.back();
        stack.pop_back();
        for (std::size_t b = 0; b < pts.size(); ++b)
          if (cluster[b] < 0 && min_image(pts[a], pts[b], period).norm() < dedup) {
            cluster[b] = clusters;
            stack.push_back(b);
          }
      }
      ++clusters;
    }

    std::vector<ExtremalPoint> reps;
    for (int c = 0; c < clusters && !degenerate; ++c) {
      std::vector<Vec3> members;
      for (std::size_t i = 0; i < pts.size(); ++i)
        if (cluster[i] == c) members.push_back(pts[i]);
      // Representative: the member with the smallest gradient.
      Vec3 best = members.front();
      double best_g = field.gradient(best).norm();
      double extent = 0.0;
      for (const Vec3& m : members) {
        const double g = field.gradient(m).norm();
        if (g < best_g) best_g = g, best = m;
      }
      for (const Vec3& m : members) extent = std::max(extent, min_image(m, best, period).norm());
      if (extent > spacing) {
        degenerate = DegenerateInfo{k, "converged points spread over a continuum"};
        break;
      }
      ExtremalPoint ep{best, field(best), k, std::nullopt};
      reps.push_back(snap_rational(ep, field, cfg));
    }
    if (!degenerate && static_cast<int>(reps.size()) > cfg.max_points)
      degenerate = DegenerateInfo{k, std::to_string(reps.size()) + " distinct points exceed the bound"};

    // A flat Hessian direction that leads to another extremum of the same
    // value marks a continuous locus the multistart happened to sample sparsely.
    for (std::size_t i = 0; i < reps.size() && !degenerate; ++i) {
      const Vec3 p = reps[i].position;
      Eigen::SelfAdjointEigenSolver<Mat3> eig(desc.hessian(p));
      const double big = eig.eigenvalues().cwiseAbs().maxCoeff();
      if (!(eig.eigenvalues()[0] < 1e-3 * big)) continue;
      for (double dir : {-1.0, 1.0}) {
        const Vec3 probe = p + dir * (period / 32.0) * eig.eigenvectors().col(0);
        auto q = desc.run(probe);
        if (!q) continue;
        if (std::abs(field(*q) - extreme) <= value_tol &&
            min_image(*q, p, period).norm() > spacing) {
          degenerate = DegenerateInfo{k, "extremum value is attained along a flat direction"};
          break;
        }
      }
    }

    if (degenerate) continue;
    std::sort(reps.begin(), reps.end(), [period](const ExtremalPoint& a, const ExtremalPoint& b) {
      return detail::lex_less(a.site(period), b.site(period));
    });
    (kind == 0 ? out.minima : out.maxima) = std::move(reps);
  }
  return out;
}

/// As search_extrema, but throws DegenerateLocus when the requested kinds are
/// not finite point sets.
inline ExtremalSet find_extrema(const PeriodicField& field, const ExtremaConfig& cfg = {},
                                std::initializer_list<Kind> required = {Kind::Minimum,
                                                                        Kind::Maximum}) {
  ExtremalSet s = search_extrema(field, cfg);
  for (Kind k : required)
    if (s.degenerate(k)) throw DegenerateLocus(*s.degenerate(k));
  return s;
}

inline std::pair<double, double> range_of(const PeriodicField& field, const ExtremaConfig& cfg = {}) {
  return search_extrema(field, cfg).range();
}

}  // namespace plesio
