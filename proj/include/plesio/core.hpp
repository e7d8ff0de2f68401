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

#include <Eigen/Dense>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <exception>
#include <mutex>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace plesio {

using Vec3 = Eigen::Vector3d;
using Vec2 = Eigen::Vector2d;
using Mat3 = Eigen::Matrix3d;
using Shift3 = Eigen::Vector3i;

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Coordinate frames used when reporting geometry of cubic-periodic sets.
///
/// `Unit` has period 1, `Num` period 8 (coordinates are eighths of the cell),
/// `Int` period 24 (vertices of the FKS cells become integers).
enum class Frame { Unit, Num, Int, Native, Custom };

inline double frame_period(Frame f) {
  switch (f) {
    case Frame::Unit:
      return 1.0;
    case Frame::Num:
      return 8.0;
    case Frame::Int:
      return 24.0;
    case Frame::Native:
      return kTwoPi;
    case Frame::Custom:
      break;
  }
  throw Error("custom frame has no fixed period");
}

inline Frame frame_of_period(double period) {
  for (Frame f : {Frame::Unit, Frame::Num, Frame::Int, Frame::Native}) {
    if (std::abs(frame_period(f) - period) < 1e-12 * period) return f;
  }
  return Frame::Custom;
}

inline std::string frame_name(Frame f) {
  switch (f) {
    case Frame::Unit:
      return "F_unit";
    case Frame::Num:
      return "F_num";
    case Frame::Int:
      return "F_int";
    case Frame::Native:
      return "native";
    case Frame::Custom:
      break;
  }
  return "custom";
}

/// Wrap a coordinate into [0, period).
inline double wrap(double v, double period) {
  double w = v - period * std::floor(v / period);
  if (w >= period) w -= period;
  if (w < 0.0) w = 0.0;
  return w;
}

inline Vec3 wrap(const Vec3& p, double period) {
  return {wrap(p.x(), period), wrap(p.y(), period), wrap(p.z(), period)};
}

/// Minimum-image difference a - b in a cubic lattice.
inline Vec3 min_image(const Vec3& a, const Vec3& b, double period) {
  Vec3 d = a - b;
  for (int i = 0; i < 3; ++i) d[i] -= period * std::round(d[i] / period);
  return d;
}

/// An element of the full octahedral group O_h, stored as a signed
/// permutation: (M v)_i = sign[i] * v[perm[i]].
struct SignedPermutation {
  std::array<int, 3> perm{0, 1, 2};
  std::array<int, 3> sign{1, 1, 1};

  static SignedPermutation identity() { return {}; }

  Mat3 matrix() const {
    Mat3 m = Mat3::Zero();
    for (int i = 0; i < 3; ++i) m(i, perm[i]) = sign[i];
    return m;
  }

  Vec3 apply(const Vec3& v) const {
    return {sign[0] * v[perm[0]], sign[1] * v[perm[1]], sign[2] * v[perm[2]]};
  }

  int determinant() const {
    int parity = 1;
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j)
        if (perm[i] > perm[j]) parity = -parity;
    return parity * sign[0] * sign[1] * sign[2];
  }

  bool proper() const { return determinant() == 1; }

  /// this * other, i.e. apply `other` first.
  SignedPermutation compose(const SignedPermutation& other) const {
    SignedPermutation r;
    for (int i = 0; i < 3; ++i) {
      r.perm[i] = other.perm[perm[i]];
      r.sign[i] = sign[i] * other.sign[perm[i]];
    }
    return r;
  }

  SignedPermutation inverse() const {
    SignedPermutation r;
    for (int i = 0; i < 3; ++i) {
      r.perm[perm[i]] = i;
      r.sign[perm[i]] = sign[i];
    }
    return r;
  }

  bool operator==(const SignedPermutation&) const = default;

  static SignedPermutation from_matrix(const Mat3& m) {
    SignedPermutation r;
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        if (std::abs(m(i, j)) > 0.5) {
          r.perm[i] = j;
          r.sign[i] = m(i, j) > 0 ? 1 : -1;
        }
      }
    }
    return r;
  }

  std::string to_string() const {
    static constexpr char axes[] = {'x', 'y', 'z'};
    std::string s = "(";
    for (int i = 0; i < 3; ++i) {
      if (i) s += ",";
      s += sign[i] < 0 ? "-" : "+";
      s += axes[perm[i]];
    }
    return s + ")";
  }
};

/// Right-handed rotation about a world axis (0 = X, 1 = Y, 2 = Z) by a
/// multiple of 90 degrees.
inline SignedPermutation axis_rotation(int axis, int quarter_turns) {
  const int q = ((quarter_turns % 4) + 4) % 4;
  const double angle = q * std::numbers::pi / 2.0;
  Mat3 m = Eigen::AngleAxisd(angle, Vec3::Unit(axis)).toRotationMatrix();
  return SignedPermutation::from_matrix(m.array().round().matrix());
}

/// The 48 elements of O_h in a fixed order: the 24 rotations first (identity
/// leading), then the 24 improper elements.
inline const std::vector<SignedPermutation>& octahedral_group() {
  static const std::vector<SignedPermutation> group = [] {
    std::vector<SignedPermutation> proper, improper;
    std::array<int, 3> p{0, 1, 2};
    do {
      for (int mask = 0; mask < 8; ++mask) {
        SignedPermutation g;
        g.perm = p;
        for (int i = 0; i < 3; ++i) g.sign[i] = (mask >> i) & 1 ? -1 : 1;
        (g.proper() ? proper : improper).push_back(g);
      }
    } while (std::next_permutation(p.begin(), p.end()));
    proper.insert(proper.end(), improper.begin(), improper.end());
    return proper;
  }();
  return group;
}

/// Deterministic uniform doubles in [0, 1) from a 64-bit Mersenne twister;
/// avoids the implementation-defined std::uniform_real_distribution.
class UnitRng {
 public:
  explicit UnitRng(std::uint64_t seed) : engine_(seed) {}
  double operator()() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 engine_;
};

namespace detail {

// Deterministic parallel map over [0, n); output order is independent of the
// thread count.
template <class Fn>
auto parallel_map(std::size_t n, int threads, Fn fn) {
  using R = decltype(fn(std::size_t{0}));
  std::vector<R> out(n);
  unsigned hw = threads > 0 ? static_cast<unsigned>(threads) : std::thread::hardware_concurrency();
  hw = std::max(1u, std::min<unsigned>(hw, static_cast<unsigned>(n)));
  if (hw <= 1) {
    for (std::size_t i = 0; i < n; ++i) out[i] = fn(i);
    return out;
  }
  std::vector<std::thread> pool;
  std::exception_ptr failure;
  std::mutex failure_mutex;
  for (unsigned t = 0; t < hw; ++t) {
    pool.emplace_back([&, t] {
      try {
        for (std::size_t i = t; i < n; i += hw) out[i] = fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
  return out;
}

}  // namespace detail

}  // namespace plesio
