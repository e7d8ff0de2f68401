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

#include <memory>
#include <unordered_map>

#include "plesio/formula/expr.hpp"
#include "plesio/formula/parse.hpp"

namespace plesio {

/// Division by a denominator that evaluates to exactly zero.
class EvalError : public Error {
 public:
  using Error::Error;
};

namespace detail {

// Value plus exact partial derivatives along x, y, z.
struct Jet {
  double v = 0.0;
  Vec3 d = Vec3::Zero();
};

struct Instr {
  Op op;
  int a = -1;
  int b = -1;
  double value = 0.0;
  int axis = 0;
};

// Post-order linearization of an Expr; slot i depends only on slots < i.
class Tape {
 public:
  explicit Tape(const Expr& e) { root_ = emit(e); }

  Jet run(const Vec3& p) const {
    thread_local std::vector<Jet> slots;
    slots.resize(code_.size());
    for (std::size_t i = 0; i < code_.size(); ++i) {
      const Instr& in = code_[i];
      Jet& r = slots[i];
      switch (in.op) {
        case Op::Constant:
          r.v = in.value;
          r.d.setZero();
          break;
        case Op::Variable:
          r.v = p[in.axis];
          r.d = Vec3::Unit(in.axis);
          break;
        case Op::Neg:
          r.v = -slots[in.a].v;
          r.d = -slots[in.a].d;
          break;
        case Op::Add:
          r.v = slots[in.a].v + slots[in.b].v;
          r.d = slots[in.a].d + slots[in.b].d;
          break;
        case Op::Sub:
          r.v = slots[in.a].v - slots[in.b].v;
          r.d = slots[in.a].d - slots[in.b].d;
          break;
        case Op::Mul: {
          const Jet& u = slots[in.a];
          const Jet& w = slots[in.b];
          r.d = u.d * w.v + w.d * u.v;
          r.v = u.v * w.v;
          break;
        }
        case Op::Div: {
          const Jet& u = slots[in.a];
          const Jet& w = slots[in.b];
          if (w.v == 0.0) throw EvalError("division by zero");
          r.v = u.v / w.v;
          r.d = (u.d - w.d * r.v) / w.v;
          break;
        }
        case Op::Sin: {
          const Jet& u = slots[in.a];
          r.d = u.d * std::cos(u.v);
          r.v = std::sin(u.v);
          break;
        }
        case Op::Cos: {
          const Jet& u = slots[in.a];
          r.d = u.d * -std::sin(u.v);
          r.v = std::cos(u.v);
          break;
        }
      }
    }
    return slots[root_];
  }

  std::size_t size() const { return code_.size(); }

 private:
  int emit(const Expr& e) {
    Instr in{e.op()};
    if (e.op() == Op::Constant) in.value = e.value();
    if (e.op() == Op::Variable) in.axis = static_cast<int>(e.axis());
    if (e.is_unary() || e.is_binary()) in.a = emit(e.lhs());
    if (e.is_binary()) in.b = emit(e.rhs());
    code_.push_back(in);
    return static_cast<int>(code_.size()) - 1;
  }

  std::vector<Instr> code_;
  int root_ = 0;
};

}  // namespace detail

/// A scalar field over R^3 that repeats with a cubic period.
///
/// The expression is evaluated at p as written; `period` states the lattice
/// constant of that expression. Use rescaled() to express the same field in
/// another frame.
class PeriodicField {
 public:
  explicit PeriodicField(Expr expr, double period = kTwoPi)
      : expr_(std::move(expr)), period_(period), tape_(std::make_shared<detail::Tape>(expr_)) {
    if (!(period > 0.0) || !std::isfinite(period)) throw Error("period must be positive");
  }

  static PeriodicField from_string(std::string_view text, double period = kTwoPi) {
    return PeriodicField(parse(text), period);
  }

  const Expr& expr() const { return expr_; }
  double period() const { return period_; }

  double operator()(const Vec3& p) const { return tape_->run(p).v; }
  double evaluate(const Vec3& p) const { return tape_->run(p).v; }
  Vec3 gradient(const Vec3& p) const { return tape_->run(p).d; }

  /// Value and gradient from one pass.
  std::pair<double, Vec3> value_and_gradient(const Vec3& p) const {
    auto j = tape_->run(p);
    return {j.v, j.d};
  }

  /// The same geometry expressed in a lattice of period `new_period`:
  /// g(q) = f(q * period / new_period).
  PeriodicField rescaled(double new_period) const {
    if (new_period == period_) return *this;
    const Expr k = Expr::constant(period_ / new_period);
    return PeriodicField(expr_.substitute({Expr::x() * k, Expr::y() * k, Expr::z() * k}),
                         new_period);
  }

  /// Largest |f(p) - f(p + period e_i)| over `samples` deterministic points.
  double periodicity_defect(int samples, std::uint64_t seed = 1) const {
    UnitRng rng(seed);
    double worst = 0.0;
    for (int s = 0; s < samples; ++s) {
      Vec3 p(rng(), rng(), rng());
      p *= period_;
      const double f0 = evaluate(p);
      for (int i = 0; i < 3; ++i) {
        worst = std::max(worst, std::abs(f0 - evaluate(p + period_ * Vec3::Unit(i))));
      }
    }
    return worst;
  }

 private:
  Expr expr_;
  double period_;
  std::shared_ptr<const detail::Tape> tape_;
};

inline double evaluate(const PeriodicField& f, const Vec3& p) { return f.evaluate(p); }
inline Vec3 gradient(const PeriodicField& f, const Vec3& p) { return f.gradient(p); }

}  // namespace plesio
