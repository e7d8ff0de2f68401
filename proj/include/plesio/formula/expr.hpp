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

#include <charconv>
#include <functional>
#include <memory>
#include <string>
#include <system_error>

#include "plesio/core.hpp"

namespace plesio {

enum class Op : std::uint8_t { Constant, Variable, Neg, Add, Sub, Mul, Div, Sin, Cos };

enum class Axis : std::uint8_t { X = 0, Y = 1, Z = 2 };

/// Immutable expression tree over the variables x, y, z.
///
/// Nodes are shared, so copying an Expr is cheap. Constants are always
/// non-negative; a negative literal is represented as Neg(Constant), which is
/// the shape the parser produces for "-2" and keeps format/parse exact.
class Expr {
  struct Node {
    Op op;
    double value = 0.0;
    Axis axis = Axis::X;
    std::shared_ptr<const Node> lhs;
    std::shared_ptr<const Node> rhs;
  };
  using NodePtr = std::shared_ptr<const Node>;

  explicit Expr(NodePtr n) : node_(std::move(n)) {}

  static Expr make(Op op, const Expr& a, const Expr& b = Expr()) {
    auto n = std::make_shared<Node>();
    n->op = op;
    n->lhs = a.node_;
    n->rhs = b.node_;
    return Expr(std::move(n));
  }

 public:
  /// The constant 0.
  Expr() : Expr(constant(0.0)) {}

  static Expr constant(double v) {
    if (!std::isfinite(v)) throw Error("non-finite constant in expression");
    if (std::signbit(v) && v != 0.0) return -constant(-v);
    auto n = std::make_shared<Node>();
    n->op = Op::Constant;
    n->value = v == 0.0 ? 0.0 : v;
    return Expr(std::move(n));
  }

  static Expr variable(Axis a) {
    auto n = std::make_shared<Node>();
    n->op = Op::Variable;
    n->axis = a;
    return Expr(std::move(n));
  }
  static Expr x() { return variable(Axis::X); }
  static Expr y() { return variable(Axis::Y); }
  static Expr z() { return variable(Axis::Z); }

  static Expr sin(const Expr& e) { return make(Op::Sin, e); }
  static Expr cos(const Expr& e) { return make(Op::Cos, e); }

  friend Expr operator-(const Expr& e) { return make(Op::Neg, e); }
  friend Expr operator+(const Expr& a, const Expr& b) { return make(Op::Add, a, b); }
  friend Expr operator-(const Expr& a, const Expr& b) { return make(Op::Sub, a, b); }
  friend Expr operator*(const Expr& a, const Expr& b) { return make(Op::Mul, a, b); }
  friend Expr operator/(const Expr& a, const Expr& b) { return make(Op::Div, a, b); }

  Op op() const { return node_->op; }
  double value() const { return node_->value; }
  Axis axis() const { return node_->axis; }
  Expr lhs() const { return Expr(node_->lhs); }
  Expr rhs() const { return Expr(node_->rhs); }

  bool is_unary() const { return op() == Op::Neg || op() == Op::Sin || op() == Op::Cos; }
  bool is_binary() const {
    return op() == Op::Add || op() == Op::Sub || op() == Op::Mul || op() == Op::Div;
  }

  /// Structural equality: same node kinds, constants, and variables at every
  /// position.
  friend bool operator==(const Expr& a, const Expr& b) { return same(a.node_.get(), b.node_.get()); }

  std::size_t size() const { return count(node_.get()); }
  std::size_t depth() const { return depth_of(node_.get()); }

  bool uses_division() const {
    if (op() == Op::Div) return true;
    if (is_unary()) return lhs().uses_division();
    if (is_binary()) return lhs().uses_division() || rhs().uses_division();
    return false;
  }

  /// Replace each variable by the given expression.
  Expr substitute(const std::array<Expr, 3>& by) const {
    switch (op()) {
      case Op::Constant:
        return *this;
      case Op::Variable:
        return by[static_cast<int>(axis())];
      default:
        break;
    }
    if (is_unary()) return make(op(), lhs().substitute(by));
    return make(op(), lhs().substitute(by), rhs().substitute(by));
  }

 private:
  static bool same(const Node* a, const Node* b) {
    if (a == b) return true;
    if (!a || !b || a->op != b->op) return false;
    switch (a->op) {
      case Op::Constant:
        return a->value == b->value;
      case Op::Variable:
        return a->axis == b->axis;
      default:
        return same(a->lhs.get(), b->lhs.get()) && same(a->rhs.get(), b->rhs.get());
    }
  }
  static std::size_t count(const Node* n) {
    return n ? 1 + count(n->lhs.get()) + count(n->rhs.get()) : 0;
  }
  static std::size_t depth_of(const Node* n) {
    return n ? 1 + std::max(depth_of(n->lhs.get()), depth_of(n->rhs.get())) : 0;
  }

  NodePtr node_;
};

namespace detail {

inline std::string format_number(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

// Binding strength used to decide where parentheses are needed.
inline int precedence(Op op) {
  switch (op) {
    case Op::Add:
    case Op::Sub:
      return 1;
    case Op::Mul:
    case Op::Div:
      return 2;
    case Op::Neg:
      return 3;
    default:
      return 4;
  }
}

inline void format_into(const Expr& e, std::string& out) {
  auto child = [&out](const Expr& c, bool wrap) {
    if (wrap) out += '(';
    format_into(c, out);
    if (wrap) out += ')';
  };
  switch (e.op()) {
    case Op::Constant:
      out += format_number(e.value());
      return;
    case Op::Variable:
      out += "xyz"[static_cast<int>(e.axis())];
      return;
    case Op::Sin:
    case Op::Cos:
      out += e.op() == Op::Sin ? "sin(" : "cos(";
      format_into(e.lhs(), out);
      out += ')';
      return;
    case Op::Neg:
      out += '-';
      child(e.lhs(), precedence(e.lhs().op()) < precedence(Op::Neg));
      return;
    default:
      break;
  }
  const int p = precedence(e.op());
  // Left-associative: the left operand may share the level, the right may not.
  child(e.lhs(), precedence(e.lhs().op()) < p);
  switch (e.op()) {
    case Op::Add:
      out += " + ";
      break;
    case Op::Sub:
      out += " - ";
      break;
    case Op::Mul:
      out += '*';
      break;
    default:
      out += '/';
      break;
  }
  child(e.rhs(), precedence(e.rhs().op()) <= p && e.rhs().op() != Op::Neg);
}

}  // namespace detail

/// Render in the expression grammar; parse(format(e)) == e.
inline std::string format(const Expr& e) {
  std::string out;
  detail::format_into(e, out);
  return out;
}

}  // namespace plesio
