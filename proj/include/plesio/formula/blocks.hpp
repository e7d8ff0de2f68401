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

#include "plesio/formula/field.hpp"

namespace plesio {

/// A recurring cyclic sub-expression of the surface formulas.
struct Block {
  char label;
  Expr expr;
  std::string description;
};

/// The nine recurring blocks, labelled A, C, D, E, F, G, H, I, L.
inline const std::vector<Block>& blocks() {
  static const std::vector<Block> all = [] {
    struct Row {
      char label;
      const char* formula;
      const char* description;
    };
    static constexpr Row rows[] = {
        {'A', "sin(x)*cos(y) + sin(y)*cos(z) + sin(z)*cos(x)", "Gyroid"},
        {'C', "cos(x)*cos(y)*cos(z)", "Triple cos"},
        {'D', "sin(x)*sin(y)*sin(z)", "Triple sin"},
        {'E', "cos(x) + cos(y) + cos(z)", "P-sum"},
        {'F', "cos(x)*cos(y) + cos(y)*cos(z) + cos(z)*cos(x)", "Pairwise cos"},
        {'G', "cos(2*x) + cos(2*y) + cos(2*z)", "Double-frequency cos sum"},
        {'H', "sin(2*x)*cos(y)*sin(z) + sin(2*y)*cos(z)*sin(x) + sin(2*z)*cos(x)*sin(y)",
         "Lidinoid triple"},
        {'I', "cos(2*x)*cos(2*y) + cos(2*y)*cos(2*z) + cos(2*z)*cos(2*x)",
         "Double-frequency pairwise cos"},
        {'L', "sin(2*x)*sin(y) + sin(2*y)*sin(z) + sin(2*z)*sin(x)", "Mixed pairwise sin"},
    };
    std::vector<Block> out;
    for (const Row& r : rows) out.push_back({r.label, parse(r.formula), r.description});
    return out;
  }();
  return all;
}

inline const Block& block(char label) {
  for (const auto& b : blocks())
    if (b.label == label) return b;
  throw Error(std::string("no block labelled '") + label + "'");
}

struct BlockTerm {
  double coefficient;
  char label;
};

/// Sum of coefficient * block plus a constant, built left to right in the
/// shape the parser gives "0.3*(E) + 0.3*(F) - 0.4*(G) + 0.2": negative
/// coefficients after the first become subtractions, unit coefficients and a
/// zero constant are omitted.
inline PeriodicField compose_blocks(const std::vector<BlockTerm>& terms, double constant) {
  if (terms.empty()) throw Error("compose_blocks needs at least one term");
  auto scaled = [](double c, const Expr& b) {
    return c == 1.0 ? b : Expr::constant(c) * b;
  };
  const BlockTerm& head = terms.front();
  Expr acc = head.coefficient == -1.0 ? -block(head.label).expr
                                      : scaled(head.coefficient, block(head.label).expr);
  for (std::size_t i = 1; i < terms.size(); ++i) {
    const Expr t = scaled(std::abs(terms[i].coefficient), block(terms[i].label).expr);
    acc = terms[i].coefficient < 0.0 ? acc - t : acc + t;
  }
  if (constant > 0.0) acc = acc + Expr::constant(constant);
  if (constant < 0.0) acc = acc - Expr::constant(-constant);
  return PeriodicField(acc);
}

enum class Arity { Pairwise, Triple, Sum };

/// Cyclic symmetric sum of factors cos(N*v - phase).
///
/// A phase of 0 renders as cos(N*v) and a phase of pi/2 as sin(N*v), so the
/// standard blocks come out structurally identical. Pairwise takes phases for
/// the (first, second) factor of each product, triple one per factor, sum a
/// single phase; a single phase is broadcast to every factor.
inline Expr superblock(std::vector<double> phases, int frequency, Arity arity) {
  if (frequency < 1) throw Error("superblock frequency must be >= 1");
  const std::size_t width = arity == Arity::Pairwise ? 2 : arity == Arity::Triple ? 3 : 1;
  if (phases.size() == 1) phases.assign(width, phases.front());
  if (phases.size() != width) throw Error("superblock phase count does not match arity");
  for (double p : phases)
    if (p < 0.0 || p > std::numbers::pi / 2.0 + 1e-15)
      throw Error("superblock phases must lie in [0, pi/2]");

  const std::array<Expr, 3> var{Expr::x(), Expr::y(), Expr::z()};
  auto factor = [&](int axis, double phase) {
    const Expr arg = frequency == 1 ? var[axis] : Expr::constant(frequency) * var[axis];
    if (phase == 0.0) return Expr::cos(arg);
    if (std::abs(phase - std::numbers::pi / 2.0) < 1e-15) return Expr::sin(arg);
    return Expr::cos(arg - Expr::constant(phase));
  };
  auto term = [&](int shift) {
    Expr t = factor(shift % 3, phases[0]);
    for (std::size_t k = 1; k < width; ++k) t = t * factor((shift + k) % 3, phases[k]);
    return t;
  };

  // Equal triple phases make the three cyclic products the same function.
  const bool single = arity == Arity::Triple && phases[0] == phases[1] && phases[1] == phases[2];
  Expr acc = term(0);
  if (!single)
    for (int s = 1; s < 3; ++s) acc = acc + term(s);
  return acc;
}

}  // namespace plesio
