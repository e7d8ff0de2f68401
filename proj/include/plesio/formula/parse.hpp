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

#include <cctype>
#include <set>
#include <string_view>

#include "plesio/formula/expr.hpp"

namespace plesio {

/// Malformed input. `offset` is the byte position of the offending token.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t offset, std::set<std::string> expected, std::string found)
      : Error(describe(offset, expected, found)),
        offset_(offset),
        expected_(std::move(expected)),
        found_(std::move(found)) {}

  std::size_t offset() const { return offset_; }
  const std::set<std::string>& expected() const { return expected_; }
  const std::string& found() const { return found_; }

 private:
  static std::string describe(std::size_t offset, const std::set<std::string>& expected,
                              const std::string& found) {
    std::string msg = "syntax error at offset " + std::to_string(offset) + ": expected ";
    bool first = true;
    for (const auto& e : expected) {
      msg += (first ? "" : " | ") + e;
      first = false;
    }
    return msg + ", found " + found;
  }

  std::size_t offset_;
  std::set<std::string> expected_;
  std::string found_;
};

class UnknownIdentifier : public Error {
 public:
  UnknownIdentifier(std::size_t offset, std::string name)
      : Error("unknown identifier '" + name + "' at offset " + std::to_string(offset)),
        offset_(offset),
        name_(std::move(name)) {}

  std::size_t offset() const { return offset_; }
  const std::string& name() const { return name_; }

 private:
  std::size_t offset_;
  std::string name_;
};

namespace detail {

// Recursive-descent parser for
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := NUMBER | 'pi' | 'x'|'y'|'z' | ('sin'|'cos') '(' expr ')'
//           | '(' expr ')' | '-' factor
class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Expr parse() {
    Expr e = expr();
    skip_space();
    if (pos_ != text_.size()) fail({"'+'", "'-'", "'*'", "'/'", "end of input"});
    return e;
  }

 private:
  Expr expr() {
    Expr acc = term();
    for (;;) {
      skip_space();
      if (accept('+')) {
        acc = acc + term();
      } else if (accept('-')) {
        acc = acc - term();
      } else {
        return acc;
      }
    }
  }

  Expr term() {
    Expr acc = factor();
    for (;;) {
      skip_space();
      if (accept('*')) {
        acc = acc * factor();
      } else if (accept('/')) {
        acc = acc / factor();
      } else {
        return acc;
      }
    }
  }

  Expr factor() {
    skip_space();
    if (pos_ >= text_.size()) fail(factor_starts());
    const char c = text_[pos_];
    if (c == '-') {
      ++pos_;
      return -factor();
    }
    if (c == '(') {
      ++pos_;
      Expr inner = expr();
      expect(')');
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return identifier();
    fail(factor_starts());
  }

  Expr number() {
    const std::size_t start = pos_;
    auto digits = [this] {
      std::size_t n = 0;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        ++pos_;
        ++n;
      }
      return n;
    };
    std::size_t n = digits();
    if (pos_ < text_.size() && text_[pos_] == '.') {
      ++pos_;
      n += digits();
    }
    if (n == 0) {
      pos_ = start;
      fail({"digit"});
    }
    if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
      const std::size_t mark = pos_++;
      if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) ++pos_;
      if (digits() == 0) {
        pos_ = mark + 1;
        fail({"exponent digits"});
      }
    }
    double v = 0.0;
    auto res = std::from_chars(text_.data() + start, text_.data() + pos_, v);
    if (res.ec != std::errc() || !std::isfinite(v)) {
      pos_ = start;
      fail({"finite number"});
    }
    return Expr::constant(v);
  }

  Expr identifier() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    const std::string_view name = text_.substr(start, pos_ - start);
    if (name == "x") return Expr::x();
    if (name == "y") return Expr::y();
    if (name == "z") return Expr::z();
    if (name == "pi") return Expr::constant(std::numbers::pi);
    if (name == "sin" || name == "cos") {
      skip_space();
      expect('(');
      Expr arg = expr();
      expect(')');
      return name == "sin" ? Expr::sin(arg) : Expr::cos(arg);
    }
    throw UnknownIdentifier(start, std::string(name));
  }

  void expect(char c) {
    skip_space();
    if (!accept(c)) fail({std::string("'") + c + "'"});
  }

  bool accept(char c) {
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  static std::set<std::string> factor_starts() {
    return {"number", "'pi'", "'x'", "'y'", "'z'", "'sin'", "'cos'", "'('", "'-'"};
  }

  [[noreturn]] void fail(std::set<std::string> expected) const {
    std::string found = pos_ < text_.size() ? "'" + std::string(1, text_[pos_]) + "'"
                                            : std::string("end of input");
    throw SyntaxError(pos_, std::move(expected), std::move(found));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parse an expression string into an AST.
///
/// Multiplication must be explicit (`cos(2*x)`, not `cos 2x`). Throws
/// SyntaxError or UnknownIdentifier.
inline Expr parse(std::string_view text) { return detail::Parser(text).parse(); }

}  // namespace plesio
