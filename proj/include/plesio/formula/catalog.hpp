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
#include <sstream>
#include <string_view>

#include "plesio/formula/catalog_data.hpp"
#include "plesio/formula/field.hpp"

namespace plesio {

struct KnownRange {
  double low = 0.0;
  double high = 0.0;
  bool rounded = false;

  // Published precision: rounded entries carry three decimals.
  double tolerance() const { return rounded ? 5e-3 : 1e-6; }
  bool matches(double lo, double hi) const {
    return std::abs(lo - low) <= tolerance() && std::abs(hi - high) <= tolerance();
  }
};

struct CatalogEntry {
  std::string name;
  std::vector<std::string> aliases;
  std::string formula;  // as transcribed, before any transform
  Expr expr;            // after transform; evaluate with `period`
  double period = kTwoPi;
  std::optional<KnownRange> known_range;
  std::optional<KnownRange> known_range_alt;
  int source_table = 6;
  std::vector<std::string> flags;

  bool has_flag(std::string_view f) const {
    return std::find(flags.begin(), flags.end(), f) != flags.end();
  }
  PeriodicField field() const { return PeriodicField(expr, period); }
};

class NotFound : public Error {
 public:
  NotFound(std::string query, std::vector<std::string> suggestions)
      : Error(describe(query, suggestions)),
        query_(std::move(query)),
        suggestions_(std::move(suggestions)) {}

  const std::string& query() const { return query_; }
  const std::vector<std::string>& suggestions() const { return suggestions_; }

 private:
  static std::string describe(const std::string& q, const std::vector<std::string>& s) {
    std::string msg = "no catalog surface named '" + q + "'";
    if (!s.empty()) {
      msg += "; did you mean ";
      for (std::size_t i = 0; i < s.size(); ++i) msg += (i ? ", '" : "'") + s[i] + "'";
      msg += "?";
    }
    return msg;
  }

  std::string query_;
  std::vector<std::string> suggestions_;
};

namespace detail {

inline std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

inline std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t pos = s.find(sep, start);
    std::string piece = trim(s.substr(start, pos == std::string_view::npos ? s.npos : pos - start));
    if (!piece.empty()) out.push_back(std::move(piece));
    if (pos == std::string_view::npos) return out;
    start = pos + 1;
  }
}

// ASCII case folding; non-ASCII bytes compare exactly.
inline std::string fold(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

inline std::size_t edit_distance(std::string_view a, std::string_view b) {
  std::vector<std::size_t> row(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) row[j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    std::size_t diag = row[0];
    row[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const std::size_t up = row[j];
      row[j] = std::min({row[j] + 1, row[j - 1] + 1, diag + (a[i - 1] == b[j - 1] ? 0 : 1)});
      diag = up;
    }
  }
  return row[b.size()];
}

inline KnownRange parse_range(const std::string& text, const std::string& record) {
  std::istringstream in(text);
  KnownRange r;
  std::string kind;
  if (!(in >> r.low >> r.high >> kind) || (kind != "exact" && kind != "rounded"))
    throw Error("catalog record '" + record + "': malformed range '" + text + "'");
  r.rounded = kind == "rounded";
  return r;
}

inline Expr apply_transform(const Expr& e, const std::string& transform, double& period,
                            const std::string& record) {
  if (transform.empty()) return e;
  if (transform == "half-frequency") {
    period = 2.0 * kTwoPi;
    const Expr half = Expr::constant(0.5);
    return e.substitute({Expr::x() * half, Expr::y() * half, Expr::z() * half});
  }
  if (transform == "quarter-pi-shift") {
    const Expr shift = Expr::constant(std::numbers::pi / 4.0);
    return e.substitute({Expr::x() + shift, Expr::y() + shift, Expr::z() + shift});
  }
  throw Error("catalog record '" + record + "': unknown transform '" + transform + "'");
}

inline std::vector<CatalogEntry> parse_catalog(std::string_view text) {
  std::vector<CatalogEntry> out;
  std::string transform;
  auto finish = [&] {
    if (out.empty()) return;
    CatalogEntry& e = out.back();
    if (e.formula.empty()) throw Error("catalog record '" + e.name + "' has no formula");
    e.expr = apply_transform(parse(e.formula), transform, e.period, e.name);
    transform.clear();
  };
  for (const std::string& raw : split(text, '\n')) {
    if (raw.front() == '@') {
      finish();
      out.emplace_back().name = trim(std::string_view(raw).substr(1));
      continue;
    }
    const std::size_t colon = raw.find(':');
    if (colon == std::string::npos || out.empty())
      throw Error("catalog: malformed line '" + raw + "'");
    const std::string key = trim(std::string_view(raw).substr(0, colon));
    const std::string value = trim(std::string_view(raw).substr(colon + 1));
    CatalogEntry& e = out.back();
    if (key == "aliases") {
      e.aliases = split(value, '|');
    } else if (key == "table") {
      e.source_table = std::stoi(value);
    } else if (key == "formula") {
      e.formula = value;
    } else if (key == "range") {
      e.known_range = parse_range(value, e.name);
    } else if (key == "range_alt") {
      e.known_range_alt = parse_range(value, e.name);
    } else if (key == "flags") {
      e.flags = split(value, ',');
    } else if (key == "transform") {
      transform = value;
    } else {
      throw Error("catalog record '" + e.name + "': unknown key '" + key + "'");
    }
  }
  finish();
  return out;
}

}  // namespace detail

/// The built-in surface catalog, parsed once.
class Catalog {
 public:
  static const Catalog& builtin() {
    static const Catalog c(detail::parse_catalog(detail::kCatalogText));
    return c;
  }

  explicit Catalog(std::vector<CatalogEntry> entries) : entries_(std::move(entries)) {
    for (std::size_t i = 0; i < entries_.size(); ++i)
      for (std::size_t j = 0; j < i; ++j)
        if (detail::fold(entries_[i].name) == detail::fold(entries_[j].name))
          throw Error("duplicate catalog name '" + entries_[i].name + "'");
  }

  const std::vector<CatalogEntry>& entries() const { return entries_; }

  /// Case-insensitive lookup; names take precedence over aliases.
  const CatalogEntry& lookup(std::string_view query) const {
    const std::string q = detail::fold(detail::trim(query));
    for (const auto& e : entries_)
      if (detail::fold(e.name) == q) return e;
    for (const auto& e : entries_)
      for (const auto& a : e.aliases)
        if (detail::fold(a) == q) return e;
    throw NotFound(std::string(query), suggest(q));
  }

  const CatalogEntry* find(std::string_view query) const {
    try {
      return &lookup(query);
    } catch (const NotFound&) {
      return nullptr;
    }
  }

  /// The tool-library surfaces analyzed as one batch: every table-6 entry
  /// except the verbatim transcription kept only for reference.
  std::vector<const CatalogEntry*> table6_batch() const {
    std::vector<const CatalogEntry*> out;
    for (const auto& e : entries_)
      if (e.source_table == 6 && !e.has_flag("as-printed")) out.push_back(&e);
    return out;
  }

 private:
  std::vector<std::string> suggest(const std::string& q) const {
    std::vector<std::pair<std::size_t, std::string>> scored;
    for (const auto& e : entries_) {
      std::size_t best = detail::edit_distance(q, detail::fold(e.name));
      for (const auto& a : e.aliases) best = std::min(best, detail::edit_distance(q, detail::fold(a)));
      scored.emplace_back(best, e.name);
    }
    std::stable_sort(scored.begin(), scored.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<std::string> out;
    for (std::size_t i = 0; i < scored.size() && i < 3; ++i) out.push_back(scored[i].second);
    return out;
  }

  std::vector<CatalogEntry> entries_;
};

inline const CatalogEntry& catalog_lookup(std::string_view name_or_alias) {
  return Catalog::builtin().lookup(name_or_alias);
}

}  // namespace plesio
