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
#include <sstream>

#include "plesio/formula/blocks.hpp"
#include "plesio/formula/catalog.hpp"
#include "plesio/formula/parse.hpp"
#include "plesio/lattice.hpp"
#include "plesio/tiling.hpp"

namespace plesio {

enum class Which { Min, Max, Both };

inline const char* which_name(Which w) {
  switch (w) {
    case Which::Min: return "min";
    case Which::Max: return "max";
    case Which::Both: return "both";
  }
  return "?";
}

inline Which parse_which(std::string_view s) {
  if (s == "min") return Which::Min;
  if (s == "max") return Which::Max;
  if (s == "both") return Which::Both;
  throw Error("expected min, max or both, got '" + std::string(s) + "'");
}

inline constexpr std::array<Which, 3> kAllWhich{Which::Min, Which::Max, Which::Both};

struct PipelineConfig {
  ExtremaConfig extrema;
  ClipConfig clip;
  double period = 0.0;        // 0: the surface's own period
  int partition_samples = 0;  // 0: skip sampling the partition
  std::uint64_t partition_seed = 1;
  int threads = 0;  // for batches; each job then runs single-threaded
};

/// One congruence class of cells within a run.
struct ClassReport {
  ShapeFingerprint fingerprint;
  std::vector<int> members;
  int families = 1;       // proper-congruence families; 2 means mirror pairs
  bool chiral = false;    // the shape differs from its own mirror image
  std::string known;      // name of a matching classical shape, if any
  int parallel_hexagon_pairs = 0;
};

struct RunReport {
  Which which = Which::Min;
  int sites = 0;
  std::vector<ClassReport> classes;
  int classes_at_1e4 = 0;  // class counts at looser tolerances
  int classes_at_1e3 = 0;
  int orientation_classes = 0;
  double volume_ratio = 0.0;
  std::optional<PartitionReport> partition;
  std::vector<std::string> errors;
  std::optional<UnitCellTiling> tiling;

  bool ok() const { return errors.empty() && tiling.has_value(); }
  bool mirror_pairs() const {
    return std::any_of(classes.begin(), classes.end(), [](const auto& c) { return c.families > 1; });
  }
  bool chiral_shapes() const {
    return std::any_of(classes.begin(), classes.end(), [](const auto& c) { return c.chiral; });
  }
  /// Distinct face counts over the classes, ascending.
  std::vector<int> face_counts() const {
    std::vector<int> f;
    for (const auto& c : classes) f.push_back(c.fingerprint.faces);
    std::sort(f.begin(), f.end());
    f.erase(std::unique(f.begin(), f.end()), f.end());
    return f;
  }
};

struct SurfaceReport {
  std::string surface;
  std::string formula;
  double period = kTwoPi;
  std::optional<ExtremalSet> extrema;
  std::optional<KnownRange> known_range;
  std::optional<KnownRange> known_range_alt;
  std::vector<RunReport> runs;
  std::vector<std::string> errors;  // failures before any run

  std::pair<double, double> range() const {
    return extrema ? extrema->range() : std::pair{0.0, 0.0};
  }
  /// Whether the found range matches either printed range at its precision.
  std::optional<bool> range_matches() const {
    if (!extrema || !known_range) return std::nullopt;
    const auto [lo, hi] = range();
    return known_range->matches(lo, hi) || (known_range_alt && known_range_alt->matches(lo, hi));
  }
  const RunReport* run(Which w) const {
    for (const auto& r : runs)
      if (r.which == w) return &r;
    return nullptr;
  }
};

/// A fingerprint of a shape the screen should recognize.
struct KnownShape {
  std::string name;
  ShapeFingerprint fingerprint;
};

namespace detail {

inline ShapeFingerprint lattice_fingerprint(std::vector<Vec3> pts) {
  const PeriodicPointSet set(std::move(pts), 1.0);
  return fingerprint(voronoi_cell(0, set));
}

// Regular hexagonal prism of largest volume in the unit sphere: edge
// sqrt(2/3), height 2/sqrt(3).
inline ShapeFingerprint hexagonal_prism_fingerprint() {
  const double across = std::sqrt(2.0);
  std::vector<Neighbor> nb;
  for (int k = 0; k < 6; ++k) {
    const double a = k * std::numbers::pi / 3.0;
    nb.push_back({Vec3(std::cos(a), std::sin(a), 0.0) * across, -1, Shift3::Zero()});
  }
  nb.push_back({Vec3(0, 0, 2.0 / std::sqrt(3.0)), -1, Shift3::Zero()});
  nb.push_back({Vec3(0, 0, -2.0 / std::sqrt(3.0)), -1, Shift3::Zero()});
  return fingerprint(clip_cell(Vec3::Zero(), nb, 4.0, 1e-9));
}

}  // namespace detail

/// Minima of the Fischer-Koch S field as numerators over 8 of the period.
inline const std::array<std::array<int, 3>, 12>& fks_minima_numerators() {
  static constexpr std::array<std::array<int, 3>, 12> pts{{{0, 2, 3},
                                                           {0, 6, 1},
                                                           {1, 0, 6},
                                                           {2, 3, 0},
                                                           {2, 5, 4},
                                                           {3, 0, 2},
                                                           {4, 2, 5},
                                                           {4, 6, 7},
                                                           {5, 4, 2},
                                                           {6, 1, 0},
                                                           {6, 7, 4},
                                                           {7, 4, 6}}};
  return pts;
}

inline PeriodicPointSet fks_minima_set(double period = 8.0) {
  std::vector<Vec3> pts;
  for (const auto& p : fks_minima_numerators()) pts.push_back(Vec3(p[0], p[1], p[2]) * (period / 8.0));
  return PeriodicPointSet(std::move(pts), period);
}

/// Classical space fillers, each built as the Voronoi cell of a lattice
/// arrangement so the fingerprints carry the same numerical character as
/// pipeline output.
inline const std::vector<KnownShape>& known_shapes() {
  static const std::vector<KnownShape> shapes = [] {
    using detail::lattice_fingerprint;
    std::vector<KnownShape> s;
    s.push_back({"cube", lattice_fingerprint({Vec3(0, 0, 0)})});
    s.push_back({"truncated octahedron", lattice_fingerprint({Vec3(0, 0, 0), Vec3(0.5, 0.5, 0.5)})});
    s.push_back({"rhombic dodecahedron",
                 lattice_fingerprint({Vec3(0, 0, 0), Vec3(0.5, 0.5, 0), Vec3(0.5, 0, 0.5), Vec3(0, 0.5, 0.5)})});
    s.push_back({"flat octahedron",
                 lattice_fingerprint({Vec3(0.5, 0.5, 0), Vec3(0.5, 0, 0.5), Vec3(0, 0.5, 0.5)})});
    s.push_back({"hexagonal prism", detail::hexagonal_prism_fingerprint()});
    std::vector<Vec3> diamond;
    for (const Vec3& f : {Vec3(0, 0, 0), Vec3(0.5, 0.5, 0), Vec3(0.5, 0, 0.5), Vec3(0, 0.5, 0.5)}) {
      diamond.push_back(f);
      diamond.push_back(f + Vec3(0.25, 0.25, 0.25));
    }
    s.push_back({"triakis truncated tetrahedron", lattice_fingerprint(diamond)});
    s.push_back({"Josehedron", fingerprint(voronoi_cell(0, fks_minima_set()))});
    return s;
  }();
  return shapes;
}

struct NoveltyVerdict {
  ShapeFingerprint fingerprint;
  std::string nearest;  // empty when the known list is empty
  double distance = std::numeric_limits<double>::infinity();
  bool known = false;
};

inline constexpr double kNoveltyThreshold = 1e-3;

/// Weighted L1 over face, vertex and edge counts, the face-degree histogram,
/// relative normalized volume and roundness. Any combinatorial difference
/// costs at least 1, so only matching combinatorics can fall under the
/// threshold.
inline double fingerprint_distance(const ShapeFingerprint& a, const ShapeFingerprint& b) {
  double d = std::abs(a.faces - b.faces) + std::abs(a.vertices - b.vertices) + std::abs(a.edges - b.edges);
  std::map<int, int> diff = a.face_degrees;
  for (const auto& [deg, n] : b.face_degrees) diff[deg] -= n;
  for (const auto& [deg, n] : diff) d += std::abs(n);
  const double va = a.normalized_volume(), vb = b.normalized_volume();
  d += std::abs(va - vb) / std::max({va, vb, 1e-300});
  d += std::abs(a.roundness - b.roundness);
  return d;
}

inline NoveltyVerdict novelty_verdict(const ShapeFingerprint& fp, const std::vector<KnownShape>& known) {
  NoveltyVerdict v;
  v.fingerprint = fp;
  for (const KnownShape& k : known) {
    const double d = fingerprint_distance(fp, k.fingerprint);
    if (d < v.distance) v.distance = d, v.nearest = k.name;
  }
  v.known = v.distance < kNoveltyThreshold;
  return v;
}

/// One verdict per class of every successful run, in run then class order.
inline std::vector<NoveltyVerdict> novelty_screen(const SurfaceReport& report,
                                                  const std::vector<KnownShape>& known = known_shapes()) {
  std::vector<NoveltyVerdict> out;
  for (const RunReport& r : report.runs)
    for (const ClassReport& c : r.classes) out.push_back(novelty_verdict(c.fingerprint, known));
  return out;
}

/// Whether the cell differs from its own mirror image under rotations.
inline bool is_chiral(const ConvexCell& c) {
  const SignedPermutation mirror{{0, 1, 2}, {-1, 1, 1}};
  return !congruent(c, transform_cell(c, mirror, c.site), false).congruent;
}

namespace detail {

inline RunReport run_sites(const ExtremalSet& ext, Which which, const PipelineConfig& cfg) {
  RunReport r;
  r.which = which;
  const bool want_min = which != Which::Max, want_max = which != Which::Min;
  for (Kind k : {Kind::Minimum, Kind::Maximum}) {
    if ((k == Kind::Minimum ? want_min : want_max) && ext.degenerate(k))
      r.errors.push_back(DegenerateLocus(*ext.degenerate(k)).what());
  }
  if (!r.errors.empty()) return r;
  const PeriodicPointSet set = extremal_sites(ext, want_min, want_max);
  r.sites = static_cast<int>(set.size());
  try {
    ClipConfig clip = cfg.clip;
    std::vector<ConvexCell> cells = voronoi_cells(set, clip);
    const auto classes = shape_classes(cells, 1e-6);
    r.classes_at_1e4 = static_cast<int>(shape_classes(cells, 1e-4).size());
    r.classes_at_1e3 = static_cast<int>(shape_classes(cells, 1e-3).size());
    for (const ShapeClass& sc : classes) {
      ClassReport c;
      const ConvexCell& rep = cells[sc.members.front()];
      c.fingerprint = fingerprint(rep);
      c.members = sc.members;
      c.families = static_cast<int>(sc.families.size());
      c.chiral = is_chiral(rep);
      const auto v = novelty_verdict(c.fingerprint, known_shapes());
      if (v.known) c.known = v.nearest;
      c.parallel_hexagon_pairs = static_cast<int>(parallel_regular_hexagons(rep).size());
      r.classes.push_back(std::move(c));
    }
    if (cfg.partition_samples > 0)
      r.partition = check_partition(cells, set, cfg.partition_samples, cfg.partition_seed, clip.eps_rel);
    r.tiling = classify_tiling(set, std::move(cells), 0);
    r.orientation_classes = static_cast<int>(r.tiling->orientation_classes.size());
    r.volume_ratio = r.tiling->volume_ratio;
  } catch (const Error& e) {
    r.errors.push_back(e.what());
    r.tiling.reset();
  }
  return r;
}

}  // namespace detail

/// The whole pipeline on one field. Degenerate loci and construction
/// failures become report errors, never exceptions.
inline SurfaceReport run_surface(const std::string& name, const PeriodicField& field,
                                 std::span<const Which> which, const PipelineConfig& cfg = {}) {
  SurfaceReport rep;
  rep.surface = name;
  rep.formula = format(field.expr());
  const PeriodicField f = cfg.period > 0.0 ? field.rescaled(cfg.period) : field;
  rep.period = f.period();
  try {
    rep.extrema = search_extrema(f, cfg.extrema);
  } catch (const Error& e) {
    rep.errors.push_back(e.what());
    return rep;
  }
  for (Which w : which) rep.runs.push_back(detail::run_sites(*rep.extrema, w, cfg));
  return rep;
}

inline SurfaceReport run_surface(const CatalogEntry& entry, std::span<const Which> which,
                                 const PipelineConfig& cfg = {}) {
  SurfaceReport rep = run_surface(entry.name, entry.field(), which, cfg);
  rep.known_range = entry.known_range;
  rep.known_range_alt = entry.known_range_alt;
  return rep;
}

/// A catalog name or alias, else a formula over x, y, z with period 2*pi.
inline SurfaceReport run_surface(const std::string& name_or_formula, std::span<const Which> which,
                                 const PipelineConfig& cfg = {}) {
  if (const CatalogEntry* e = Catalog::builtin().find(name_or_formula)) return run_surface(*e, which, cfg);
  return run_surface(name_or_formula, PeriodicField(parse(name_or_formula)), which, cfg);
}

/// Reports for the entries in order; entries run in parallel, each single
/// threaded, and never abort the batch.
inline std::vector<SurfaceReport> run_catalog(const std::vector<const CatalogEntry*>& entries,
                                              const PipelineConfig& cfg = {}) {
  PipelineConfig inner = cfg;
  inner.extrema.threads = 1;
  inner.clip.threads = 1;
  return detail::parallel_map(entries.size(), cfg.threads, [&](std::size_t i) {
    try {
      return run_surface(*entries[i], kAllWhich, inner);
    } catch (const std::exception& e) {
      SurfaceReport r;
      r.surface = entries[i]->name;
      r.formula = entries[i]->formula;
      r.errors.push_back(e.what());
      return r;
    }
  });
}

/// Values lo, lo+step, ... up to hi inclusive, each rounded to 1e-12 so
/// accumulated steps do not leak into formulas.
inline std::vector<double> parse_grid(std::string_view text) {
  std::vector<double> parts;
  std::size_t start = 0;
  for (int k = 0; k < 3; ++k) {
    const std::size_t end = k < 2 ? text.find(':', start) : text.size();
    if (end == std::string_view::npos) throw Error("grid must look like lo:hi:step");
    const std::string_view tok = text.substr(start, end - start);
    double v = 0.0;
    const auto res = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (res.ec != std::errc() || res.ptr != tok.data() + tok.size())
      throw Error("bad number '" + std::string(tok) + "' in grid");
    parts.push_back(v);
    start = end + 1;
  }
  const double lo = parts[0], hi = parts[1], step = parts[2];
  if (!(step > 0.0) || hi < lo) throw Error("grid needs lo <= hi and step > 0");
  std::vector<double> out;
  const long n = std::lround(std::floor((hi - lo) / step + 1e-9));
  for (long i = 0; i <= n; ++i) out.push_back(std::round((lo + i * step) * 1e12) / 1e12);
  return out;
}

struct SearchConfig {
  std::string blocks;  // labels, e.g. "AEFG"
  std::vector<double> coefficients;
  std::vector<double> constants{0.0};
  int budget = 100;  // candidates evaluated at most
  PipelineConfig pipeline;
};

struct SearchCandidate {
  std::string formula;
  SurfaceReport report;
  std::vector<NoveltyVerdict> verdicts;
  bool novel() const {
    return std::any_of(verdicts.begin(), verdicts.end(), [](const auto& v) { return !v.known; });
  }
};

struct SearchResult {
  int evaluated = 0;
  int skipped_degenerate = 0;
  std::vector<SearchCandidate> candidates;  // non-degenerate, enumeration order

  std::vector<const SearchCandidate*> hits() const {
    std::vector<const SearchCandidate*> out;
    for (const auto& c : candidates)
      if (c.novel()) out.push_back(&c);
    return out;
  }
};

/// Linear combinations of blocks over the coefficient grid (a zero
/// coefficient drops the block) plus each constant, enumerated with the last
/// block varying fastest and the constant fastest of all.
inline SearchResult search_blocks(const SearchConfig& cfg) {
  SearchResult out;
  if (cfg.blocks.empty() || cfg.coefficients.empty() || cfg.constants.empty()) return out;
  std::vector<std::vector<BlockTerm>> terms;
  std::vector<double> consts;
  std::vector<std::size_t> idx(cfg.blocks.size(), 0);
  while (static_cast<int>(terms.size()) < cfg.budget) {
    std::vector<BlockTerm> t;
    for (std::size_t b = 0; b < idx.size(); ++b)
      if (cfg.coefficients[idx[b]] != 0.0) t.push_back({cfg.coefficients[idx[b]], cfg.blocks[b]});
    if (!t.empty())
      for (double c : cfg.constants) {
        if (static_cast<int>(terms.size()) >= cfg.budget) break;
        terms.push_back(t);
        consts.push_back(c);
      }
    std::size_t b = idx.size();
    while (b > 0 && ++idx[b - 1] == cfg.coefficients.size()) idx[--b] = 0;
    if (b == 0) break;
  }

  PipelineConfig inner = cfg.pipeline;
  inner.extrema.threads = 1;
  inner.clip.threads = 1;
  auto reports = detail::parallel_map(terms.size(), cfg.pipeline.threads, [&](std::size_t i) {
    const PeriodicField f = compose_blocks(terms[i], consts[i]);
    return run_surface(format(f.expr()), f, kAllWhich, inner);
  });
  out.evaluated = static_cast<int>(reports.size());
  for (SurfaceReport& r : reports) {
    const bool degenerate =
        !r.extrema || std::any_of(r.runs.begin(), r.runs.end(), [](const auto& run) { return !run.ok(); });
    if (degenerate) {
      ++out.skipped_degenerate;
      continue;
    }
    SearchCandidate c;
    c.formula = r.formula;
    c.verdicts = novelty_screen(r);
    for (RunReport& run : r.runs) run.tiling.reset();  // keep results small
    c.report = std::move(r);
    out.candidates.push_back(std::move(c));
  }
  return out;
}

/// One line in the style of the overview table: name, per-run shapes, range.
inline std::string summary_line(const SurfaceReport& rep) {
  std::ostringstream os;
  os << rep.surface << "\t";
  if (!rep.errors.empty()) return os.str() + "error: " + rep.errors.front();
  for (const RunReport& r : rep.runs) {
    os << which_name(r.which) << ": ";
    if (!r.errors.empty()) {
      os << "n/a (" << r.errors.front() << ")";
    } else {
      for (std::size_t i = 0; i < r.classes.size(); ++i) {
        const auto& c = r.classes[i];
        if (i) os << " + ";
        os << (c.known.empty() ? std::to_string(c.fingerprint.faces) + "F/" +
                                     std::to_string(c.fingerprint.vertices) + "V"
                               : c.known)
           << " x" << c.members.size();
        if (c.families > 1) os << " (mirror pairs)";
      }
    }
    os << "\t";
  }
  const auto [lo, hi] = rep.range();
  os << std::setprecision(6) << "[" << lo << ", " << hi << "]";
  if (auto m = rep.range_matches(); m && !*m) os << " (differs from printed range)";
  return os.str();
}

/// Face and edge metrics of one cell, one row per face then per edge class.
inline std::string anatomy_table(const ConvexCell& c) {
  std::ostringstream os;
  os << std::setprecision(6) << std::fixed;
  os << "face  degree  closest point (site-relative)          distance\n";
  const auto pts = face_closest_points(c);
  for (std::size_t i = 0; i < c.faces.size(); ++i) {
    const Vec3 p = pts[i].point - c.site;
    os << std::setw(4) << i << "  " << std::setw(6) << c.faces[i].cycle.size() << "  (" << std::setw(10)
       << p.x() << ", " << std::setw(10) << p.y() << ", " << std::setw(10) << p.z() << ")  "
       << pts[i].distance << "\n";
  }
  const ShapeFingerprint fp = fingerprint(c);
  os << "edge length  count\n";
  for (const auto& e : fp.edge_lengths) os << std::setw(11) << e.value << "  " << e.count << "\n";
  os << "vertex radius  count\n";
  for (const auto& v : fp.vertex_radii) os << std::setw(13) << v.value << "  " << v.count << "\n";
  os << "volume " << fp.volume << "  roundness " << fp.roundness << "\n";
  return os.str();
}

}  // namespace plesio
