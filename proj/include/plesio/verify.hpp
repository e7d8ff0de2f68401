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

#include <functional>
#include <set>

#include "plesio/report_json.hpp"

namespace plesio {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  std::vector<std::string> notes;  // one per sub-check, failures first-class
};

namespace verify {

/// Sub-check accumulator: a criterion passes when every check does.
class Checks {
 public:
  void check(bool ok, std::string what) {
    pass_ = pass_ && ok;
    notes_.push_back((ok ? "ok   " : "FAIL ") + std::move(what));
  }
  void info(std::string what) { notes_.push_back("     " + std::move(what)); }
  CriterionResult result(int id, std::string title) && {
    return {id, std::move(title), pass_, std::move(notes_)};
  }

 private:
  bool pass_ = true;
  std::vector<std::string> notes_;
};

inline std::string fmt(double v, int digits = 10) {
  std::ostringstream os;
  os << std::setprecision(digits) << v;
  return os.str();
}

inline bool near(double a, double b, double tol) { return std::abs(a - b) <= tol; }

/// Matches two value-class lists against expected (value, count) pairs.
inline bool classes_are(const std::vector<ValueClass>& got, const std::vector<ValueClass>& want, double tol) {
  if (got.size() != want.size()) return false;
  for (std::size_t i = 0; i < got.size(); ++i)
    if (got[i].count != want[i].count || !near(got[i].value, want[i].value, tol)) return false;
  return true;
}

inline std::string describe(const std::vector<ValueClass>& cs) {
  std::string s = "{";
  for (std::size_t i = 0; i < cs.size(); ++i)
    s += (i ? ", " : "") + fmt(cs[i].value, 8) + " x" + std::to_string(cs[i].count);
  return s + "}";
}

// Minima and maxima numerators over 8 of the period, in the published row
// order, with the orientation color of each minimum (1 is the reference).
inline constexpr std::array<std::array<int, 3>, 12> kFksMaxima{{{0, 2, 7},
                                                                {0, 6, 5},
                                                                {1, 4, 2},
                                                                {2, 1, 4},
                                                                {2, 7, 0},
                                                                {3, 4, 6},
                                                                {4, 2, 1},
                                                                {4, 6, 3},
                                                                {5, 0, 6},
                                                                {6, 3, 4},
                                                                {6, 5, 0},
                                                                {7, 0, 2}}};
inline constexpr std::array<int, 12> kFksColor{6, 5, 1, 3, 4, 2, 5, 6, 1, 4, 3, 2};

// Josehedron vertices relative to its site, integer frame, reference
// orientation (the cell around minimum row 3).
inline const std::vector<Vec3>& josehedron_vertices() {
  static const std::vector<Vec3> v{{-7, -4, 2}, {-7, 4, -2}, {7, -2, -4}, {7, 2, 4},  {-1, -2, -8}, {-1, 2, 8},
                                   {1, -8, 2},  {1, 8, -2},  {-3, -6, -3}, {-3, 6, 3}, {3, -3, 6},   {3, 3, -6}};
  return v;
}

// Per-color world-axis rotation sequences, applied left to right. The
// published angles do not say which turning sense is positive.
inline std::vector<SignedPermutation> color_rotations(bool clockwise_positive) {
  auto seq = [&](std::initializer_list<std::pair<int, int>> steps) {
    SignedPermutation g;
    for (auto [axis, q] : steps) g = axis_rotation(axis, clockwise_positive ? -q : q).compose(g);
    return g;
  };
  return {seq({}),
          seq({{2, 2}}),
          seq({{1, -1}, {0, 1}, {2, 2}}),
          seq({{1, -1}, {0, 1}}),
          seq({{0, 1}, {1, 1}}),
          seq({{0, 1}, {1, -1}})};
}

/// Sites from snapped fractions at the given period (exact in any frame).
inline PeriodicPointSet sites_at(const ExtremalSet& ext, bool minima, bool maxima, double period) {
  std::vector<Vec3> pts;
  auto add = [&](const std::vector<ExtremalPoint>& v) {
    for (const auto& p : v) pts.push_back(p.snapped ? p.site(period) : p.position * (period / ext.field.period()));
  };
  if (minima) add(ext.minima);
  if (maxima) add(ext.maxima);
  return PeriodicPointSet(std::move(pts), period);
}

/// Index in `set` of each table row (numerators over 8), -1 when missing.
inline std::vector<int> match_rows(const PeriodicPointSet& set, std::span<const std::array<int, 3>> rows) {
  std::vector<int> out;
  for (const auto& r : rows) {
    const Vec3 want = Vec3(r[0], r[1], r[2]) * (set.period / 8.0);
    int found = -1;
    for (std::size_t i = 0; i < set.size(); ++i)
      if (periodic_distance(set.points[i], want, set.period) < 1e-9 * set.period) found = static_cast<int>(i);
    out.push_back(found);
  }
  return out;
}

/// Shared, lazily computed inputs.
class Context {
 public:
  explicit Context(int threads = 0) : threads_(threads) {}

  int threads() const { return threads_; }

  const CatalogEntry& fks() const { return catalog_lookup("FKS"); }

  const ExtremalSet& fks_extrema() {
    if (!fks_ext_) {
      ExtremaConfig cfg;
      cfg.threads = threads_;
      fks_ext_ = search_extrema(fks().field(), cfg);
    }
    return *fks_ext_;
  }

  const std::vector<ConvexCell>& fks_cells(bool minima, double period) {
    auto key = std::pair{minima, period};
    auto it = fks_cells_.find(key);
    if (it == fks_cells_.end()) {
      ClipConfig clip;
      clip.threads = threads_;
      it = fks_cells_.emplace(key, voronoi_cells(sites_at(fks_extrema(), minima, !minima, period), clip)).first;
    }
    return it->second;
  }

  const std::vector<SurfaceReport>& catalog_reports() {
    if (!reports_) {
      PipelineConfig cfg;
      cfg.threads = threads_;
      reports_ = run_catalog(Catalog::builtin().table6_batch(), cfg);
    }
    return *reports_;
  }

  const SurfaceReport& report(std::string_view name) {
    const std::string want = catalog_lookup(name).name;
    for (const auto& r : catalog_reports())
      if (r.surface == want) return r;
    throw Error("no report for " + want);
  }

  /// Index of the cell at minimum row `row` (1-based, published order).
  int fks_min_row(int row, double period) {
    const auto idx = match_rows(sites_at(fks_extrema(), true, false, period), fks_minima_numerators());
    return idx.at(static_cast<std::size_t>(row - 1));
  }

 private:
  int threads_;
  std::optional<ExtremalSet> fks_ext_;
  std::map<std::pair<bool, double>, std::vector<ConvexCell>> fks_cells_;
  std::optional<std::vector<SurfaceReport>> reports_;
};

inline constexpr double kSqrt2 = std::numbers::sqrt2;

inline CriterionResult fks_extrema(Context& ctx) {
  Checks c;
  const ExtremalSet& e = ctx.fks_extrema();
  c.check(e.minima.size() == 12 && e.maxima.size() == 12,
          "counts " + std::to_string(e.minima.size()) + " minima, " + std::to_string(e.maxima.size()) + " maxima");
  const PeriodicPointSet mins = sites_at(e, true, false, 8.0), maxs = sites_at(e, false, true, 8.0);
  auto all_snapped = [](const std::vector<ExtremalPoint>& v) {
    return std::all_of(v.begin(), v.end(), [](const auto& p) { return p.snapped.has_value(); });
  };
  const auto min_rows = match_rows(mins, fks_minima_numerators());
  const auto max_rows = match_rows(maxs, kFksMaxima);
  auto bijective = [](std::vector<int> idx, std::size_t n) {
    std::sort(idx.begin(), idx.end());
    return n == idx.size() && idx.front() >= 0 && std::adjacent_find(idx.begin(), idx.end()) == idx.end();
  };
  c.check(all_snapped(e.minima) && bijective(min_rows, mins.size()), "snapped minima equal the published numerators / 8");
  c.check(all_snapped(e.maxima) && bijective(max_rows, maxs.size()), "snapped maxima equal the published numerators / 8");
  double worst = 0.0;
  for (const auto& p : e.minima) worst = std::max(worst, std::abs(e.field(p.site(e.field.period())) + kSqrt2));
  for (const auto& p : e.maxima) worst = std::max(worst, std::abs(e.field(p.site(e.field.period())) - kSqrt2));
  c.check(worst <= 1e-9, "extreme values +-sqrt(2), worst deviation " + fmt(worst, 3));
  return std::move(c).result(1, "FKS extrema");
}

inline const ConvexCell& josehedron_int(Context& ctx) {
  return ctx.fks_cells(true, 24.0).at(static_cast<std::size_t>(ctx.fks_min_row(3, 24.0)));
}

inline CriterionResult combinatorics(Context& ctx) {
  Checks c;
  const ConvexCell& cell = josehedron_int(ctx);
  const auto fp = fingerprint(cell);
  c.check(fp.faces == 12 && fp.vertices == 12 && fp.edges == 22,
          "F=" + std::to_string(fp.faces) + " V=" + std::to_string(fp.vertices) + " E=" + std::to_string(fp.edges));
  c.check(cell.euler() == 2, "Euler characteristic " + std::to_string(cell.euler()));
  c.check(fp.face_degrees == std::map<int, int>{{3, 4}, {4, 8}}, "4 triangles and 8 quadrilaterals");
  const FaceClasses fc = oriented_face_classes(cell);
  std::vector<int> quad_classes;
  for (std::size_t k = 0; k < fc.classes.size(); ++k)
    if (cell.faces[fc.classes[k].front()].cycle.size() == 4) quad_classes.push_back(static_cast<int>(k));
  const bool split = quad_classes.size() == 2 && fc.classes[quad_classes[0]].size() == 4 &&
                     fc.classes[quad_classes[1]].size() == 4 && fc.mirror_of[quad_classes[0]] == quad_classes[1];
  c.check(split, "quads split 4/4 into two classes that are mirror images of each other");
  bool handed = split;
  if (split)
    for (int k : quad_classes) {
      const int want = face_handedness(cell, cell.faces[fc.classes[k].front()]);
      for (int f : fc.classes[k]) handed = handed && face_handedness(cell, cell.faces[f]) == want && want != 0;
    }
  c.check(handed, "each quad class has one handedness");
  return std::move(c).result(2, "Josehedron combinatorics");
}

inline CriterionResult integer_coordinates(Context& ctx) {
  Checks c;
  const ConvexCell& cell = josehedron_int(ctx);
  const auto got = cell.centered_vertices();
  c.check(detail::vertices_match(josehedron_vertices(), got, SignedPermutation::identity(), 1e-6),
          "vertices around minimum row 3 equal the published integer table");
  std::map<long, int> sq;
  for (const Vec3& v : got) ++sq[std::lround(v.squaredNorm())];
  double drift = 0.0;
  for (const Vec3& v : got) drift = std::max(drift, std::abs(v.squaredNorm() - std::round(v.squaredNorm())));
  c.check(sq == std::map<long, int>{{54, 4}, {69, 8}} && drift < 1e-6, "squared radii {54 x4, 69 x8}");
  return std::move(c).result(3, "Integer vertex coordinates");
}

inline CriterionResult metric_table(Context& ctx) {
  Checks c;
  const ConvexCell& cell = josehedron_int(ctx);
  const auto fp = fingerprint(cell);
  const std::vector<ValueClass> edges{{std::sqrt(45.0), 12}, {std::sqrt(80.0), 6}, {std::sqrt(108.0), 4}};
  c.check(classes_are(fp.edge_lengths, edges, 1e-6), "edge classes " + describe(fp.edge_lengths));
  c.check(classes_are(fp.edge_lengths, {{6.708, 12}, {8.944, 6}, {10.392, 4}}, 1e-3),
          "edge classes agree with the printed three-decimal lengths");
  c.check(classes_are(fp.face_distances, {{std::sqrt(31.5), 8}, {std::sqrt(45.0), 4}}, 1e-6),
          "face distances " + describe(fp.face_distances));
  bool inside = true;
  for (const auto& p : face_closest_points(cell)) inside = inside && p.inside_face;
  c.check(inside, "every face's closest point lies inside the face");
  double worst = 0.0;
  int quads = 0;
  for (const Face& f : cell.faces) {
    if (f.cycle.size() != 4) continue;
    ++quads;
    for (double a : angles_at_longest_edge(cell, f)) worst = std::max(worst, std::abs(a - 75.037));
  }
  c.check(quads == 8 && worst <= 0.01, "angles at the longest quad edge 75.037 deg, worst deviation " + fmt(worst, 3));
  return std::move(c).result(4, "Metric table");
}

inline CriterionResult roundness_check(Context& ctx) {
  Checks c;
  const double jose = roundness(josehedron_int(ctx));
  c.check(near(jose, 0.4798, 5e-4), "Josehedron " + fmt(jose, 6));
  auto first_cell_roundness = [&](std::string_view surface, std::string_view want) -> std::optional<double> {
    const RunReport* r = ctx.report(surface).run(Which::Min);
    if (!r || !r->ok() || r->classes.size() != 1 || r->classes[0].known != want) return std::nullopt;
    return r->classes[0].fingerprint.roundness;
  };
  const auto cube = first_cell_roundness("Schwarz P", "cube");
  c.check(cube && near(*cube, 0.3676, 1e-4), "cube from Schwarz P minima " + (cube ? fmt(*cube, 6) : "missing"));
  const auto rd = first_cell_roundness("FRP", "rhombic dodecahedron");
  c.check(rd && near(*rd, 0.4775, 5e-4), "rhombic dodecahedron from FRP minima " + (rd ? fmt(*rd, 6) : "missing"));
  c.check(cube && rd && jose > *rd && *rd > *cube, "Josehedron > rhombic dodecahedron > cube");
  return std::move(c).result(5, "Roundness");
}

inline CriterionResult radii(Context& ctx) {
  Checks c;
  const PeriodicPointSet num = sites_at(ctx.fks_extrema(), true, false, 8.0);
  const auto& cells = ctx.fks_cells(true, 8.0);
  const DeloneRadii r = delone_radii(num, std::span<const ConvexCell>(cells));
  c.check(near(r.packing_r, std::sqrt(3.5), 1e-9), "packing radius " + fmt(r.packing_r, 15));
  c.check(near(*r.covering_R, std::sqrt(69.0) / 3.0, 1e-9), "covering radius " + fmt(*r.covering_R, 15));
  const double rmax = circumradius(josehedron_int(ctx));
  c.check(near(3.0 * *r.covering_R, rmax, 1e-9) && near(rmax, std::sqrt(69.0), 1e-9),
          "3 x covering radius equals the integer-frame circumradius sqrt(69)");
  return std::move(c).result(6, "Packing and covering radii");
}

inline CriterionResult chirality(Context& ctx) {
  Checks c;
  const ConvexCell& mn = ctx.fks_cells(true, 24.0).front();
  const ConvexCell& mx = ctx.fks_cells(false, 24.0).front();
  const auto proper = congruent(mn, mx, false);
  c.check(!proper.congruent, "no rotation maps the min-cell onto the max-cell" +
                                 (proper.congruent ? ", but " + proper.rotation->to_string() + " does" : std::string()));
  for (const auto& g : octahedral_group())
    if (!g.proper() && detail::vertices_match(mn.centered_vertices(), mn.centered_vertices(), g, 1e-6 * std::cbrt(cell_volume(mn))))
      c.info("the min-cell is its own image under the improper element " + g.to_string());
  const double eps = 1e-6 * std::cbrt(cell_volume(mn));
  const auto& group = octahedral_group();
  const bool improper = std::any_of(group.begin(), group.end(), [&](const SignedPermutation& g) {
    return !g.proper() && detail::vertices_match(mn.centered_vertices(), mx.centered_vertices(), g, eps);
  });
  c.check(improper, "an improper element maps the min-cell onto the max-cell");
  const auto& maxima = ctx.fks_cells(false, 24.0);
  for (int axis = 0; axis < 3; ++axis) {
    SignedPermutation mirror;
    mirror.sign[axis] = -1;
    const ConvexCell reflected = transform_cell(mn, mirror, mn.site);
    const bool hit = std::any_of(maxima.begin(), maxima.end(),
                                 [&](const ConvexCell& m) { return congruent(reflected, m, false).congruent; });
    c.check(hit, std::string("min-cell mirrored in the plane normal to ") + "xyz"[axis] + " joins the max-cell class");
  }
  return std::move(c).result(7, "Chirality");
}

inline CriterionResult unit_cell(Context& ctx) {
  Checks c;
  const PeriodicPointSet set = sites_at(ctx.fks_extrema(), true, false, 8.0);
  const int ref = ctx.fks_min_row(3, 8.0);
  if (ref < 0) {
    c.check(false, "reference minimum (row 3) not found");
    return std::move(c).result(8, "Unit cell");
  }
  const UnitCellTiling t = classify_tiling(set, ctx.fks_cells(true, 8.0), ref);
  c.check(t.cells.size() == 12, std::to_string(t.cells.size()) + " cells per period");
  bool pairs = t.orientation_classes.size() == 6;
  for (const auto& oc : t.orientation_classes) pairs = pairs && oc.members.size() == 2 && oc.rotation && oc.proper;
  c.check(pairs, std::to_string(t.orientation_classes.size()) + " proper orientation classes, 2 members each");
  c.check(near(t.volume_ratio, 1.0, 1e-9), "volume sum / period^3 = " + fmt(t.volume_ratio, 15));
  const PartitionReport pr = check_partition(t.cells, set, 100000, 7);
  c.check(pr.gaps == 0 && pr.overlaps == 0,
          "partition at 1e5 samples: " + std::to_string(pr.gaps) + " gaps, " + std::to_string(pr.overlaps) + " overlaps");

  const auto rows = match_rows(set, fks_minima_numerators());
  std::vector<int> class_of(t.cells.size(), -1);
  for (std::size_t k = 0; k < t.orientation_classes.size(); ++k)
    for (int m : t.orientation_classes[k].members) class_of[m] = static_cast<int>(k);
  bool same = std::find(rows.begin(), rows.end(), -1) == rows.end();
  for (std::size_t a = 0; a < 12 && same; ++a)
    for (std::size_t b = 0; b < 12; ++b)
      same = same && ((kFksColor[a] == kFksColor[b]) == (class_of[rows[a]] == class_of[rows[b]]));
  c.check(same, "orientation classes coincide with the six published colors");

  // A recovered rotation is right as long as it produces the same vertices;
  // the published sequences are checked the same way.
  bool red = false;
  std::array<int, 2> literal{0, 0};
  if (same) {
    const auto rot = recover_rotations(t);
    const ConvexCell& reference = t.cells[ref];
    const double eps = 1e-6 * std::cbrt(cell_volume(reference));
    for (int color = 1; color <= 6; ++color) {
      const std::size_t row = static_cast<std::size_t>(std::find(kFksColor.begin(), kFksColor.end(), color) - kFksColor.begin());
      const ConvexCell& target = t.cells[rows[row]];
      for (int sense = 0; sense < 2; ++sense) {
        const ConvexCell by_seq = transform_cell(reference, color_rotations(sense == 1)[color - 1], target.site);
        if (detail::vertices_match(by_seq.centered_vertices(), target.centered_vertices(),
                                   SignedPermutation::identity(), eps))
          ++literal[sense];
      }
      if (color == 2) {
        const auto& g = rot[static_cast<std::size_t>(rows[row])].second;
        const ConvexCell by_rec = transform_cell(reference, g, target.site);
        red = detail::vertices_match(by_rec.centered_vertices(),
                                     transform_cell(reference, axis_rotation(2, 2), target.site).centered_vertices(),
                                     SignedPermutation::identity(), eps);
      }
    }
  }
  c.check(red, "recovered rotation of the second color acts as 180 deg about Z");
  c.info("published rotation sequences reproducing their color: " + std::to_string(literal[0]) +
         "/6 counterclockwise-positive, " + std::to_string(literal[1]) + "/6 clockwise-positive");
  return std::move(c).result(8, "Unit cell");
}

inline CriterionResult cairo(Context& ctx) {
  Checks c;
  const PeriodicPointSet set = sites_at(ctx.fks_extrema(), true, false, 8.0);
  for (Axis3 ax : {Axis3::X, Axis3::Y, Axis3::Z}) {
    const CairoCheck cc = cairo_projection(set, ax);
    const std::string name(1, "XYZ"[static_cast<int>(ax)]);
    const bool ok = cc.projected.size() == 12 && cc.degree_histogram == std::map<int, int>{{3, 8}, {4, 4}} &&
                    classes_are(cc.edge_lengths, {{2.0, 4}, {std::sqrt(5.0), 16}}, 1e-9) && cc.faces == 8 &&
                    cc.is_cairo();
    c.check(ok, "axis " + name + ": " + std::to_string(cc.projected.size()) + " nodes, edges " +
                    describe(cc.edge_lengths) + ", " + std::to_string(cc.faces) + " faces");
    if (cc.edge_lengths.size() == 2) {
      const double ratio = cc.edge_lengths[1].value / cc.edge_lengths[0].value;
      c.check(near(ratio, std::sqrt(1.0 + 0.25), 1e-9) && near(ratio, 1.118, 5e-4),
              "axis " + name + ": long/short edge ratio " + fmt(ratio, 12));
    }
  }
  return std::move(c).result(9, "Cairo projection");
}

inline CriterionResult fks_both(Context& ctx) {
  Checks c;
  ClipConfig clip;
  clip.threads = ctx.threads();
  const auto cells = voronoi_cells(sites_at(ctx.fks_extrema(), true, true, 24.0), clip);
  bool all = !cells.empty();
  for (const auto& cell : cells) all = all && cell.num_faces() == 14 && cell.num_vertices() == 16;
  c.check(all, std::to_string(cells.size()) + " cells, all F=14 V=16");
  const auto classes = shape_classes(cells);
  if (!cells.empty()) c.info(std::string("the cell is ") + (is_chiral(cells.front()) ? "chiral" : "achiral"));
  c.check(classes.size() == 1 && classes[0].families.size() == 2,
          std::to_string(classes.size()) + " shape class(es), " +
              (classes.empty() ? "0" : std::to_string(classes[0].families.size())) + " proper families");
  return std::move(c).result(10, "FKS minima and maxima together");
}

inline CriterionResult catalog(Context& ctx) {
  Checks c;
  auto run = [&](std::string_view s, Which w) { return ctx.report(s).run(w); };
  auto single = [&](std::string_view s, Which w, std::string_view shape) {
    const RunReport* r = run(s, w);
    const bool ok = r && r->ok() && r->classes.size() == 1 && r->classes[0].known == shape;
    c.check(ok, std::string(s) + " " + which_name(w) + ": " + std::string(shape));
  };
  for (auto s : {"Schwarz P", "Neovius"}) {
    single(s, Which::Min, "cube");
    single(s, Which::Max, "cube");
    single(s, Which::Both, "truncated octahedron");
  }
  single("IWP", Which::Both, "cube");
  {
    const RunReport* r = run("IWP", Which::Min);
    c.check(r && r->ok() && r->classes.size() == 1 && r->classes[0].fingerprint.faces == 12 &&
                r->classes[0].fingerprint.face_degrees == std::map<int, int>{{3, 8}, {4, 4}},
            "IWP min: 12 faces, 4 squares and 8 triangles");
  }
  single("Diamond", Which::Both, "truncated octahedron");
  {
    const RunReport* r = run("Gyroid", Which::Min);
    c.check(r && r->ok() && r->face_counts() == std::vector<int>{17}, "Gyroid min: 17 faces");
  }
  single("FRP", Which::Min, "rhombic dodecahedron");
  auto class_count = [&](std::string_view s, Which w, std::size_t n) {
    const RunReport* r = run(s, w);
    c.check(r && r->ok() && r->classes.size() == n,
            std::string(s) + " " + which_name(w) + ": " + std::to_string(n) + " classes, found " +
                (r ? std::to_string(r->classes.size()) : "none"));
  };
  class_count("Octo", Which::Both, 3);
  {
    const RunReport* r = run("Double Diamond", Which::Min);
    const bool deg = r && !r->errors.empty() && r->errors.front().find("degenerate") != std::string::npos;
    c.check(deg, "Double Diamond min: degenerate locus");
  }
  class_count("KP", Which::Both, 2);
  for (const auto& rep : ctx.catalog_reports()) {
    const auto m = rep.range_matches();
    if (!m) continue;
    const auto [lo, hi] = rep.range();
    c.check(*m, rep.surface + " range [" + fmt(lo, 6) + ", " + fmt(hi, 6) + "]");
  }
  {
    const RunReport* r = run("Gyroid", Which::Both);
    c.check(r && r->ok() && r->face_counts() == std::vector<int>{17} && r->classes[0].parallel_hexagon_pairs > 0,
            "Gyroid both: 17 faces with two parallel regular hexagons");
  }
  auto has_faces = [&](std::string_view s, Which w, std::vector<int> want, bool exact) {
    const RunReport* r = run(s, w);
    std::vector<int> got = r && r->ok() ? r->face_counts() : std::vector<int>{};
    bool ok = exact ? got == want
                    : std::all_of(want.begin(), want.end(),
                                  [&](int f) { return std::find(got.begin(), got.end(), f) != got.end(); });
    std::string list;
    for (int f : got) list += (list.empty() ? "" : ",") + std::to_string(f);
    c.check(ok, std::string(s) + " " + which_name(w) + ": face counts {" + list + "}");
  };
  has_faces("Double Gyroid", Which::Both, {20}, false);
  has_faces("FRP", Which::Both, {20}, true);
  has_faces("Lidinoid", Which::Max, {14}, true);
  has_faces("Split P", Which::Max, {17}, true);
  has_faces("Split P", Which::Both, {17, 20}, true);
  return std::move(c).result(11, "Catalog reproduction");
}

inline CriterionResult properties(Context& ctx) {
  Checks c;
  // Gradients against central differences.
  {
    double worst = 0.0;
    std::string where;
    for (const CatalogEntry& e : Catalog::builtin().entries()) {
      const PeriodicField f = e.field();
      UnitRng rng(11);
      const double h = 1e-5 * f.period();
      for (int s = 0; s < 16; ++s) {
        const Vec3 p = Vec3(rng(), rng(), rng()) * f.period();
        const Vec3 g = f.gradient(p);
        for (int k = 0; k < 3; ++k) {
          Vec3 d = Vec3::Zero();
          d[k] = h;
          const double fd = (f(p + d) - f(p - d)) / (2 * h);
          const double rel = std::abs(fd - g[k]) / std::max(1.0, g.norm());
          if (rel > worst) worst = rel, where = e.name;
        }
      }
    }
    c.check(worst < 1e-6, "gradient vs central difference, all entries, worst " + fmt(worst, 3) + " (" + where + ")");
  }
  // Partition of every non-degenerate minima run.
  for (const auto& rep : ctx.catalog_reports()) {
    const RunReport* r = rep.run(Which::Min);
    if (!r || !r->ok()) {
      c.info(rep.surface + " min: skipped, " + (r && !r->errors.empty() ? r->errors.front() : "no run"));
      continue;
    }
    const PartitionReport pr = check_partition(r->tiling->cells, r->tiling->set, 20000, 3);
    c.check(pr.ok(), rep.surface + " min partition: " + std::to_string(pr.gaps) + " gaps, " +
                         std::to_string(pr.overlaps) + " overlaps, volume ratio " + fmt(pr.volume_ratio, 12));
  }
  // Fingerprint invariance.
  {
    const ConvexCell& cell = josehedron_int(ctx);
    const auto ref = fingerprint(cell);
    UnitRng rng(5);
    bool same = true;
    for (int k = 0; k < 20; ++k) {
      const auto& g = octahedral_group()[static_cast<std::size_t>(rng() * 48) % 48];
      const Vec3 shift = Vec3(std::floor(rng() * 5) - 2, std::floor(rng() * 5) - 2, std::floor(rng() * 5) - 2) * 24.0;
      same = same && same_fingerprint(fingerprint(transform_cell(cell, g, cell.site + shift)), ref, 1e-9);
    }
    c.check(same, "Josehedron fingerprint unchanged under 20 random group elements and translations");
  }
  // Thread-count determinism of the full report.
  {
    auto dump = [&](int threads) {
      PipelineConfig cfg;
      cfg.extrema.threads = threads;
      cfg.clip.threads = threads;
      return to_json(run_surface(ctx.fks(), kAllWhich, cfg)).dump();
    };
    c.check(dump(1) == dump(4), "FKS report JSON identical with 1 and 4 threads");
  }
  return std::move(c).result(12, "Property suites");
}

}  // namespace verify

/// Every acceptance criterion in order.
inline std::vector<CriterionResult> run_acceptance(int threads = 0) {
  verify::Context ctx(threads);
  std::vector<std::function<CriterionResult(verify::Context&)>> all{
      verify::fks_extrema, verify::combinatorics, verify::integer_coordinates, verify::metric_table,
      verify::roundness_check, verify::radii, verify::chirality, verify::unit_cell,
      verify::cairo, verify::fks_both, verify::catalog, verify::properties};
  std::vector<CriterionResult> out;
  for (std::size_t i = 0; i < all.size(); ++i) {
    try {
      out.push_back(all[i](ctx));
    } catch (const std::exception& e) {
      out.push_back({static_cast<int>(i + 1), "criterion " + std::to_string(i + 1), false,
                     {std::string("FAIL exception: ") + e.what()}});
    }
  }
  return out;
}

}  // namespace plesio
