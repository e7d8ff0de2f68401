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

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "plesio.hpp"
#include "plesio/verify.hpp"

namespace {

using namespace plesio;

void write_json(const std::string& path, const Json& j) {
  if (path == "-") {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error("cannot open " + path + " for writing");
  out << j.dump(2) << "\n";
}

std::vector<Which> runs_for(const std::string& which) {
  if (which == "all") return {kAllWhich.begin(), kAllWhich.end()};
  return {parse_which(which)};
}

// Human-readable text moves to stderr when JSON goes to stdout.
std::ostream& text_stream(const std::string& json_path) { return json_path == "-" ? std::cerr : std::cout; }

void print_runs(std::ostream& os, const SurfaceReport& rep) {
  os << summary_line(rep) << "\n";
  for (const RunReport& r : rep.runs) {
    os << "\n[" << which_name(r.which) << "] " << r.sites << " sites";
    if (!r.ok()) {
      os << ": " << (r.errors.empty() ? "no cells" : r.errors.front()) << "\n";
      continue;
    }
    os << ", " << r.classes.size() << " class(es), " << r.orientation_classes
              << " orientation class(es), volume ratio " << std::setprecision(12) << r.volume_ratio << "\n";
    for (const ClassReport& c : r.classes) {
      const auto& fp = c.fingerprint;
      os << "  F=" << fp.faces << " V=" << fp.vertices << " E=" << fp.edges << " x" << c.members.size()
                << std::setprecision(6) << "  roundness " << fp.roundness
                << (c.known.empty() ? "" : "  (" + c.known + ")") << (c.chiral ? "  chiral" : "")
                << (c.families > 1 ? "  mirror pairs" : "") << "\n";
    }
    const ConvexCell& first = r.tiling->cells[static_cast<std::size_t>(r.classes.front().members.front())];
    os << anatomy_table(first);
  }
}

int analyze(const std::string& surface, const std::string& formula, const std::string& which,
            const PipelineConfig& cfg, const std::string& json_path, const std::string& obj_path) {
  const auto runs = runs_for(which);
  SurfaceReport rep = formula.empty() ? run_surface(surface, runs, cfg)
                                      : run_surface(formula, PeriodicField(parse(formula)), runs, cfg);
  print_runs(text_stream(json_path), rep);
  if (!json_path.empty()) write_json(json_path, to_json(rep));
  if (!obj_path.empty()) {
    std::vector<ConvexCell> cells;
    for (const RunReport& r : rep.runs)
      if (r.tiling) cells.insert(cells.end(), r.tiling->cells.begin(), r.tiling->cells.end());
    write_obj_file(obj_path, cells);
  }
  return rep.errors.empty() ? 0 : 1;
}

int catalog(const std::vector<std::string>& filters, bool list_only, const PipelineConfig& cfg,
            const std::string& json_path) {
  const Catalog& cat = Catalog::builtin();
  std::vector<const CatalogEntry*> entries;
  if (filters.empty()) {
    entries = cat.table6_batch();
  } else {
    for (const auto& f : filters) entries.push_back(&cat.lookup(f));
  }
  if (list_only) {
    for (const auto& e : cat.entries()) {
      std::cout << e.name << "\t" << e.formula;
      for (const auto& f : e.flags) std::cout << "\t[" << f << "]";
      std::cout << "\n";
    }
    return 0;
  }
  const auto reports = run_catalog(entries, cfg);
  Json all = Json::array();
  for (const auto& r : reports) {
    text_stream(json_path) << summary_line(r) << "\n";
    all.push_back(to_json(r));
  }
  if (!json_path.empty()) write_json(json_path, all);
  return 0;
}

int tiling(const std::string& surface, const std::string& which, int nx, int ny, int nz,
           const PipelineConfig& cfg, const std::string& obj_path) {
  const std::array<Which, 1> w{parse_which(which)};
  const SurfaceReport rep = run_surface(surface, w, cfg);
  const RunReport& r = rep.runs.front();
  if (!r.ok()) {
    std::cerr << rep.surface << " " << which << ": " << (r.errors.empty() ? "no cells" : r.errors.front()) << "\n";
    return 1;
  }
  const auto cells = tile_assembly(*r.tiling, nx, ny, nz);
  std::cout << rep.surface << " " << which << ": " << r.tiling->cells.size() << " cells per period, "
            << r.orientation_classes << " orientation class(es); writing " << cells.size() << " cells\n";
  for (const auto& oc : r.tiling->orientation_classes) {
    std::cout << "  members";
    for (int m : oc.members) std::cout << " " << m;
    std::cout << "  " << (oc.rotation ? oc.rotation->to_string() : std::string("not congruent"))
              << (oc.rotation && !oc.proper ? " (improper)" : "") << "\n";
  }
  if (!obj_path.empty()) write_obj_file(obj_path, cells);
  return 0;
}

int search(const std::string& blocks, const std::string& coeff, const std::string& consts, int budget,
           const PipelineConfig& cfg, const std::string& json_path) {
  SearchConfig sc;
  for (char ch : blocks)
    if (ch != ',' && ch != ' ') sc.blocks.push_back(ch);
  for (char ch : sc.blocks) block(ch);  // validates labels
  sc.coefficients = parse_grid(coeff);
  sc.constants = parse_grid(consts);
  sc.budget = budget;
  sc.pipeline = cfg;
  const SearchResult res = search_blocks(sc);
  std::ostream& os = text_stream(json_path);
  os << res.evaluated << " evaluated, " << res.skipped_degenerate << " skipped as degenerate, "
            << res.hits().size() << " with candidate-novel cells\n";
  Json hits = Json::array();
  for (const SearchCandidate* c : res.hits()) {
    os << c->formula << "\n";
    Json j{{"formula", c->formula}, {"verdicts", Json::array()}};
    for (const auto& v : c->verdicts) j["verdicts"].push_back(to_json(v));
    hits.push_back(std::move(j));
  }
  if (!json_path.empty()) write_json(json_path, hits);
  return 0;
}

int verify_josehedron(int threads, bool verbose) {
  int failed = 0;
  for (const auto& r : run_acceptance(threads)) {
    std::cout << (r.pass ? "PASS" : "FAIL") << " criterion " << r.id << ": " << r.title << "\n";
    if (verbose || !r.pass)
      for (const auto& n : r.notes) std::cout << "    " << n << "\n";
    failed += !r.pass;
  }
  return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Space-filling polyhedra from the extrema of triply periodic fields"};
  app.require_subcommand(1);

  PipelineConfig cfg;
  int threads = 0;
  app.add_option("--threads", threads, "Worker threads (0: all cores)");

  auto* an = app.add_subcommand("analyze", "Run the pipeline on one surface");
  std::string surface, formula, which = "all", json_path, obj_path;
  double period = 0.0;
  std::uint64_t seed = 1;
  int samples = 0;
  an->add_option("surface", surface, "Catalog name or alias");
  an->add_option("--formula", formula, "Field formula over x, y, z (period 2*pi)");
  an->add_option("--which", which, "min, max, both or all")->check(CLI::IsMember({"min", "max", "both", "all"}));
  an->add_option("--period", period, "Rescale the field to this period");
  an->add_option("--seed", seed, "Multistart seed");
  an->add_option("--partition-samples", samples, "Sample the partition with this many points");
  an->add_option("--json", json_path, "Write the JSON report here ('-' for stdout)");
  an->add_option("--obj", obj_path, "Write the cells as OBJ");

  auto* cat = app.add_subcommand("catalog", "Run every overview surface, or the named ones");
  std::vector<std::string> filters;
  bool list_only = false;
  cat->add_option("--filter", filters, "Surface names or aliases");
  cat->add_flag("--list", list_only, "List the catalog without running it");
  cat->add_option("--json", json_path, "Write all reports here");

  auto* til = app.add_subcommand("tiling", "Export translated copies of a unit cell");
  std::string til_which = "min";
  int nx = 1, ny = 1, nz = 1;
  til->add_option("surface", surface, "Catalog name or alias")->required();
  til->add_option("--which", til_which, "min, max or both")->check(CLI::IsMember({"min", "max", "both"}));
  til->add_option("--nx", nx, "Copies along x");
  til->add_option("--ny", ny, "Copies along y");
  til->add_option("--nz", nz, "Copies along z");
  til->add_option("--obj", obj_path, "Write the assembly as OBJ");

  auto* se = app.add_subcommand("search", "Screen linear combinations of blocks");
  std::string blocks = "A,E,F,G", coeff = "-1:1:0.1", consts = "-0.5:0.5:0.1";
  int budget = 100;
  se->add_option("--blocks", blocks, "Block labels, comma separated");
  se->add_option("--coeff-grid", coeff, "Coefficient grid lo:hi:step");
  se->add_option("--const-grid", consts, "Constant grid lo:hi:step");
  se->add_option("--budget", budget, "Maximum number of candidates");
  se->add_option("--json", json_path, "Write the candidate-novel hits here");

  auto* ver = app.add_subcommand("verify-josehedron", "Run the acceptance criteria");
  bool verbose = false;
  ver->add_flag("-v,--verbose", verbose, "Print every sub-check");

  CLI11_PARSE(app, argc, argv);

  cfg.threads = threads;
  cfg.extrema.threads = threads;
  cfg.clip.threads = threads;
  cfg.extrema.seed = seed;
  cfg.period = period;
  cfg.partition_samples = samples;

  try {
    if (*an) {
      if (surface.empty() == formula.empty()) throw Error("give either a surface name or --formula");
      return analyze(surface, formula, which, cfg, json_path, obj_path);
    }
    if (*cat) return catalog(filters, list_only, cfg, json_path);
    if (*til) return tiling(surface, til_which, nx, ny, nz, cfg, obj_path);
    if (*se) return search(blocks, coeff, consts, budget, cfg, json_path);
    if (*ver) return verify_josehedron(threads, verbose);
  } catch (const SyntaxError& e) {
    std::cerr << "syntax error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
