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

#include "json.hpp"
#include "plesio/pipeline.hpp"

namespace plesio {

// Insertion-ordered so the same report always serializes to the same bytes.
using Json = nlohmann::ordered_json;

inline Json to_json(const std::vector<ValueClass>& classes) {
  Json a = Json::array();
  for (const auto& c : classes) a.push_back({c.value, c.count});
  return a;
}

inline Json to_json(const ShapeFingerprint& fp) {
  Json degrees = Json::object();
  for (const auto& [d, n] : fp.face_degrees) degrees[std::to_string(d)] = n;
  return Json{{"F", fp.faces},
              {"V", fp.vertices},
              {"E", fp.edges},
              {"face_degrees", degrees},
              {"edge_lengths", to_json(fp.edge_lengths)},
              {"face_distances", to_json(fp.face_distances)},
              {"vertex_radii", to_json(fp.vertex_radii)},
              {"volume", fp.volume},
              {"roundness", fp.roundness}};
}

inline Json to_json(const ExtremalPoint& p, double period) {
  const Vec3 s = p.site(period);
  return Json::array({s.x(), s.y(), s.z(), p.value});
}

inline Json to_json(const RunReport& r) {
  Json classes = Json::array();
  Json roundness = Json::array();
  for (const ClassReport& c : r.classes) {
    Json j = to_json(c.fingerprint);
    j["members"] = c.members;
    j["families"] = c.families;
    j["chiral"] = c.chiral;
    j["known"] = c.known.empty() ? Json(nullptr) : Json(c.known);
    j["parallel_regular_hexagon_pairs"] = c.parallel_hexagon_pairs;
    classes.push_back(std::move(j));
    roundness.push_back(c.fingerprint.roundness);
  }
  Json out{{"sites", r.sites},
           {"cells", r.tiling ? static_cast<int>(r.tiling->cells.size()) : 0},
           {"classes", classes},
           {"class_counts", {{"1e-6", r.classes.size()}, {"1e-4", r.classes_at_1e4}, {"1e-3", r.classes_at_1e3}}},
           {"orientation_classes", r.orientation_classes},
           {"chirality", {{"chiral_shape", r.chiral_shapes()}, {"mirror_families", r.mirror_pairs()}}},
           {"roundness", roundness},
           {"volume_ratio", r.volume_ratio}};
  if (r.partition)
    out["partition"] = {{"samples", r.partition->samples},
                        {"gaps", r.partition->gaps},
                        {"overlaps", r.partition->overlaps}};
  out["errors"] = r.errors;
  return out;
}

inline Json to_json(const SurfaceReport& rep) {
  Json j;
  j["surface"] = rep.surface;
  j["formula"] = rep.formula;
  j["period"] = rep.period;
  j["frame"] = frame_name(frame_of_period(rep.period));
  const auto [lo, hi] = rep.range();
  j["range"] = Json::array({lo, hi});
  if (const auto m = rep.range_matches()) j["range_matches_printed"] = *m;
  Json ext = {{"minima", Json::array()}, {"maxima", Json::array()}};
  if (rep.extrema) {
    for (const auto& p : rep.extrema->minima) ext["minima"].push_back(to_json(p, rep.period));
    for (const auto& p : rep.extrema->maxima) ext["maxima"].push_back(to_json(p, rep.period));
  }
  j["extrema"] = ext;
  Json runs = Json::object();
  for (const RunReport& r : rep.runs) runs[which_name(r.which)] = to_json(r);
  j["runs"] = runs;
  j["errors"] = rep.errors;
  return j;
}

inline Json to_json(const NoveltyVerdict& v) {
  return Json{{"fingerprint", to_json(v.fingerprint)},
              {"nearest_known", v.nearest.empty() ? Json(nullptr) : Json(v.nearest)},
              {"distance", v.distance},
              {"verdict", v.known ? "known" : "candidate-novel"}};
}

}  // namespace plesio
