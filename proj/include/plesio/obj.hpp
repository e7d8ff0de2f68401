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

#include <fstream>
#include <iomanip>
#include <ostream>

#include "plesio/cell.hpp"

namespace plesio {

/// Wavefront OBJ: one `o` per cell, then its `v` lines and counterclockwise
/// `f` lines. Indices are 1-based and global across objects.
inline void write_obj(std::ostream& os, const std::vector<ConvexCell>& cells,
                      const std::string& prefix = "cell") {
  const auto old_flags = os.flags();
  const auto old_prec = os.precision();
  os << std::setprecision(9);
  std::size_t base = 1;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const ConvexCell& c = cells[i];
    os << "o " << prefix << "_" << i << "\n";
    for (const Vec3& v : c.vertices) os << "v " << v.x() << " " << v.y() << " " << v.z() << "\n";
    for (const Face& f : c.faces) {
      os << "f";
      for (int k : f.cycle) os << " " << base + static_cast<std::size_t>(k);
      os << "\n";
    }
    base += c.vertices.size();
  }
  os.flags(old_flags);
  os.precision(old_prec);
}

inline void write_obj_file(const std::string& path, const std::vector<ConvexCell>& cells,
                           const std::string& prefix = "cell") {
  std::ofstream out(path);
  if (!out) throw Error("cannot open " + path + " for writing");
  write_obj(out, cells, prefix);
  if (!out) throw Error("failed writing " + path);
}

}  // namespace plesio
