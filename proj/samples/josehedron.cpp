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

// Minima of the Fischer-Koch S field, their Voronoi cell in the integer
// frame, and the unit cell of twelve copies written as OBJ.

#include <iostream>

#include "plesio.hpp"

int main(int argc, char** argv) {
  using namespace plesio;
  const PeriodicField field = catalog_lookup("FKS").field();
  const ExtremalSet ext = find_extrema(field, {}, {Kind::Minimum});
  std::cout << ext.minima.size() << " minima at value " << ext.global_min << "\n";

  const PeriodicPointSet sites = extremal_sites(ext, true, false).rescaled(frame_period(Frame::Int));
  const UnitCellTiling tiling = build_tiling(sites);
  const ConvexCell& cell = tiling.cells.front();
  std::cout << "F=" << cell.num_faces() << " V=" << cell.num_vertices() << " E=" << cell.num_edges() << "\n"
            << anatomy_table(cell) << tiling.orientation_classes.size() << " orientation classes, volume ratio "
            << tiling.volume_ratio << "\n";
  if (argc > 1) write_obj_file(argv[1], tile_assembly(tiling, 1, 1, 1));
  return 0;
}
