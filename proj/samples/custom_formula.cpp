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

// Build a field from blocks, run all three site choices and screen the
// resulting cells against the classical space fillers.

#include <iostream>

#include "plesio.hpp"

int main() {
  using namespace plesio;
  const PeriodicField field = compose_blocks({{1.0, 'E'}, {0.5, 'F'}}, 0.0);
  const SurfaceReport rep = run_surface("E + 0.5 F", field, kAllWhich);
  std::cout << rep.formula << "\n" << summary_line(rep) << "\n";
  for (const NoveltyVerdict& v : novelty_screen(rep))
    std::cout << "  F=" << v.fingerprint.faces << " V=" << v.fingerprint.vertices << "  "
              << (v.known ? "known: " + v.nearest : "candidate-novel (nearest " + v.nearest + ")") << "\n";
  return 0;
}
