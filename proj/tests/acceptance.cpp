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

// One PASS or FAIL line per acceptance criterion, sub-checks indented below.
// Exits nonzero when any criterion fails.

#include <iostream>

#include "plesio/verify.hpp"

int main() {
  int failed = 0;
  for (const auto& r : plesio::run_acceptance()) {
    std::cout << (r.pass ? "PASS" : "FAIL") << " " << r.id << " " << r.title << "\n";
    for (const auto& n : r.notes) std::cout << "    " << n << "\n";
    failed += !r.pass;
  }
  std::cout << (12 - failed) << "/12 criteria pass\n";
  return failed == 0 ? 0 : 1;
}
