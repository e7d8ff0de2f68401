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

#include "plesio/anatomy.hpp"
#include "plesio/extrema.hpp"
#include "plesio/formula/blocks.hpp"
#include "plesio/formula/catalog.hpp"
#include "plesio/formula/parse.hpp"
#include "plesio/lattice.hpp"
#include "plesio/obj.hpp"
#include "plesio/pipeline.hpp"
#include "plesio/report_json.hpp"
#include "plesio/tiling.hpp"
#include "plesio/voronoi.hpp"
