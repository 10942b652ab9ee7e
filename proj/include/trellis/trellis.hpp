// Copyright 2026 The Trellis Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Umbrella header.

#include "trellis/cli.hpp"
#include "trellis/divided_graph.hpp"
#include "trellis/dot.hpp"
#include "trellis/edge_path.hpp"
#include "trellis/error.hpp"
#include "trellis/io.hpp"
#include "trellis/lefschetz.hpp"
#include "trellis/matrix.hpp"
#include "trellis/pipeline.hpp"
#include "trellis/planar_map.hpp"
#include "trellis/polynomial.hpp"
#include "trellis/report.hpp"
#include "trellis/symbolic.hpp"
#include "trellis/trellis_model.hpp"
