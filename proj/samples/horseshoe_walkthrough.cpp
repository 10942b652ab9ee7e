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

// Walks the horseshoe through each stage of the library by hand.

#include <cmath>
#include <iostream>

#include "trellis/trellis.hpp"

int main() {
  using namespace trellis;

  HomoclinicTrellisSpec spec = make_type_n(2);
  spec.name = "horseshoe";
  const auto report = validate_spec(spec);
  std::cout << "findings: " << report.findings.size() << "\n";

  const auto map = build_map(spec);
  const auto faces = trace_faces(map);
  std::cout << "V=" << map.vertex_count() << " E=" << map.edge_count() << " F=" << faces.size()
            << "\n";

  const auto cut = cut_unstable(map);
  const auto graph = spine(cut);
  const auto derived = derive_tree_map(graph, w_action(spec));
  const auto tight = tighten(graph, derived, all_regions(graph));
  for (std::size_t e = 0; e < graph.edges.size(); ++e)
    std::cout << graph.edges[e].name << " -> " << format_path(graph, tight.map.edge_images[e])
              << "\n";

  const auto all = transition(graph, tight.map);
  const auto ts = transition(graph, tight.map, expanding_regions(all));
  const auto bound = entropy_bound(ts);
  std::cout << "char poly " << to_string(char_poly(ts.a_selected.principal(ts.display_indices())))
            << "\n";
  std::cout << report::bound_line(bound) << "\n";
  return std::abs(bound.ln - std::log(2.0)) < 1e-9 ? 0 : 1;
}
