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

// Graphviz output. Node order follows vertex order (unstable coordinate for
// trellis maps), so identical inputs give identical text.

#include <cstddef>
#include <sstream>
#include <string>

#include "trellis/divided_graph.hpp"
#include "trellis/planar_map.hpp"
#include "trellis/symbolic.hpp"

namespace trellis::dot {

inline constexpr const char* kFont = "Helvetica";
inline constexpr const char* kUnstableColor = "#c0392b";
inline constexpr const char* kStableColor = "#2e86c1";
inline constexpr const char* kWFill = "#f5cba7";

inline std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

inline std::string combinatorial_map(const CombinatorialMap& m, const std::string& name = "trellis") {
  std::ostringstream os;
  os << "graph " << quote(name) << " {\n";
  os << "  node [shape=point, fontname=" << quote(kFont) << "];\n";
  for (std::size_t v = 0; v < m.vertices.size(); ++v)
    os << "  q" << v << " [xlabel=" << quote(to_string(m.vertices[v])) << "];\n";
  for (const auto& e : m.edges) {
    const bool u = e.curve == Curve::unstable;
    os << "  q" << e.from << " -- q" << e.to << " [color=" << quote(u ? kUnstableColor : kStableColor)
       << (u ? "" : ", style=dashed") << ", label=" << quote(std::string(to_string(e.curve)) +
                                                              std::to_string(e.segment))
       << "];\n";
  }
  os << "}\n";
  return os.str();
}

inline std::string region_adjacency(const CutSurface& cut, const std::string& name = "regions") {
  std::ostringstream os;
  os << "graph " << quote(name) << " {\n";
  os << "  node [shape=box, fontname=" << quote(kFont) << "];\n";
  for (const auto& r : cut.regions) os << "  R" << r.id << ";\n";
  for (const auto& c : cut.crosscuts)
    os << "  R" << c.regions[0] << " -- R" << c.regions[1] << " [label="
       << quote("p" + std::to_string(c.segment)) << "];\n";
  os << "}\n";
  return os.str();
}

inline std::string divided_graph(const DividedGraph& g, const std::string& name = "divided_graph") {
  std::ostringstream os;
  os << "digraph " << quote(name) << " {\n";
  os << "  node [fontname=" << quote(kFont) << "];\n";
  for (const auto& v : g.vertices) {
    os << "  " << quote(v.name);
    if (v.w_member)
      os << " [shape=doublecircle, style=filled, fillcolor=" << quote(kWFill) << "]";
    else
      os << " [shape=circle]";
    os << ";\n";
  }
  for (const auto& e : g.edges) {
    std::string label = e.name;
    if (e.region) label += " (" + g.region_names[*e.region] + ")";
    os << "  " << quote(g.vertices[e.tail].name) << " -> " << quote(g.vertices[e.head].name)
       << " [label=" << quote(label) << (e.region ? "" : ", style=dotted") << "];\n";
  }
  os << "}\n";
  return os.str();
}

inline std::string shift(const TransitionSystem& ts, const EdgeShift& s,
                         const std::string& name = "edge_shift") {
  std::ostringstream os;
  os << "digraph " << quote(name) << " {\n";
  os << "  node [shape=ellipse, fontname=" << quote(kFont) << "];\n";
  for (auto i : s.nodes)
    os << "  " << quote(ts.edge_names[i]) << " [label="
       << quote(ts.edge_names[i] + " " + ts.region_names[*ts.edge_region[i]]) << "];\n";
  for (const auto& a : s.arcs)
    os << "  " << quote(ts.edge_names[a.from]) << " -> " << quote(ts.edge_names[a.to])
       << " [label=" << quote(ts.region_names[a.label]) << "];\n";
  os << "}\n";
  return os.str();
}

}  // namespace trellis::dot
