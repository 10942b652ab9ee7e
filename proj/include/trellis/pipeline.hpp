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

// End-to-end analysis of one input document.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "trellis/divided_graph.hpp"
#include "trellis/io.hpp"
#include "trellis/lefschetz.hpp"
#include "trellis/planar_map.hpp"
#include "trellis/polynomial.hpp"
#include "trellis/symbolic.hpp"
#include "trellis/trellis_model.hpp"

namespace trellis {

struct RegionSelection {
  enum class Mode { all, expanding, named };
  Mode mode = Mode::all;
  std::vector<std::string> names;

  // "expanding", or region names separated by commas.
  static RegionSelection parse(const std::string& text) {
    RegionSelection sel;
    if (text.empty() || text == "all") return sel;
    if (text == "expanding") {
      sel.mode = Mode::expanding;
      return sel;
    }
    sel.mode = Mode::named;
    std::string cur;
    for (char ch : text + ",") {
      if (ch == ',' || ch == ' ') {
        if (!cur.empty()) sel.names.push_back(cur);
        cur.clear();
      } else {
        cur += ch;
      }
    }
    return sel;
  }

  std::string describe() const {
    switch (mode) {
      case Mode::all: return "all regions";
      case Mode::expanding: return "expanding regions";
      case Mode::named: {
        std::string out;
        for (const auto& n : names) out += (out.empty() ? "" : ",") + n;
        return out;
      }
    }
    return "";
  }
};

struct AnalysisOptions {
  RegionSelection regions;
  double tol = 1e-9;
};

struct Analysis {
  std::string name;
  std::string provenance;
  DocumentKind kind = DocumentKind::trellis;

  // Trellis inputs only.
  std::optional<HomoclinicTrellisSpec> spec;
  ValidationReport validation;
  std::optional<CombinatorialMap> map;
  std::vector<Region> faces;
  std::optional<CutSurface> cut;
  std::vector<std::size_t> w_action;

  DividedGraph graph;
  GraphSelfMap initial;
  TightenResult tightened;
  bool macro_edges = false;

  TransitionSystem all;       // every region selected
  TransitionSystem selected;  // the requested selection
  std::vector<std::size_t> expanding;
  Polynomial full_char_poly;       // of A
  Polynomial selected_char_poly;   // of the selection on its region edges
  Polynomial essential_char_poly;  // of the expanding regions on their edges
  EntropyBound bound;
  bool trivial = false;
  Degree1Action degree1;

  const GraphSelfMap& map_used() const { return tightened.map; }
};

inline std::vector<std::size_t> resolve_selection(const RegionSelection& sel,
                                                  const TransitionSystem& all) {
  switch (sel.mode) {
    case RegionSelection::Mode::all: return all.selection;
    case RegionSelection::Mode::expanding: return expanding_regions(all);
    case RegionSelection::Mode::named: {
      std::vector<std::size_t> out;
      for (const auto& n : sel.names) {
        std::size_t r = 0;
        while (r < all.region_names.size() && all.region_names[r] != n) ++r;
        if (r == all.region_names.size()) throw ValidationError("unknown region " + n);
        out.push_back(r);
      }
      return out;
    }
  }
  return {};
}

inline Polynomial restricted_char_poly(const TransitionSystem& ts) {
  return char_poly(ts.a_selected.principal(ts.display_indices()));
}

// Runs everything downstream of a graph and its self-map.
inline void analyze_graph_map(Analysis& an, const AnalysisOptions& opt) {
  if (an.macro_edges) {
    an.tightened.map = an.initial;
    an.tightened.length_trace = {an.initial.total_length()};
  } else {
    an.tightened = tighten(an.graph, an.initial, all_regions(an.graph));
  }
  const auto& m = an.tightened.map;
  an.all = transition(an.graph, m);
  an.expanding = expanding_regions(an.all);
  an.selected = transition(an.graph, m, resolve_selection(opt.regions, an.all));
  an.tightened.certificate = check_tight(an.graph, m, an.selected.selection);
  an.full_char_poly = char_poly(an.all.a);
  an.selected_char_poly = restricted_char_poly(an.selected);
  an.essential_char_poly = restricted_char_poly(transition(an.graph, m, an.expanding));
  an.trivial = is_trivial(m);
  an.bound = entropy_bound(an.selected, opt.tol, an.tightened.certificate.tight);
  an.degree1 = derive_degree1_action(an.graph, m);
}

inline Analysis analyze_trellis(const HomoclinicTrellisSpec& spec, const AnalysisOptions& opt) {
  Analysis an;
  an.kind = DocumentKind::trellis;
  an.name = spec.name;
  an.provenance = spec.provenance;
  an.spec = spec;
  an.validation = validate_spec(spec);
  if (!an.validation.ok()) {
    for (const auto& f : an.validation.findings)
      if (f.severity == Severity::error) throw ValidationError(f.message);
  }
  an.map = build_rotation_system(spec.vertices);
  an.faces = trace_faces(*an.map);
  an.cut = cut_unstable(*an.map);
  an.w_action = w_action(spec);
  an.graph = spine(*an.cut);
  an.initial = derive_tree_map(an.graph, an.w_action);
  analyze_graph_map(an, opt);
  return an;
}

inline Analysis analyze_graph(const DirectGraphSpec& spec, const AnalysisOptions& opt) {
  Analysis an;
  an.kind = DocumentKind::graph;
  an.name = spec.name;
  an.provenance = spec.provenance;
  an.graph = spec.graph;
  an.initial = spec.map;
  an.macro_edges = spec.macro_edges;
  analyze_graph_map(an, opt);
  return an;
}

inline Analysis analyze(const InputDocument& doc, const AnalysisOptions& opt) {
  if (doc.trellis) return analyze_trellis(*doc.trellis, opt);
  if (doc.graph) return analyze_graph(*doc.graph, opt);
  throw ValidationError("a " + to_string(doc.kind) + " document has no graph map to analyze");
}

// Polynomial of the type-n family's expanding block: x(x^n - x^(n-1) - 2).
inline Polynomial expected_type_n_poly(int n) {
  std::vector<Integer> c(static_cast<std::size_t>(n) + 2, 0);
  c[1] = -2;
  c[static_cast<std::size_t>(n)] = -1;
  c[static_cast<std::size_t>(n) + 1] = 1;
  return Polynomial(std::move(c));
}

}  // namespace trellis
