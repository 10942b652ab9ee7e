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

// Text and JSON renderings of analyses, counts and Lefschetz tables.

#include <algorithm>
#include <cstdio>
#include <cstddef>
#include <sstream>
#include <string>
#include <vector>

#include "trellis/io.hpp"
#include "trellis/lefschetz.hpp"
#include "trellis/pipeline.hpp"
#include "trellis/symbolic.hpp"

namespace trellis::report {

inline std::string fixed(double x, int digits = 6) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, x);
  return buf;
}

inline std::string join(const std::vector<std::string>& parts, const std::string& sep = " ") {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

inline std::string region_list(const TransitionSystem& ts, const std::vector<std::size_t>& ids) {
  std::vector<std::string> names;
  for (auto r : ids) names.push_back(ts.region_names[r]);
  return names.empty() ? "(none)" : join(names);
}

inline Json integer_json(const Integer& x) {
  if (x >= std::numeric_limits<long long>::min() && x <= std::numeric_limits<long long>::max())
    return x.convert_to<long long>();
  return x.str();
}

inline Json poly_json(const Polynomial& p) {
  Json arr = Json::array();
  for (const auto& c : p.c) arr.push_back(integer_json(c));
  return arr;
}

// Rows and columns of the region edges grouped by region, with a rule
// between region blocks.
inline std::string matrix_block(const TransitionSystem& ts, const IntMatrix& m,
                                const std::string& indent = "  ") {
  auto idx = ts.display_indices();
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return *ts.edge_region[a] < *ts.edge_region[b];
  });
  if (idx.empty()) return indent + "(no region edges)\n";
  std::size_t w = 1, name_w = 1;
  for (auto i : idx) {
    name_w = std::max(name_w, ts.edge_names[i].size());
    w = std::max(w, ts.edge_names[i].size());
    for (auto j : idx) w = std::max(w, m(i, j).str().size());
  }
  auto pad = [](const std::string& s, std::size_t width) {
    return std::string(width > s.size() ? width - s.size() : 0, ' ') + s;
  };
  std::ostringstream os;
  os << indent << pad("", name_w) << " |";
  for (auto j : idx) os << ' ' << pad(ts.edge_names[j], w);
  os << '\n';
  const std::size_t line = name_w + 2 + idx.size() * (w + 1);
  for (std::size_t k = 0; k < idx.size(); ++k) {
    const auto i = idx[k];
    if (k > 0 && *ts.edge_region[i] != *ts.edge_region[idx[k - 1]])
      os << indent << std::string(line, '-') << '\n';
    os << indent << pad(ts.edge_names[i], name_w) << " |";
    for (auto j : idx) os << ' ' << pad(m(i, j).str(), w);
    os << "   " << ts.region_names[*ts.edge_region[i]] << '\n';
  }
  return os.str();
}

inline std::string bound_line(const EntropyBound& b) {
  if (!b.positive()) return "entropy lower bound: 0";
  const auto& r = b.radius;
  const std::string base = r.exact_integer ? r.exact_integer->str() : fixed(r.value);
  return "entropy lower bound: ln " + base + " ≈ " + fixed(b.ln);
}

inline std::string witness_lines(const DividedGraph& g, const TightnessCertificate& c) {
  std::string out;
  for (const auto& w : c.witnesses) out += "    witness: " + describe(g, w) + "\n";
  return out;
}

inline std::string analysis_text(const Analysis& an, unsigned max_len) {
  std::ostringstream os;
  const auto& g = an.graph;
  const auto& m = an.map_used();
  os << "analysis: " << (an.name.empty() ? "(unnamed)" : an.name) << "\n";
  os << "input kind: " << to_string(an.kind) << "\n";
  if (!an.provenance.empty()) os << "provenance: " << an.provenance << "\n";

  if (an.spec) {
    os << "\n[validation] from: vertices, stable_segment_map, vertex_orbit\n";
    os << "  " << an.validation.count(Severity::error) << " errors, "
       << an.validation.count(Severity::warning) << " warnings\n";
    for (const auto& f : an.validation.findings)
      os << "  " << to_string(f.severity) << " " << f.code << ": " << f.message
         << (f.element.empty() ? "" : " [" + f.element + "]") << "\n";

    os << "\n[cut surface] from: vertices (u, s, or)\n";
    const auto& cm = *an.map;
    os << "  combinatorial map: V=" << cm.vertex_count() << " E=" << cm.edge_count()
       << " F=" << an.faces.size() << ", V - E + F = " << cm.euler_characteristic(an.faces.size()) << "\n";
    os << "  cut along the unstable arc: " << an.cut->components.size() << (an.cut->components.size() == 1 ? " disk, " : " disks, ")
       << an.cut->crosscuts.size() << " cross-cuts, " << an.cut->regions.size() << " regions\n";
    for (const auto& r : an.cut->regions) {
      std::vector<std::string> cc;
      for (auto c : r.crosscuts) cc.push_back("p" + std::to_string(c));
      os << "  R" << r.id << ": " << (cc.empty() ? "no cross-cuts" : "cross-cuts " + join(cc))
         << "\n";
    }
  }

  os << "\n[divided graph] from: "
     << (an.spec ? "cut surface regions and cross-cuts" : "vertices, edges") << "\n";
  std::vector<std::string> w, other;
  for (const auto& v : g.vertices) (v.w_member ? w : other).push_back(v.name);
  os << "  W: " << (w.empty() ? "(none)" : join(w)) << "\n";
  os << "  other vertices: " << (other.empty() ? "(none)" : join(other)) << "\n";
  for (const auto& e : g.edges)
    os << "  " << e.name << ": " << g.vertices[e.tail].name << " -> " << g.vertices[e.head].name
       << (e.region ? " (" + g.region_names[*e.region] + ")" : " (untagged)") << "\n";

  os << "\n[graph map] from: " << (an.spec ? "stable_segment_map" : "vertex_map, edge_map")
     << "\n";
  if (an.spec) {
    std::vector<std::string> act;
    for (std::size_t i = 0; i < an.w_action.size(); ++i)
      act.push_back("p" + std::to_string(i) + "->p" + std::to_string(an.w_action[i]));
    os << "  W-action: " << join(act, ", ") << "\n";
  }
  std::vector<std::string> vim;
  for (std::size_t v = 0; v < g.vertices.size(); ++v)
    vim.push_back(g.vertices[v].name + "->" + g.vertices[m.vertex_images[v]].name);
  os << "  vertex images: " << join(vim, ", ") << "\n";
  for (std::size_t e = 0; e < g.edges.size(); ++e)
    os << "  " << g.edges[e].name << " -> " << format_path(g, m.edge_images[e]) << "\n";
  if (an.macro_edges) {
    os << "  images taken as given (macro edges); no reduction or tightening\n";
  } else {
    std::vector<std::string> trace;
    for (auto x : an.tightened.length_trace) trace.push_back(std::to_string(x));
    os << "  tightening: " << an.tightened.moves << " moves, total image length "
       << join(trace, " -> ") << "\n";
  }
  os << "  tightness over the selection: "
     << (an.tightened.certificate.tight ? "tight" : "not tight") << "\n";
  os << witness_lines(g, an.tightened.certificate);

  const auto& ts = an.selected;
  os << "\n[transition matrices] from: edge images above\n";
  os << "  selection: " << region_list(ts, ts.selection) << "\n";
  os << "  expanding regions: " << region_list(ts, an.expanding) << "\n";
  os << "  selected matrix on region edges (rows map across columns):\n";
  os << matrix_block(ts, ts.a_selected, "    ");
  if (!ts.fixed_edges.empty()) {
    std::vector<std::string> f;
    for (auto e : ts.fixed_edges) f.push_back(ts.edge_names[e]);
    os << "  edges mapped exactly onto themselves: " << join(f) << "\n";
  }

  os << "\n[characteristic polynomial] from: transition matrices\n";
  os << "  selection on region edges: " << to_string(an.selected_char_poly) << "\n";
  os << "  expanding regions on their edges: " << to_string(an.essential_char_poly) << "\n";
  os << "  full matrix: " << to_string(an.full_char_poly) << "\n";

  const auto& b = an.bound;
  os << "\n[entropy] from: characteristic polynomial of the selection\n";
  if (b.radius.certificate.hi == 0)
    os << "  lambda_max = 0 (no positive real root)\n";
  else if (b.radius.exact_integer)
    os << "  lambda_max = " << b.radius.exact_integer->str() << " (exact root)\n";
  else
    os << "  lambda_max ≈ " << fixed(b.radius.value, 9) << "\n";
  const auto& c = b.radius.certificate;
  os << "  certificate: largest real root of " << to_string(c.squarefree) << " in ("
     << fixed(to_double(c.lo), 12) << ", " << fixed(to_double(c.hi), 12) << "], "
     << (verify_certificate(c) ? "re-verified" : "NOT verified") << "\n";
  if (b.radius.power_estimate)
    os << "  power iteration: " << fixed(*b.radius.power_estimate, 9)
       << (b.radius.power_agrees ? " (agrees)" : " (disagrees)") << "\n";
  os << "  " << bound_line(b) << "\n";
  os << "  log2 form: " << fixed(b.log2) << " bits\n";
  if (!b.certified) os << "  caveat: not certified minimal (map is not tight over the selection)\n";
  if (an.trivial) os << "  map homotopic to constant; no forced dynamics\n";

  const auto shift = edge_shift(ts);
  os << "\n[edge shift] from: selected matrix\n";
  std::vector<std::string> nodes;
  for (auto i : shift.nodes)
    nodes.push_back(ts.edge_names[i] + "(" + ts.region_names[*ts.edge_region[i]] + ")");
  os << "  nodes: " << (nodes.empty() ? "(none)" : join(nodes)) << "\n";
  os << "  arcs: " << shift.arcs.size() << "\n";

  os << "\n[periodic counts] from: selected matrix\n";
  IntMatrix p = IntMatrix::identity(ts.size());
  for (unsigned n = 1; n <= max_len; ++n) {
    p = p * ts.a_selected;
    os << "  n=" << n << ": Tr = " << p.trace().str() << "\n";
  }
  os << "  caveat: " << kVertexCaveat << "\n";

  const auto& d1 = an.degree1;
  os << "\n[degree-one action] from: edge images, collapsing W and a spanning forest\n";
  std::vector<std::string> basis, collapsed;
  for (auto e : d1.basis) basis.push_back(g.edges[e].name);
  for (auto e : d1.collapsed) collapsed.push_back(g.edges[e].name);
  os << "  collapsed: " << (collapsed.empty() ? "(none)" : join(collapsed)) << "\n";
  os << "  basis: " << (basis.empty() ? "(none)" : join(basis)) << "\n";
  os << "  trace: " << (d1.full.rows() ? d1.full.trace().str() : "0")
     << (d1.exact ? "" : " (collapsed edges cross basis edges; matrix is the literal count)")
     << "\n";
  return os.str();
}

inline Json certificate_json(const RadiusCertificate& c) {
  return {{"polynomial", poly_json(c.squarefree)},
          {"lo", c.lo.str()},
          {"hi", c.hi.str()},
          {"bound", c.bound.str()},
          {"verified", verify_certificate(c)}};
}

inline Json analysis_json(const Analysis& an, unsigned max_len) {
  Json doc;
  doc["schema"] = kSchemaVersion;
  doc["kind"] = "analysis";
  doc["name"] = an.name;
  doc["input_kind"] = to_string(an.kind);
  if (an.spec) {
    Json findings = Json::array();
    for (const auto& f : an.validation.findings)
      findings.push_back({{"severity", std::string(to_string(f.severity))},
                          {"code", f.code},
                          {"message", f.message},
                          {"element", f.element}});
    doc["validation"] = {{"errors", an.validation.count(Severity::error)},
                         {"warnings", an.validation.count(Severity::warning)},
                         {"findings", findings}};
    doc["cut_surface"] = {{"vertices", an.map->vertex_count()},
                          {"edges", an.map->edge_count()},
                          {"faces", an.faces.size()},
                          {"crosscuts", an.cut->crosscuts.size()},
                          {"regions", an.cut->regions.size()}};
    doc["w_action"] = an.w_action;
  }
  doc["graph"] = to_json(an.graph, an.map_used(), an.name, an.macro_edges);
  Json witnesses = Json::array();
  for (const auto& w : an.tightened.certificate.witnesses) witnesses.push_back(describe(an.graph, w));
  doc["tightening"] = {{"moves", an.tightened.moves},
                       {"length_trace", an.tightened.length_trace},
                       {"tight", an.tightened.certificate.tight},
                       {"witnesses", witnesses}};
  const auto& ts = an.selected;
  auto names = [&](const std::vector<std::size_t>& ids) {
    Json arr = Json::array();
    for (auto r : ids) arr.push_back(ts.region_names[r]);
    return arr;
  };
  doc["selection"] = names(ts.selection);
  doc["expanding_regions"] = names(an.expanding);
  Json edge_names = Json::array();
  for (auto i : ts.display_indices()) edge_names.push_back(ts.edge_names[i]);
  doc["matrices"] = {{"edges", ts.edge_names},
                     {"full", detail::matrix_json(ts.a)},
                     {"region_edges", edge_names},
                     {"selected", detail::matrix_json(ts.a_selected.principal(ts.display_indices()))}};
  doc["char_poly"] = {{"selected", poly_json(an.selected_char_poly)},
                      {"expanding", poly_json(an.essential_char_poly)},
                      {"full", poly_json(an.full_char_poly)},
                      {"order", "ascending"}};
  const auto& b = an.bound;
  Json entropy = {{"lambda_max", b.radius.value},
                  {"ln", b.ln},
                  {"log2", b.log2},
                  {"certified", b.certified},
                  {"certificate", certificate_json(b.radius.certificate)}};
  if (b.radius.exact_integer) entropy["exact_integer"] = integer_json(*b.radius.exact_integer);
  if (b.radius.power_estimate) entropy["power_estimate"] = *b.radius.power_estimate;
  doc["entropy"] = entropy;
  doc["trivial"] = an.trivial;
  Json traces = Json::array();
  IntMatrix p = IntMatrix::identity(ts.size());
  for (unsigned n = 1; n <= max_len; ++n) {
    p = p * ts.a_selected;
    traces.push_back(integer_json(p.trace()));
  }
  doc["traces"] = traces;
  doc["degree1"] = {{"basis", an.degree1.family.degrees[0].basis},
                    {"matrix", detail::matrix_json(an.degree1.full)},
                    {"exact", an.degree1.exact}};
  return doc;
}

inline std::string counts_text(const TransitionSystem& ts, const std::vector<PeriodicCounts>& all) {
  std::ostringstream os;
  os << "periodic counts over " << region_list(ts, ts.selection) << "\n";
  for (const auto& pc : all) {
    os << "\nn=" << pc.length << "\n";
    for (const auto& e : pc.entries)
      os << "  " << format_code(ts, e.code) << "  " << e.trace.str() << "\n";
    os << "  total " << pc.total.str() << ", Tr(A^n) on the selection " << pc.expected.str()
       << (pc.partial ? " (PARTIAL: enumeration budget exhausted)"
                      : (pc.total == pc.expected ? " (match)" : " (MISMATCH)"))
       << "\n";
  }
  os << "\ncaveat: " << kVertexCaveat << "\n";
  return os.str();
}

inline Json counts_json(const TransitionSystem& ts, const std::vector<PeriodicCounts>& all) {
  Json doc;
  doc["schema"] = kSchemaVersion;
  doc["kind"] = "periodic_counts";
  Json lengths = Json::array();
  for (const auto& pc : all) {
    Json entries = Json::array();
    for (const auto& e : pc.entries)
      entries.push_back({{"code", format_code(ts, e.code)}, {"trace", integer_json(e.trace)}});
    lengths.push_back({{"n", pc.length},
                       {"codes", entries},
                       {"total", integer_json(pc.total)},
                       {"trace_of_power", integer_json(pc.expected)},
                       {"partial", pc.partial}});
  }
  doc["lengths"] = lengths;
  doc["caveat"] = kVertexCaveat;
  return doc;
}

inline constexpr const char* kLefschetzNote =
    "a nonzero value forces a periodic point of period n following the code";

inline std::string lefschetz_text(const GradedMatrixFamily& fam,
                                  const std::vector<NonvanishingCodes>& all) {
  std::ostringstream os;
  std::vector<int> degrees;
  for (const auto& b : fam.degrees) degrees.push_back(b.degree);
  os << "Lefschetz numbers over regions " << join(fam.regions) << "\n";
  os << "degrees supplied:";
  for (auto d : degrees) os << " " << d;
  os << (degrees.empty() ? " (none)" : "") << "; absent degrees contribute zero\n";
  for (const auto& nc : all) {
    os << "\nn=" << nc.length << ": " << nc.codes.size() << " codes with L != 0"
       << (nc.partial ? " (PARTIAL: enumeration budget exhausted)" : "") << "\n";
    for (const auto& r : nc.codes) {
      std::string code;
      for (auto x : r.code) code += fam.regions[x];
      os << "  " << code << "  L = " << r.value.str() << "\n";
    }
  }
  os << "\nnote: " << kLefschetzNote << "\n";
  return os.str();
}

inline Json lefschetz_json(const GradedMatrixFamily& fam,
                           const std::vector<NonvanishingCodes>& all) {
  Json doc;
  doc["schema"] = kSchemaVersion;
  doc["kind"] = "lefschetz_table";
  doc["family"] = to_json(fam);
  Json lengths = Json::array();
  for (const auto& nc : all) {
    Json codes = Json::array();
    for (const auto& r : nc.codes) {
      std::string code;
      for (auto x : r.code) code += fam.regions[x];
      codes.push_back({{"code", code}, {"L", integer_json(r.value)}});
    }
    lengths.push_back({{"n", nc.length}, {"nonvanishing", codes}, {"partial", nc.partial}});
  }
  doc["lengths"] = lengths;
  doc["note"] = kLefschetzNote;
  return doc;
}

inline std::string validation_text(const ValidationReport& r) {
  std::ostringstream os;
  os << (r.ok() ? "valid" : "invalid") << ": " << r.count(Severity::error) << " errors, "
     << r.count(Severity::warning) << " warnings\n";
  for (const auto& f : r.findings)
    os << "  " << to_string(f.severity) << " " << f.code << ": " << f.message
       << (f.element.empty() ? "" : " [" + f.element + "]") << "\n";
  return os.str();
}

}  // namespace trellis::report
