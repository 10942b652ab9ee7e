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

// Versioned JSON documents: trellis descriptions, direct graph maps and
// graded matrix families. Unknown fields are rejected.

#include <cstddef>
#include <fstream>
#include <initializer_list>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "trellis/divided_graph.hpp"
#include "trellis/error.hpp"
#include "trellis/lefschetz.hpp"
#include "trellis/trellis_model.hpp"

namespace trellis {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

// A graph, its self-map and region tags, given directly.
struct DirectGraphSpec {
  std::string name;
  std::string provenance;
  DividedGraph graph;
  GraphSelfMap map;
  bool macro_edges = false;  // images are taken verbatim, never reduced or tightened
};

enum class DocumentKind { trellis, graph, lefschetz_family };

inline std::string to_string(DocumentKind k) {
  switch (k) {
    case DocumentKind::trellis: return "trellis";
    case DocumentKind::graph: return "graph";
    case DocumentKind::lefschetz_family: return "lefschetz_family";
  }
  return "?";
}

struct InputDocument {
  DocumentKind kind = DocumentKind::trellis;
  std::string name;
  std::string provenance;
  std::optional<HomoclinicTrellisSpec> trellis;
  std::optional<DirectGraphSpec> graph;
  std::optional<GradedMatrixFamily> family;
};

namespace detail {

inline void allow_only(const Json& obj, const std::string& where,
                       std::initializer_list<const char*> keys) {
  if (!obj.is_object()) throw ParseError(where + ": expected an object");
  std::set<std::string> allowed(keys.begin(), keys.end());
  for (const auto& [key, value] : obj.items())
    if (!allowed.count(key)) throw ParseError(where + ": unknown field \"" + key + "\"");
}

inline const Json& require(const Json& obj, const std::string& where, const char* key) {
  const auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(where + ": missing field \"" + key + "\"");
  return *it;
}

inline long long as_int(const Json& v, const std::string& where) {
  if (!v.is_number_integer()) throw ParseError(where + ": expected an integer");
  return v.get<long long>();
}

inline int as_int32(const Json& v, const std::string& where) {
  const auto x = as_int(v, where);
  if (x < std::numeric_limits<int>::min() || x > std::numeric_limits<int>::max())
    throw ParseError(where + ": integer out of range");
  return static_cast<int>(x);
}

inline std::string as_string(const Json& v, const std::string& where) {
  if (!v.is_string()) throw ParseError(where + ": expected a string");
  return v.get<std::string>();
}

inline const Json& as_array(const Json& v, const std::string& where) {
  if (!v.is_array()) throw ParseError(where + ": expected an array");
  return v;
}

inline std::string optional_string(const Json& obj, const char* key, const std::string& where) {
  const auto it = obj.find(key);
  return it == obj.end() ? std::string() : as_string(*it, where + "." + key);
}

inline IntMatrix parse_matrix(const Json& v, const std::string& where) {
  as_array(v, where);
  const std::size_t r = v.size();
  IntMatrix m;
  for (std::size_t i = 0; i < r; ++i) {
    const auto& row = as_array(v[i], where + "[" + std::to_string(i) + "]");
    if (i == 0) m = IntMatrix(r, row.size());
    if (row.size() != m.cols()) throw ParseError(where + ": ragged matrix rows");
    for (std::size_t j = 0; j < row.size(); ++j)
      m(i, j) = as_int(row[j], where + "[" + std::to_string(i) + "][" + std::to_string(j) + "]");
  }
  return m;
}

inline Json matrix_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const auto& x = m(i, j);
      if (x >= std::numeric_limits<long long>::min() && x <= std::numeric_limits<long long>::max())
        row.push_back(x.convert_to<long long>());
      else
        row.push_back(x.str());
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

inline HomoclinicTrellisSpec parse_trellis(const Json& doc) {
  allow_only(doc, "trellis",
             {"schema", "kind", "name", "provenance", "surface", "vertices", "stable_segment_map",
              "vertex_orbit"});
  HomoclinicTrellisSpec spec;
  spec.name = optional_string(doc, "name", "trellis");
  spec.provenance = optional_string(doc, "provenance", "trellis");
  spec.surface = as_string(require(doc, "trellis", "surface"), "surface");
  const auto& verts = as_array(require(doc, "trellis", "vertices"), "vertices");
  for (std::size_t i = 0; i < verts.size(); ++i) {
    const std::string where = "vertices[" + std::to_string(i) + "]";
    allow_only(verts[i], where, {"u", "s", "or"});
    TrellisVertex v;
    v.u = as_int32(require(verts[i], where, "u"), where + ".u");
    v.s = as_int32(require(verts[i], where, "s"), where + ".s");
    const auto o = as_string(require(verts[i], where, "or"), where + ".or");
    const auto parsed = parse_orientation(o);
    if (!parsed) throw ParseError(where + ".or: expected \"+\" or \"-\"");
    v.orient = *parsed;
    spec.vertices.push_back(v);
  }
  const auto& smap = as_array(require(doc, "trellis", "stable_segment_map"), "stable_segment_map");
  for (std::size_t i = 0; i < smap.size(); ++i)
    spec.stable_segment_map.push_back(
        as_int(smap[i], "stable_segment_map[" + std::to_string(i) + "]"));
  if (const auto it = doc.find("vertex_orbit"); it != doc.end()) {
    as_array(*it, "vertex_orbit");
    for (std::size_t i = 0; i < it->size(); ++i) {
      const std::string where = "vertex_orbit[" + std::to_string(i) + "]";
      const auto& pair = as_array((*it)[i], where);
      if (pair.size() != 2) throw ParseError(where + ": expected [u_from, u_to]");
      spec.vertex_orbit.emplace_back(as_int32(pair[0], where), as_int32(pair[1], where));
    }
  }
  return spec;
}

inline OrientedEdge parse_step(const DividedGraph& g, const std::string& token,
                               const std::string& where) {
  const bool rev = !token.empty() && token[0] == '~';
  const auto name = rev ? token.substr(1) : token;
  const auto e = g.find_edge(name);
  if (!e) throw ValidationError(where + ": unknown edge \"" + name + "\"");
  return {*e, rev};
}

inline DirectGraphSpec parse_graph(const Json& doc) {
  allow_only(doc, "graph",
             {"schema", "kind", "name", "provenance", "regions", "vertices", "edges", "vertex_map",
              "edge_map", "macro_edges"});
  DirectGraphSpec spec;
  spec.name = optional_string(doc, "name", "graph");
  spec.provenance = optional_string(doc, "provenance", "graph");
  auto& g = spec.graph;

  const auto& verts = as_array(require(doc, "graph", "vertices"), "vertices");
  for (std::size_t i = 0; i < verts.size(); ++i) {
    const std::string where = "vertices[" + std::to_string(i) + "]";
    allow_only(verts[i], where, {"id", "w"});
    GraphVertex v;
    v.name = as_string(require(verts[i], where, "id"), where + ".id");
    if (const auto it = verts[i].find("w"); it != verts[i].end()) {
      if (!it->is_boolean()) throw ParseError(where + ".w: expected a boolean");
      v.w_member = it->get<bool>();
    }
    if (g.find_vertex(v.name)) throw ValidationError(where + ": duplicate vertex id " + v.name);
    g.vertices.push_back(std::move(v));
  }

  std::map<std::string, std::size_t> region_index;
  if (const auto it = doc.find("regions"); it != doc.end()) {
    as_array(*it, "regions");
    for (std::size_t i = 0; i < it->size(); ++i) {
      const auto r = as_string((*it)[i], "regions[" + std::to_string(i) + "]");
      if (!region_index.emplace(r, g.region_names.size()).second)
        throw ValidationError("regions: duplicate region " + r);
      g.region_names.push_back(r);
    }
  }
  const bool declared = doc.contains("regions");

  const auto& edges = as_array(require(doc, "graph", "edges"), "edges");
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const std::string where = "edges[" + std::to_string(i) + "]";
    allow_only(edges[i], where, {"id", "from", "to", "region"});
    GraphEdge e;
    e.name = as_string(require(edges[i], where, "id"), where + ".id");
    if (e.name.empty() || e.name[0] == '~')
      throw ValidationError(where + ": edge ids must be nonempty and not start with ~");
    if (g.find_edge(e.name)) throw ValidationError(where + ": duplicate edge id " + e.name);
    const auto from = as_string(require(edges[i], where, "from"), where + ".from");
    const auto to = as_string(require(edges[i], where, "to"), where + ".to");
    const auto t = g.find_vertex(from), h = g.find_vertex(to);
    if (!t || !h) throw ValidationError(where + ": endpoint is not a vertex");
    e.tail = *t;
    e.head = *h;
    if (const auto it = edges[i].find("region"); it != edges[i].end() && !it->is_null()) {
      const auto r = as_string(*it, where + ".region");
      auto found = region_index.find(r);
      if (found == region_index.end()) {
        if (declared) throw ValidationError(where + ": undeclared region " + r);
        found = region_index.emplace(r, g.region_names.size()).first;
        g.region_names.push_back(r);
      }
      e.region = found->second;
    }
    g.edges.push_back(std::move(e));
  }

  if (const auto it = doc.find("macro_edges"); it != doc.end()) {
    if (!it->is_boolean()) throw ParseError("macro_edges: expected a boolean");
    spec.macro_edges = it->get<bool>();
  }

  const auto& vmap = require(doc, "graph", "vertex_map");
  if (!vmap.is_object()) throw ParseError("vertex_map: expected an object");
  spec.map.vertex_images.assign(g.vertices.size(), 0);
  std::vector<bool> seen(g.vertices.size(), false);
  for (const auto& [key, value] : vmap.items()) {
    const auto v = g.find_vertex(key);
    if (!v) throw ValidationError("vertex_map: unknown vertex " + key);
    const auto target = g.find_vertex(as_string(value, "vertex_map." + key));
    if (!target) throw ValidationError("vertex_map." + key + ": unknown image vertex");
    spec.map.vertex_images[*v] = *target;
    seen[*v] = true;
  }
  for (std::size_t v = 0; v < seen.size(); ++v)
    if (!seen[v]) throw ValidationError("vertex_map: no image for " + g.vertices[v].name);

  const auto& emap = require(doc, "graph", "edge_map");
  if (!emap.is_object()) throw ParseError("edge_map: expected an object");
  spec.map.edge_images.assign(g.edges.size(), {});
  std::vector<bool> eseen(g.edges.size(), false);
  for (const auto& [key, value] : emap.items()) {
    const auto e = g.find_edge(key);
    if (!e) throw ValidationError("edge_map: unknown edge " + key);
    const auto& steps = as_array(value, "edge_map." + key);
    for (std::size_t k = 0; k < steps.size(); ++k)
      spec.map.edge_images[*e].push_back(parse_step(
          g, as_string(steps[k], "edge_map." + key + "[" + std::to_string(k) + "]"),
          "edge_map." + key));
    eseen[*e] = true;
  }
  for (std::size_t e = 0; e < eseen.size(); ++e)
    if (!eseen[e]) throw ValidationError("edge_map: no image for " + g.edges[e].name);

  const auto problems = map_problems(g, spec.map);
  if (!problems.empty()) throw ValidationError(problems.front());
  return spec;
}

inline GradedMatrixFamily parse_family(const Json& doc) {
  allow_only(doc, "lefschetz_family", {"schema", "kind", "name", "provenance", "regions", "degrees"});
  GradedMatrixFamily fam;
  const auto& regions = as_array(require(doc, "lefschetz_family", "regions"), "regions");
  for (std::size_t i = 0; i < regions.size(); ++i)
    fam.regions.push_back(as_string(regions[i], "regions[" + std::to_string(i) + "]"));
  const auto& degrees = as_array(require(doc, "lefschetz_family", "degrees"), "degrees");
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    const std::string where = "degrees[" + std::to_string(i) + "]";
    allow_only(degrees[i], where, {"degree", "basis", "matrices"});
    GradedBlock block;
    block.degree = as_int32(require(degrees[i], where, "degree"), where + ".degree");
    const auto& basis = as_array(require(degrees[i], where, "basis"), where + ".basis");
    for (std::size_t k = 0; k < basis.size(); ++k)
      block.basis.push_back(as_string(basis[k], where + ".basis"));
    const auto& mats = require(degrees[i], where, "matrices");
    if (!mats.is_object()) throw ParseError(where + ".matrices: expected an object");
    for (const auto& [key, value] : mats.items()) {
      bool known = false;
      for (const auto& r : fam.regions) known = known || r == key;
      if (!known) throw ValidationError(where + ".matrices: unknown region " + key);
    }
    for (const auto& r : fam.regions) {
      const auto it = mats.find(r);
      if (it == mats.end())
        block.matrices.emplace_back(block.basis.size(), block.basis.size());
      else
        block.matrices.push_back(parse_matrix(*it, where + ".matrices." + r));
    }
    fam.degrees.push_back(std::move(block));
  }
  validate_family(fam);
  return fam;
}

}  // namespace detail

inline InputDocument parse_document(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("document: expected an object");
  const auto schema = detail::as_int(detail::require(doc, "document", "schema"), "schema");
  if (schema != kSchemaVersion)
    throw ParseError("unsupported schema version " + std::to_string(schema));
  const auto kind = detail::as_string(detail::require(doc, "document", "kind"), "kind");
  InputDocument out;
  out.name = detail::optional_string(doc, "name", "document");
  out.provenance = detail::optional_string(doc, "provenance", "document");
  if (kind == "trellis") {
    out.kind = DocumentKind::trellis;
    out.trellis = detail::parse_trellis(doc);
  } else if (kind == "graph") {
    out.kind = DocumentKind::graph;
    out.graph = detail::parse_graph(doc);
  } else if (kind == "lefschetz_family") {
    out.kind = DocumentKind::lefschetz_family;
    out.family = detail::parse_family(doc);
  } else {
    throw ParseError("unknown document kind \"" + kind + "\"");
  }
  return out;
}

inline InputDocument load_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_document(buffer.str());
}

inline Json to_json(const HomoclinicTrellisSpec& spec) {
  Json doc;
  doc["schema"] = kSchemaVersion;
  doc["kind"] = "trellis";
  if (!spec.name.empty()) doc["name"] = spec.name;
  if (!spec.provenance.empty()) doc["provenance"] = spec.provenance;
  doc["surface"] = spec.surface;
  doc["vertices"] = Json::array();
  for (const auto& v : spec.vertices)
    doc["vertices"].push_back({{"u", v.u}, {"s", v.s}, {"or", std::string(to_string(v.orient))}});
  doc["stable_segment_map"] = spec.stable_segment_map;
  if (!spec.vertex_orbit.empty()) {
    doc["vertex_orbit"] = Json::array();
    for (const auto& [a, b] : spec.vertex_orbit) doc["vertex_orbit"].push_back({a, b});
  }
  return doc;
}

inline Json to_json(const DividedGraph& g, const GraphSelfMap& m, const std::string& name = "",
                    bool macro_edges = false) {
  Json doc;
  doc["schema"] = kSchemaVersion;
  doc["kind"] = "graph";
  if (!name.empty()) doc["name"] = name;
  doc["regions"] = g.region_names;
  doc["vertices"] = Json::array();
  for (const auto& v : g.vertices) doc["vertices"].push_back({{"id", v.name}, {"w", v.w_member}});
  doc["edges"] = Json::array();
  for (const auto& e : g.edges) {
    Json je = {{"id", e.name}, {"from", g.vertices[e.tail].name}, {"to", g.vertices[e.head].name}};
    if (e.region) je["region"] = g.region_names[*e.region];
    doc["edges"].push_back(std::move(je));
  }
  doc["vertex_map"] = Json::object();
  for (std::size_t v = 0; v < g.vertices.size(); ++v)
    doc["vertex_map"][g.vertices[v].name] = g.vertices[m.vertex_images[v]].name;
  doc["edge_map"] = Json::object();
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    Json steps = Json::array();
    for (const auto& s : m.edge_images[e]) steps.push_back(format_step(g, s));
    doc["edge_map"][g.edges[e].name] = std::move(steps);
  }
  if (macro_edges) doc["macro_edges"] = true;
  return doc;
}

inline Json to_json(const DirectGraphSpec& spec) {
  auto doc = to_json(spec.graph, spec.map, spec.name, spec.macro_edges);
  if (!spec.provenance.empty()) doc["provenance"] = spec.provenance;
  return doc;
}

inline Json to_json(const GradedMatrixFamily& fam) {
  Json doc;
  doc["schema"] = kSchemaVersion;
  doc["kind"] = "lefschetz_family";
  doc["regions"] = fam.regions;
  doc["degrees"] = Json::array();
  for (const auto& block : fam.degrees) {
    Json mats = Json::object();
    for (std::size_t r = 0; r < fam.regions.size(); ++r)
      mats[fam.regions[r]] = detail::matrix_json(block.matrices[r]);
    doc["degrees"].push_back({{"degree", block.degree}, {"basis", block.basis}, {"matrices", mats}});
  }
  return doc;
}

}  // namespace trellis
