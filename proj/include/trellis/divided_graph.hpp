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

// Divided graphs (G, W), graph self-maps given by vertex images and edge-path
// images, the spine of a cut surface, and tightening.

#include <algorithm>
#include <cstddef>
#include <deque>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "trellis/edge_path.hpp"
#include "trellis/error.hpp"
#include "trellis/planar_map.hpp"

namespace trellis {

struct GraphVertex {
  std::string name;
  bool w_member = false;
  std::optional<std::size_t> region;    // region containing a center vertex
  std::optional<std::size_t> crosscut;  // cross-cut collapsed to a W-vertex
};

struct GraphEdge {
  std::string name;
  std::size_t tail = 0;
  std::size_t head = 0;
  std::optional<std::size_t> region;
};

struct HalfEdge {
  std::size_t edge = 0;
  bool at_tail = true;  // false: the edge ends at this vertex

  // Direction that leaves the vertex along this half-edge.
  OrientedEdge outward() const { return {edge, !at_tail}; }
};

struct DividedGraph {
  std::vector<GraphVertex> vertices;
  std::vector<GraphEdge> edges;
  std::vector<std::string> region_names;

  std::size_t tail(OrientedEdge e) const {
    return e.reversed ? edges[e.edge].head : edges[e.edge].tail;
  }
  std::size_t head(OrientedEdge e) const {
    return e.reversed ? edges[e.edge].tail : edges[e.edge].head;
  }

  std::vector<std::vector<HalfEdge>> incidence() const {
    std::vector<std::vector<HalfEdge>> out(vertices.size());
    for (std::size_t e = 0; e < edges.size(); ++e) {
      out[edges[e].tail].push_back({e, true});
      out[edges[e].head].push_back({e, false});
    }
    return out;
  }

  std::size_t w_count() const {
    return static_cast<std::size_t>(std::count_if(
        vertices.begin(), vertices.end(), [](const GraphVertex& v) { return v.w_member; }));
  }

  std::size_t component_count() const {
    std::vector<std::size_t> parent(vertices.size());
    for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = i;
    auto find = [&](std::size_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    std::size_t comps = vertices.size();
    for (const auto& e : edges) {
      const auto a = find(e.tail), b = find(e.head);
      if (a != b) {
        parent[a] = b;
        --comps;
      }
    }
    return comps;
  }

  bool is_tree() const {
    return !vertices.empty() && edges.size() + 1 == vertices.size() && component_count() == 1;
  }

  std::optional<std::size_t> find_edge(const std::string& name) const {
    for (std::size_t e = 0; e < edges.size(); ++e)
      if (edges[e].name == name) return e;
    return std::nullopt;
  }
  std::optional<std::size_t> find_vertex(const std::string& name) const {
    for (std::size_t v = 0; v < vertices.size(); ++v)
      if (vertices[v].name == name) return v;
    return std::nullopt;
  }
};

struct GraphSelfMap {
  std::vector<std::size_t> vertex_images;
  std::vector<EdgePath> edge_images;

  friend bool operator==(const GraphSelfMap&, const GraphSelfMap&) = default;

  std::size_t total_length() const {
    std::size_t n = 0;
    for (const auto& p : edge_images) n += p.size();
    return n;
  }
};

// Every violated well-formedness condition, as readable messages.
inline std::vector<std::string> map_problems(const DividedGraph& g, const GraphSelfMap& m) {
  std::vector<std::string> out;
  if (m.vertex_images.size() != g.vertices.size())
    out.push_back("vertex image count does not match vertex count");
  if (m.edge_images.size() != g.edges.size())
    out.push_back("edge image count does not match edge count");
  if (!out.empty()) return out;
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    if (m.vertex_images[v] >= g.vertices.size()) {
      out.push_back("vertex " + g.vertices[v].name + " maps outside the graph");
      continue;
    }
    if (g.vertices[v].w_member && !g.vertices[m.vertex_images[v]].w_member)
      out.push_back("W-vertex " + g.vertices[v].name + " maps outside W");
  }
  if (!out.empty()) return out;
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    const auto& path = m.edge_images[e];
    const auto from = m.vertex_images[g.edges[e].tail];
    const auto to = m.vertex_images[g.edges[e].head];
    bool ok = true;
    for (const auto& step : path)
      if (step.edge >= g.edges.size()) ok = false;
    if (!ok) {
      out.push_back("image of " + g.edges[e].name + " uses an unknown edge");
      continue;
    }
    std::size_t at = from;
    for (const auto& step : path) {
      if (g.tail(step) != at) ok = false;
      at = g.head(step);
    }
    if (!ok || at != to)
      out.push_back("image of " + g.edges[e].name +
                    " is not a path from the image of its tail to the image of its head");
  }
  return out;
}

inline std::string format_step(const DividedGraph& g, OrientedEdge step) {
  return (step.reversed ? "~" : "") + g.edges[step.edge].name;
}

inline std::string format_path(const DividedGraph& g, const EdgePath& path) {
  if (path.empty()) return ".";
  std::string out;
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (i) out += ' ';
    out += format_step(g, path[i]);
  }
  return out;
}

// Removes non-W vertices of degree one and merges the two edges at non-W
// vertices of degree two, repeating until neither applies. A degree-two vertex
// between edges of different regions is kept.
inline DividedGraph simplify(DividedGraph g) {
  bool changed = true;
  while (changed) {
    changed = false;
    const auto inc = g.incidence();
    for (std::size_t v = 0; v < g.vertices.size() && !changed; ++v) {
      if (g.vertices[v].w_member) continue;
      const auto& he = inc[v];
      if (he.size() == 1) {
        g.edges.erase(g.edges.begin() + static_cast<long>(he[0].edge));
      } else if (he.size() == 2 && he[0].edge != he[1].edge &&
                 g.edges[he[0].edge].region == g.edges[he[1].edge].region) {
        const auto other = [&](const HalfEdge& h) {
          return h.at_tail ? g.edges[h.edge].head : g.edges[h.edge].tail;
        };
        std::size_t a = other(he[0]), b = other(he[1]);
        if (a > b) std::swap(a, b);
        GraphEdge merged{"", a, b, g.edges[he[0].edge].region};
        const auto hi = std::max(he[0].edge, he[1].edge);
        const auto lo = std::min(he[0].edge, he[1].edge);
        g.edges.erase(g.edges.begin() + static_cast<long>(hi));
        g.edges[lo] = merged;
      } else {
        continue;
      }
      // Drop the now isolated vertex and renumber.
      g.vertices.erase(g.vertices.begin() + static_cast<long>(v));
      for (auto& e : g.edges) {
        if (e.tail > v) --e.tail;
        if (e.head > v) --e.head;
      }
      changed = true;
    }
  }
  for (std::size_t e = 0; e < g.edges.size(); ++e) g.edges[e].name = "e" + std::to_string(e);
  return g;
}

// Spine of a disk with cross-cuts: one W-vertex per cross-cut and, for each
// region meeting k >= 2 cross-cuts, a center joined to each of them; then
// degree-two centers are suppressed. Regions meeting one cross-cut retract
// onto it and contribute nothing.
inline DividedGraph spine(const CutSurface& cut) {
  DividedGraph g;
  for (const auto& r : cut.regions) g.region_names.push_back("R" + std::to_string(r.id));
  if (cut.crosscuts.empty()) {
    g.vertices.push_back({"v0", false, cut.regions.empty() ? std::nullopt
                                                           : std::optional<std::size_t>{0},
                          std::nullopt});
    return g;
  }
  std::map<std::size_t, std::size_t> w_of_crosscut;
  for (const auto& c : cut.crosscuts) {
    w_of_crosscut[c.segment] = g.vertices.size();
    g.vertices.push_back({"p" + std::to_string(c.segment), true, std::nullopt, c.segment});
  }
  for (const auto& r : cut.regions) {
    if (r.crosscuts.size() < 2) continue;
    const std::size_t center = g.vertices.size();
    g.vertices.push_back({"v" + std::to_string(r.id), false, r.id, std::nullopt});
    for (auto c : r.crosscuts) g.edges.push_back({"", center, w_of_crosscut.at(c), r.id});
  }
  return simplify(std::move(g));
}

namespace detail {

struct RootedTree {
  std::vector<std::size_t> parent;
  std::vector<OrientedEdge> up;  // step from a vertex to its parent
  std::vector<std::size_t> depth;
};

inline RootedTree root_tree(const DividedGraph& g) {
  RootedTree t;
  const std::size_t n = g.vertices.size();
  constexpr auto none = std::numeric_limits<std::size_t>::max();
  t.parent.assign(n, none);
  t.up.assign(n, {});
  t.depth.assign(n, 0);
  const auto inc = g.incidence();
  std::deque<std::size_t> queue{0};
  t.parent[0] = 0;
  while (!queue.empty()) {
    const auto v = queue.front();
    queue.pop_front();
    for (const auto& h : inc[v]) {
      const auto out = h.outward();
      const auto w = g.head(out);
      if (t.parent[w] != none) continue;
      t.parent[w] = v;
      t.up[w] = out.inverse();
      t.depth[w] = t.depth[v] + 1;
      queue.push_back(w);
    }
  }
  return t;
}

inline EdgePath tree_path(const RootedTree& t, std::size_t from, std::size_t to) {
  EdgePath front, back;
  while (t.depth[from] > t.depth[to]) {
    front.push_back(t.up[from]);
    from = t.parent[from];
  }
  while (t.depth[to] > t.depth[from]) {
    back.push_back(t.up[to].inverse());
    to = t.parent[to];
  }
  while (from != to) {
    front.push_back(t.up[from]);
    from = t.parent[from];
    back.push_back(t.up[to].inverse());
    to = t.parent[to];
  }
  front.insert(front.end(), back.rbegin(), back.rend());
  return front;
}

}  // namespace detail

// On a tree the W-images fix the homotopy class. Non-W vertices start at the
// image of their nearest W-vertex (least id on ties); edges map to the
// geodesic between their endpoint images. `w_act` is indexed by cross-cut.
inline GraphSelfMap derive_tree_map(const DividedGraph& g, const std::vector<std::size_t>& w_act) {
  if (!g.is_tree()) throw AmbiguousMapError("ambiguous homotopy class: supply DirectGraphSpec");
  const std::size_t n = g.vertices.size();
  std::map<std::size_t, std::size_t> w_vertex;
  for (std::size_t v = 0; v < n; ++v)
    if (g.vertices[v].w_member) {
      if (!g.vertices[v].crosscut) throw ValidationError("W-vertex without a cross-cut index");
      w_vertex[*g.vertices[v].crosscut] = v;
    }
  if (w_act.size() != w_vertex.size())
    throw ValidationError("W-action has " + std::to_string(w_act.size()) +
                          " entries for " + std::to_string(w_vertex.size()) + " W-vertices");

  GraphSelfMap m;
  m.vertex_images.assign(n, 0);
  for (const auto& [c, v] : w_vertex) {
    const auto target = w_vertex.find(w_act[c]);
    if (target == w_vertex.end())
      throw ValidationError("W-action sends cross-cut " + std::to_string(c) +
                            " to a cross-cut outside the graph");
    m.vertex_images[v] = target->second;
  }

  const auto inc = g.incidence();
  for (std::size_t v = 0; v < n; ++v) {
    if (g.vertices[v].w_member) continue;
    if (w_vertex.empty()) {
      m.vertex_images[v] = v;
      continue;
    }
    std::vector<std::size_t> dist(n, std::numeric_limits<std::size_t>::max());
    std::deque<std::size_t> queue{v};
    dist[v] = 0;
    std::size_t best = n, best_dist = std::numeric_limits<std::size_t>::max();
    while (!queue.empty()) {
      const auto x = queue.front();
      queue.pop_front();
      if (dist[x] > best_dist) break;
      if (g.vertices[x].w_member && (dist[x] < best_dist || x < best)) {
        best = x;
        best_dist = dist[x];
      }
      for (const auto& h : inc[x]) {
        const auto y = g.head(h.outward());
        if (dist[y] == std::numeric_limits<std::size_t>::max()) {
          dist[y] = dist[x] + 1;
          queue.push_back(y);
        }
      }
    }
    m.vertex_images[v] = m.vertex_images[best];
  }

  const auto tree = detail::root_tree(g);
  m.edge_images.reserve(g.edges.size());
  for (const auto& e : g.edges)
    m.edge_images.push_back(
        detail::tree_path(tree, m.vertex_images[e.tail], m.vertex_images[e.head]));
  return m;
}

struct TightnessWitness {
  enum class Kind { fold, shared_initial_edge };
  Kind kind = Kind::fold;
  std::size_t edge = 0;
  std::size_t other_edge = 0;  // shared_initial_edge only
  std::size_t vertex = 0;      // shared_initial_edge only
  OrientedEdge initial;        // shared_initial_edge only
  std::size_t position = 0;    // fold only: index of the folding step
};

struct TightnessCertificate {
  bool tight = true;
  std::vector<TightnessWitness> witnesses;
};

inline std::string describe(const DividedGraph& g, const TightnessWitness& w) {
  if (w.kind == TightnessWitness::Kind::fold)
    return "image of " + g.edges[w.edge].name + " folds at step " + std::to_string(w.position);
  return "images of " + g.edges[w.edge].name + " and " + g.edges[w.other_edge].name +
         " leave " + g.vertices[w.vertex].name + " along the same edge " +
         format_step(g, w.initial);
}

namespace detail {

// Image of a half-edge read outward from its vertex.
inline std::optional<OrientedEdge> first_step(const GraphSelfMap& m, const HalfEdge& h) {
  const auto& p = m.edge_images[h.edge];
  if (p.empty()) return std::nullopt;
  return h.at_tail ? p.front() : p.back().inverse();
}

}  // namespace detail

// Checks both tightness clauses for the edges tagged with a region in
// `regions`: no such edge image folds, and at each non-W vertex no two of
// those edges start their images along the same edge.
inline TightnessCertificate check_tight(const DividedGraph& g, const GraphSelfMap& m,
                                        const std::vector<std::size_t>& regions) {
  TightnessCertificate cert;
  const std::set<std::size_t> selected(regions.begin(), regions.end());
  auto in_selection = [&](std::size_t e) {
    return g.edges[e].region && selected.count(*g.edges[e].region);
  };
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    if (!in_selection(e)) continue;
    const auto f = first_fold(m.edge_images[e]);
    if (f >= 0) {
      TightnessWitness w;
      w.kind = TightnessWitness::Kind::fold;
      w.edge = e;
      w.position = static_cast<std::size_t>(f);
      cert.witnesses.push_back(w);
    }
  }
  const auto inc = g.incidence();
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    if (g.vertices[v].w_member) continue;
    std::map<OrientedEdge, std::size_t> first_user;
    for (const auto& h : inc[v]) {
      if (!in_selection(h.edge)) continue;
      const auto step = detail::first_step(m, h);
      if (!step) continue;
      const auto [it, inserted] = first_user.emplace(*step, h.edge);
      if (!inserted) {
        TightnessWitness w;
        w.kind = TightnessWitness::Kind::shared_initial_edge;
        w.edge = it->second;
        w.other_edge = h.edge;
        w.vertex = v;
        w.initial = *step;
        cert.witnesses.push_back(w);
      }
    }
  }
  cert.tight = cert.witnesses.empty();
  return cert;
}

struct TightenResult {
  GraphSelfMap map;
  TightnessCertificate certificate;
  std::vector<std::size_t> length_trace;  // total image length before and after each move
  std::size_t moves = 0;
};

// Reduces all edge images, then repeatedly moves the image of a non-W vertex
// v across an edge d whenever more half-edges at v start their images with d
// than not. Each move shortens the total image length by (same - others) > 0,
// so the loop terminates. W-images never move.
inline TightenResult tighten(const DividedGraph& g, const GraphSelfMap& input,
                             const std::vector<std::size_t>& regions) {
  TightenResult result;
  result.map = input;
  for (auto& p : result.map.edge_images) p = reduce(p);
  result.length_trace.push_back(result.map.total_length());

  const auto inc = g.incidence();
  auto& m = result.map;
  bool moved = true;
  while (moved) {
    moved = false;
    for (std::size_t v = 0; v < g.vertices.size(); ++v) {
      if (g.vertices[v].w_member || inc[v].empty()) continue;
      std::map<OrientedEdge, std::size_t> counts;
      for (const auto& h : inc[v])
        if (auto step = detail::first_step(m, h)) ++counts[*step];
      std::optional<OrientedEdge> best;
      std::size_t best_count = 0;
      for (const auto& [step, c] : counts)
        if (c > best_count) {
          best = step;
          best_count = c;
        }
      if (!best || 2 * best_count <= inc[v].size()) continue;

      const OrientedEdge d = *best;
      for (const auto& h : inc[v]) {
        auto& p = m.edge_images[h.edge];
        if (h.at_tail) {
          if (!p.empty() && p.front() == d)
            p.erase(p.begin());
          else
            p.insert(p.begin(), d.inverse());
        } else {
          if (!p.empty() && p.back() == d.inverse())
            p.pop_back();
          else
            p.push_back(d);
        }
      }
      m.vertex_images[v] = g.head(d);
      ++result.moves;
      result.length_trace.push_back(m.total_length());
      moved = true;
    }
  }
  result.certificate = check_tight(g, m, regions);
  return result;
}

// True when every edge image is trivial, i.e. the map is homotopic to a
// constant on each component.
inline bool is_trivial(const GraphSelfMap& m) {
  return std::all_of(m.edge_images.begin(), m.edge_images.end(),
                     [](const EdgePath& p) { return p.empty(); });
}

inline std::vector<std::size_t> all_regions(const DividedGraph& g) {
  std::set<std::size_t> used;
  for (const auto& e : g.edges)
    if (e.region) used.insert(*e.region);
  return {used.begin(), used.end()};
}

}  // namespace trellis
