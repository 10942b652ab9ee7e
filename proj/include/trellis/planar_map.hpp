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

// Rotation-system encoding of the unstable and stable arcs embedded in the
// sphere, face tracing, and the combinatorial cut along the unstable arc.

#include <algorithm>
#include <array>
#include <cstddef>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "trellis/error.hpp"
#include "trellis/trellis_model.hpp"

namespace trellis {

enum class Curve { unstable, stable };
enum class Sense { forward, backward };  // forward runs toward the larger coordinate

inline std::string_view to_string(Curve c) { return c == Curve::unstable ? "U" : "S"; }

struct Dart {
  std::size_t id = 0;
  std::size_t vertex = 0;
  std::size_t edge = 0;
  Curve curve = Curve::unstable;
  Sense sense = Sense::forward;
};

struct MapEdge {
  Curve curve = Curve::unstable;
  std::size_t segment = 0;  // index of the minimal segment along its curve
  std::size_t from = 0;     // endpoint with the smaller coordinate
  std::size_t to = 0;
};

// Darts 2e and 2e+1 belong to edge e: 2e sits at `from`, 2e+1 at `to`.
// Vertex ids are ranks in unstable order.
struct CombinatorialMap {
  std::vector<TrellisVertex> vertices;
  std::vector<MapEdge> edges;
  std::vector<Dart> darts;
  std::vector<std::size_t> involution;
  std::vector<std::size_t> rotation;  // counterclockwise successor at the dart's vertex
  std::vector<std::size_t> rotation_inverse;

  std::size_t vertex_count() const { return vertices.size(); }
  std::size_t edge_count() const { return edges.size(); }
  std::size_t dart_count() const { return darts.size(); }

  // Next dart along the boundary of the face to the left.
  std::size_t face_successor(std::size_t d) const { return rotation_inverse[involution[d]]; }

  std::size_t euler_characteristic(std::size_t faces) const {
    return vertex_count() + faces - edge_count();
  }
};

struct Region {
  std::size_t id = 0;
  std::vector<std::size_t> boundary;            // cyclic dart sequence
  std::vector<std::size_t> incident_crosscuts;  // stable segment indices, sorted
};

namespace detail {

inline void finish_map(CombinatorialMap& m) {
  m.rotation_inverse.assign(m.rotation.size(), 0);
  for (std::size_t d = 0; d < m.rotation.size(); ++d) m.rotation_inverse[m.rotation[d]] = d;
}

}  // namespace detail

// Builds the rotation system without checking the base point, so mirrored or
// partially invalid coordinate sets can still be examined. Coordinates must be
// pairwise distinct.
inline CombinatorialMap build_rotation_system(const std::vector<TrellisVertex>& vertices) {
  CombinatorialMap m;
  const std::size_t n = vertices.size();
  m.vertices = vertices;
  std::sort(m.vertices.begin(), m.vertices.end(),
            [](const TrellisVertex& a, const TrellisVertex& b) { return a.u < b.u; });
  for (std::size_t i = 1; i < n; ++i)
    if (m.vertices[i].u == m.vertices[i - 1].u)
      throw ValidationError("unstable coordinates not distinct");

  std::vector<std::size_t> by_s(n);
  std::iota(by_s.begin(), by_s.end(), std::size_t{0});
  std::sort(by_s.begin(), by_s.end(), [&](std::size_t a, std::size_t b) {
    return m.vertices[a].s < m.vertices[b].s;
  });
  std::vector<std::size_t> s_rank(n);
  for (std::size_t r = 0; r < n; ++r) s_rank[by_s[r]] = r;
  for (std::size_t r = 1; r < n; ++r)
    if (m.vertices[by_s[r]].s == m.vertices[by_s[r - 1]].s)
      throw ValidationError("stable coordinates not distinct");

  if (n < 2) return m;
  for (std::size_t i = 0; i + 1 < n; ++i) m.edges.push_back({Curve::unstable, i, i, i + 1});
  for (std::size_t i = 0; i + 1 < n; ++i)
    m.edges.push_back({Curve::stable, i, by_s[i], by_s[i + 1]});

  const std::size_t unstable_edges = n - 1;
  m.darts.resize(2 * m.edges.size());
  m.involution.resize(m.darts.size());
  for (std::size_t e = 0; e < m.edges.size(); ++e) {
    const auto& edge = m.edges[e];
    m.darts[2 * e] = {2 * e, edge.from, e, edge.curve, Sense::forward};
    m.darts[2 * e + 1] = {2 * e + 1, edge.to, e, edge.curve, Sense::backward};
    m.involution[2 * e] = 2 * e + 1;
    m.involution[2 * e + 1] = 2 * e;
  }

  constexpr std::size_t none = static_cast<std::size_t>(-1);
  m.rotation.assign(m.darts.size(), none);
  for (std::size_t v = 0; v < n; ++v) {
    const std::size_t r = s_rank[v];
    const std::size_t u_out = v + 1 < n ? 2 * v : none;
    const std::size_t u_in = v > 0 ? 2 * (v - 1) + 1 : none;
    const std::size_t s_out = r + 1 < n ? 2 * (unstable_edges + r) : none;
    const std::size_t s_in = r > 0 ? 2 * (unstable_edges + r - 1) + 1 : none;
    std::array<std::size_t, 4> order =
        m.vertices[v].orient == OrientationSign::positive
            ? std::array<std::size_t, 4>{u_out, s_out, u_in, s_in}
            : std::array<std::size_t, 4>{u_out, s_in, u_in, s_out};
    std::vector<std::size_t> present;
    for (auto d : order)
      if (d != none) present.push_back(d);
    for (std::size_t i = 0; i < present.size(); ++i)
      m.rotation[present[i]] = present[(i + 1) % present.size()];
  }
  detail::finish_map(m);
  return m;
}

// Vertices are T^V, edges are the unstable and stable minimal segments.
// Counterclockwise rotation at q is (U-out, S-out, U-in, S-in) for a positive
// crossing and (U-out, S-in, U-in, S-out) for a negative one.
inline CombinatorialMap build_map(const HomoclinicTrellisSpec& spec) {
  const auto report = validate_spec(spec);
  if (!report.ok()) throw ValidationError("trellis description does not validate");
  return build_rotation_system(spec.vertices);
}

// Number of orbits of the face permutation; an empty map has one face.
inline std::size_t count_faces(const CombinatorialMap& m) {
  if (m.darts.empty()) return 1;
  std::vector<bool> seen(m.darts.size(), false);
  std::size_t faces = 0;
  for (std::size_t d = 0; d < m.darts.size(); ++d) {
    if (seen[d]) continue;
    ++faces;
    for (std::size_t x = d; !seen[x]; x = m.face_successor(x)) seen[x] = true;
  }
  return faces;
}

// Checks that the involution and rotation are permutations of the right kind.
inline bool well_formed(const CombinatorialMap& m) {
  const std::size_t n = m.darts.size();
  if (m.involution.size() != n || m.rotation.size() != n || m.rotation_inverse.size() != n)
    return false;
  std::vector<bool> hit(n, false);
  for (std::size_t d = 0; d < n; ++d) {
    const auto a = m.involution[d];
    if (a >= n || a == d || m.involution[a] != d) return false;
    const auto r = m.rotation[d];
    if (r >= n || hit[r] || m.darts[r].vertex != m.darts[d].vertex) return false;
    hit[r] = true;
    if (m.rotation_inverse[r] != d) return false;
  }
  return true;
}

// Faces are orbits of d -> rotation^{-1}(involution(d)), numbered by their
// least dart. Throws EmbeddingError when V - E + F != 2.
inline std::vector<Region> trace_faces(const CombinatorialMap& m) {
  if (!well_formed(m)) throw EmbeddingError("combinatorial map is not well formed");
  std::vector<Region> regions;
  if (m.darts.empty()) {
    if (m.vertex_count() > 1) throw EmbeddingError("embedding convention violated");
    regions.push_back({0, {}, {}});
    return regions;
  }
  std::vector<bool> seen(m.darts.size(), false);
  for (std::size_t d = 0; d < m.darts.size(); ++d) {
    if (seen[d]) continue;
    Region r;
    r.id = regions.size();
    std::set<std::size_t> crosscuts;
    for (std::size_t x = d; !seen[x]; x = m.face_successor(x)) {
      seen[x] = true;
      r.boundary.push_back(x);
      const auto& e = m.edges[m.darts[x].edge];
      if (e.curve == Curve::stable) crosscuts.insert(e.segment);
    }
    r.incident_crosscuts.assign(crosscuts.begin(), crosscuts.end());
    regions.push_back(std::move(r));
  }
  if (m.euler_characteristic(regions.size()) != 2)
    throw EmbeddingError("embedding convention violated: V - E + F = " +
                         std::to_string(static_cast<long long>(m.vertex_count()) -
                                        static_cast<long long>(m.edge_count()) +
                                        static_cast<long long>(regions.size())) +
                         ", expected 2");
  return regions;
}

enum class Side { left, right };

// A point on the boundary of the cut disk: a copy of a vertex on one side of
// the slit. `position` orders points around the boundary circle.
struct BoundaryPoint {
  int u = 0;
  Side side = Side::left;
  std::size_t position = 0;
};

struct Crosscut {
  std::size_t segment = 0;
  std::array<BoundaryPoint, 2> ends;     // lower then upper stable endpoint
  std::array<std::size_t, 2> regions{};  // regions on either side, sorted
};

struct CutRegion {
  std::size_t id = 0;
  std::size_t face = 0;  // face of the combinatorial map it came from
  std::vector<std::size_t> crosscuts;
};

struct CutComponent {
  std::vector<std::size_t> crosscuts;
  std::vector<std::size_t> regions;
};

struct CutSurface {
  std::vector<CutComponent> components;
  std::vector<Crosscut> crosscuts;
  std::vector<CutRegion> regions;
  std::size_t boundary_points = 0;
};

inline bool chords_cross(const Crosscut& a, const Crosscut& b) {
  auto lo = [](const Crosscut& c) {
    return std::min(c.ends[0].position, c.ends[1].position);
  };
  auto hi = [](const Crosscut& c) {
    return std::max(c.ends[0].position, c.ends[1].position);
  };
  const auto a0 = lo(a), a1 = hi(a), b0 = lo(b), b1 = hi(b);
  return (a0 < b0 && b0 < a1 && a1 < b1) || (b0 < a0 && a0 < b1 && b1 < a1);
}

// Slits the sphere along the unstable arc. The disk boundary runs along the
// left side of the slit in increasing u and back along the right side; each
// stable minimal segment becomes a cross-cut and each face a region.
inline CutSurface cut_unstable(const CombinatorialMap& m) {
  const std::size_t n = m.vertex_count();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<std::size_t> degree(n, 0);
  std::size_t unstable_edges = 0;
  for (const auto& e : m.edges) {
    if (e.curve != Curve::unstable) continue;
    ++unstable_edges;
    ++degree[e.from];
    ++degree[e.to];
    const auto a = find(e.from), b = find(e.to);
    if (a == b) throw EmbeddingError("unstable curve not an embedded arc");
    parent[a] = b;
  }
  if (n > 0 && unstable_edges + 1 != n)
    throw EmbeddingError("unstable curve not an embedded arc");
  for (auto d : degree)
    if (d > 2) throw EmbeddingError("unstable curve not an embedded arc");

  const auto faces = trace_faces(m);
  CutSurface cut;
  cut.boundary_points = 2 * n;
  std::vector<std::size_t> face_of_dart(m.dart_count(), 0);
  for (const auto& f : faces) {
    for (auto d : f.boundary) face_of_dart[d] = f.id;
    cut.regions.push_back({f.id, f.id, f.incident_crosscuts});
  }

  auto boundary_point = [&](std::size_t dart) {
    const auto& d = m.darts[dart];
    const auto& v = m.vertices[d.vertex];
    const bool outgoing = d.sense == Sense::forward;
    const bool positive = v.orient == OrientationSign::positive;
    const Side side = (outgoing == positive) ? Side::left : Side::right;
    const std::size_t pos = side == Side::left ? d.vertex : 2 * n - 1 - d.vertex;
    return BoundaryPoint{v.u, side, pos};
  };

  for (std::size_t e = 0; e < m.edge_count(); ++e) {
    if (m.edges[e].curve != Curve::stable) continue;
    Crosscut c;
    c.segment = m.edges[e].segment;
    c.ends = {boundary_point(2 * e), boundary_point(2 * e + 1)};
    c.regions = {face_of_dart[2 * e], face_of_dart[2 * e + 1]};
    if (c.regions[0] == c.regions[1])
      throw EmbeddingError("stable segment " + std::to_string(c.segment) +
                           " borders a single region on both sides");
    if (c.regions[0] > c.regions[1]) std::swap(c.regions[0], c.regions[1]);
    cut.crosscuts.push_back(c);
  }
  std::sort(cut.crosscuts.begin(), cut.crosscuts.end(),
            [](const Crosscut& a, const Crosscut& b) { return a.segment < b.segment; });

  CutComponent disk;
  for (const auto& c : cut.crosscuts) disk.crosscuts.push_back(c.segment);
  for (const auto& r : cut.regions) disk.regions.push_back(r.id);
  cut.components.push_back(std::move(disk));
  return cut;
}

}  // namespace trellis
