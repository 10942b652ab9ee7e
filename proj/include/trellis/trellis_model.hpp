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

// Combinatorial trellis descriptions: (u, s, orientation) coordinates for the
// intersection points of one unstable and one stable arc through a saddle p,
// together with the action of the map on the stable minimal segments.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "trellis/error.hpp"

namespace trellis {

enum class OrientationSign { positive, negative };

inline std::string_view to_string(OrientationSign s) {
  return s == OrientationSign::positive ? "+" : "-";
}

inline std::optional<OrientationSign> parse_orientation(std::string_view text) {
  if (text == "+") return OrientationSign::positive;
  if (text == "-") return OrientationSign::negative;
  return std::nullopt;
}

inline OrientationSign flipped(OrientationSign s) {
  return s == OrientationSign::positive ? OrientationSign::negative
                                        : OrientationSign::positive;
}

struct TrellisVertex {
  int u = 0;  // signed position along the unstable arc, p at 0
  int s = 0;  // signed position along the stable arc, p at 0
  OrientationSign orient = OrientationSign::positive;

  friend bool operator==(const TrellisVertex&, const TrellisVertex&) = default;
};

inline std::string to_string(const TrellisVertex& v) {
  return "(" + std::to_string(v.u) + "," + std::to_string(v.s) + "," +
         std::string(to_string(v.orient)) + ")";
}

struct HomoclinicTrellisSpec {
  std::string name;
  std::string provenance;
  std::string surface = "sphere";
  std::vector<TrellisVertex> vertices;
  // Entry i is the image of stable minimal segment i (stable order). Kept
  // signed so that out-of-range input can be reported instead of wrapped.
  std::vector<std::int64_t> stable_segment_map;
  // Optional (u_from, u_to) pairs: f sends the vertex at u_from to the
  // vertex at u_to.
  std::vector<std::pair<int, int>> vertex_orbit;
};

enum class Severity { error, warning };

inline std::string_view to_string(Severity s) {
  return s == Severity::error ? "error" : "warning";
}

struct Finding {
  Severity severity = Severity::error;
  std::string code;
  std::string message;
  std::string element;
};

struct ValidationReport {
  std::vector<Finding> findings;

  bool ok() const {
    return std::none_of(findings.begin(), findings.end(), [](const Finding& f) {
      return f.severity == Severity::error;
    });
  }

  std::size_t count(Severity s) const {
    return static_cast<std::size_t>(std::count_if(
        findings.begin(), findings.end(),
        [s](const Finding& f) { return f.severity == s; }));
  }

  bool has(std::string_view code) const {
    return std::any_of(findings.begin(), findings.end(),
                       [code](const Finding& f) { return f.code == code; });
  }

  void add(Severity sev, std::string code, std::string message,
           std::string element = {}) {
    findings.push_back(
        {sev, std::move(code), std::move(message), std::move(element)});
  }
};

struct StableSegment {
  std::size_t index = 0;
  TrellisVertex lower;  // endpoint with the smaller stable coordinate
  TrellisVertex upper;
};

inline std::vector<TrellisVertex> sorted_by_s(const HomoclinicTrellisSpec& spec) {
  auto v = spec.vertices;
  std::sort(v.begin(), v.end(),
            [](const TrellisVertex& a, const TrellisVertex& b) { return a.s < b.s; });
  return v;
}

inline std::vector<TrellisVertex> sorted_by_u(const HomoclinicTrellisSpec& spec) {
  auto v = spec.vertices;
  std::sort(v.begin(), v.end(),
            [](const TrellisVertex& a, const TrellisVertex& b) { return a.u < b.u; });
  return v;
}

// Components of the retained stable arc minus the vertices, in stable order.
inline std::vector<StableSegment> stable_segments(const HomoclinicTrellisSpec& spec) {
  std::vector<StableSegment> out;
  const auto by_s = sorted_by_s(spec);
  if (by_s.size() < 2) return out;
  out.reserve(by_s.size() - 1);
  for (std::size_t i = 0; i + 1 < by_s.size(); ++i) out.push_back({i, by_s[i], by_s[i + 1]});
  return out;
}

// Stable segments having p as an endpoint (one for a one-sided arc, two when
// the stable arc extends on both sides of p).
inline std::vector<std::size_t> base_segments(const HomoclinicTrellisSpec& spec) {
  std::vector<std::size_t> out;
  for (const auto& seg : stable_segments(spec))
    if (seg.lower.s == 0 || seg.upper.s == 0) out.push_back(seg.index);
  return out;
}

namespace detail {

inline std::optional<std::size_t> s_rank_of_u(const HomoclinicTrellisSpec& spec, int u) {
  const auto by_s = sorted_by_s(spec);
  for (std::size_t i = 0; i < by_s.size(); ++i)
    if (by_s[i].u == u) return i;
  return std::nullopt;
}

inline bool contiguous(std::vector<int> values) {
  std::sort(values.begin(), values.end());
  for (std::size_t i = 1; i < values.size(); ++i)
    if (values[i] != values[i - 1] + 1) return false;
  return true;
}

inline void check_segment_map(const HomoclinicTrellisSpec& spec, ValidationReport& report) {
  const std::size_t k = spec.vertices.size() >= 1 ? spec.vertices.size() - 1 : 0;
  const auto& map = spec.stable_segment_map;
  if (map.size() != k) {
    report.add(Severity::error, "segment_map_size",
               "stable_segment_map has " + std::to_string(map.size()) +
                   " entries but the trellis has " + std::to_string(k) +
                   " stable minimal segments",
               "stable_segment_map");
    return;
  }
  bool in_range = true;
  for (std::size_t i = 0; i < k; ++i) {
    if (map[i] < 0 || static_cast<std::size_t>(map[i]) >= k) {
      report.add(Severity::error, "segment_map_range",
                 "image leaves retained trellis (maps into dropped end)",
                 "stable_segment_map[" + std::to_string(i) + "]");
      in_range = false;
    }
  }
  if (!in_range || k == 0) return;

  const auto base = base_segments(spec);
  const std::set<std::size_t> base_set(base.begin(), base.end());
  for (auto b : base) {
    if (!base_set.count(static_cast<std::size_t>(map[b])))
      report.add(Severity::error, "base_segment_not_invariant",
                 "segment adjacent to p must map to a segment adjacent to p",
                 "stable_segment_map[" + std::to_string(b) + "]");
  }
  for (std::size_t i = 0; i < k; ++i) {
    std::size_t cur = i;
    bool reached = base_set.count(cur) > 0;
    for (std::size_t step = 0; step < k && !reached; ++step) {
      cur = static_cast<std::size_t>(map[cur]);
      reached = base_set.count(cur) > 0;
    }
    if (!reached)
      report.add(Severity::error, "not_contracting",
                 "iterating the segment map from this segment never reaches a "
                 "segment adjacent to p",
                 "segment " + std::to_string(i));
  }

  bool up = false, down = false;
  for (std::size_t i = 0; i + 1 < k; ++i) {
    const auto d = map[i + 1] - map[i];
    if (d > 0) up = true;
    if (d < 0) down = true;
    if (d > 1 || d < -1)
      report.add(Severity::warning, "segment_map_discontinuous",
                 "consecutive segments share a vertex but their images are "
                 "neither equal nor adjacent; no injective map of the stable "
                 "arc realizes this action",
                 "segments " + std::to_string(i) + "," + std::to_string(i + 1));
  }
  if (up && down)
    report.add(Severity::warning, "segment_map_not_monotone",
               "segment map is not monotone in stable order; indices may be "
               "labels rather than stable positions",
               "stable_segment_map");
}

inline void check_vertex_orbit(const HomoclinicTrellisSpec& spec, ValidationReport& report) {
  const std::size_t k = spec.vertices.size() >= 1 ? spec.vertices.size() - 1 : 0;
  const bool map_usable = spec.stable_segment_map.size() == k &&
                          std::all_of(spec.stable_segment_map.begin(),
                                      spec.stable_segment_map.end(), [k](std::int64_t x) {
                                        return x >= 0 && static_cast<std::size_t>(x) < k;
                                      });
  std::set<int> seen_sources;
  for (const auto& [from, to] : spec.vertex_orbit) {
    const std::string element =
        "vertex_orbit [" + std::to_string(from) + "," + std::to_string(to) + "]";
    if (!seen_sources.insert(from).second) {
      report.add(Severity::error, "vertex_orbit_duplicate",
                 "vertex has more than one recorded image", element);
      continue;
    }
    const auto a = s_rank_of_u(spec, from);
    const auto b = s_rank_of_u(spec, to);
    if (!a || !b) {
      report.add(Severity::error, "vertex_orbit_unknown",
                 "vertex_orbit refers to an unstable coordinate with no vertex", element);
      continue;
    }
    const auto by_s = sorted_by_s(spec);
    if (by_s[*a].orient != by_s[*b].orient)
      report.add(Severity::warning, "vertex_orbit_flips_orientation",
                 "image vertex has the opposite crossing orientation", element);
    if (!map_usable) continue;
    std::set<std::int64_t> allowed;
    if (*b >= 1) allowed.insert(static_cast<std::int64_t>(*b) - 1);
    if (*b < k) allowed.insert(static_cast<std::int64_t>(*b));
    std::vector<std::size_t> adjacent;
    if (*a >= 1) adjacent.push_back(*a - 1);
    if (*a < k) adjacent.push_back(*a);
    for (auto j : adjacent) {
      if (!allowed.count(spec.stable_segment_map[j])) {
        report.add(Severity::error, "vertex_orbit_inconsistent",
                   "segment " + std::to_string(j) + " is adjacent to the source vertex but "
                   "its image is not adjacent to the image vertex",
                   element);
      }
    }
  }
}

}  // namespace detail

// Checks every combinatorial invariant of the description. Errors are
// returned as data; the caller decides whether to proceed.
inline ValidationReport validate_spec(const HomoclinicTrellisSpec& spec) {
  ValidationReport report;
  if (spec.surface != "sphere")
    report.add(Severity::error, "unsupported_surface",
               "only homoclinic trellises on the sphere have a coordinate "
               "description; use a graph input instead",
               "surface");
  if (spec.vertices.empty()) {
    report.add(Severity::error, "no_vertices", "trellis needs at least the saddle point p",
               "vertices");
    return report;
  }

  std::vector<int> us, ss;
  for (const auto& v : spec.vertices) {
    us.push_back(v.u);
    ss.push_back(v.s);
  }
  const bool u_distinct = std::set<int>(us.begin(), us.end()).size() == us.size();
  const bool s_distinct = std::set<int>(ss.begin(), ss.end()).size() == ss.size();
  if (!u_distinct)
    report.add(Severity::error, "u_not_distinct", "unstable coordinates not distinct",
               "vertices");
  if (!s_distinct)
    report.add(Severity::error, "s_not_distinct", "stable coordinates not distinct",
               "vertices");

  const auto p = std::find_if(spec.vertices.begin(), spec.vertices.end(),
                              [](const TrellisVertex& v) { return v.u == 0; });
  if (p == spec.vertices.end()) {
    report.add(Severity::error, "missing_base_point", "no vertex with u = 0", "vertices");
  } else if (p->s != 0 || p->orient != OrientationSign::positive) {
    report.add(Severity::error, "bad_base_point",
               "the vertex with u = 0 is p and must be (0,0,+)", to_string(*p));
  }
  if (!u_distinct || !s_distinct) return report;

  if (!detail::contiguous(us) || !detail::contiguous(ss))
    report.add(Severity::warning, "coordinates_not_contiguous",
               "coordinates skip values; only their order is used", "vertices");

  detail::check_segment_map(spec, report);
  detail::check_vertex_orbit(spec, report);
  return report;
}

// Action of the map on W (one W-vertex per stable minimal segment).
inline std::vector<std::size_t> w_action(const HomoclinicTrellisSpec& spec) {
  const auto report = validate_spec(spec);
  for (const auto& f : report.findings) {
    if (f.severity != Severity::error) continue;
    throw ValidationError(f.message + " (" + f.element + ")");
  }
  std::vector<std::size_t> out;
  out.reserve(spec.stable_segment_map.size());
  for (auto x : spec.stable_segment_map) out.push_back(static_cast<std::size_t>(x));
  return out;
}

// The type-n member of the family of simple trellises (n = 2 is the
// horseshoe). The map sends the vertex at u = 1 to the vertex at u = 3 and
// shifts stable positions 3..2n down by two.
inline HomoclinicTrellisSpec make_type_n(int n) {
  if (n < 2) throw ValidationError("type-n trellis needs n >= 2");
  using enum OrientationSign;
  auto sign_of = [](int u) { return u % 2 == 0 ? positive : negative; };
  HomoclinicTrellisSpec spec;
  spec.name = "type-" + std::to_string(n);
  spec.provenance = "generated simple trellis of type " + std::to_string(n);
  spec.vertices.push_back({0, 0, positive});
  spec.vertices.push_back({1, 2 * n + 3, negative});
  for (int k = 2; k <= 2 * n; ++k) spec.vertices.push_back({k, 2 * n + 2 - k, sign_of(k)});
  spec.vertices.push_back({2 * n + 1, 2 * n + 1, negative});
  spec.vertices.push_back({2 * n + 2, 2 * n + 2, positive});
  spec.vertices.push_back({2 * n + 3, 1, negative});

  spec.stable_segment_map = {0, 0, 0};
  for (int j = 1; j <= 2 * n - 3; ++j) spec.stable_segment_map.push_back(j);
  for (int j = 0; j < 3; ++j) spec.stable_segment_map.push_back(2 * n - 2);

  spec.vertex_orbit.push_back({1, 3});
  for (int k = 2; k <= 2 * n - 2; ++k) spec.vertex_orbit.push_back({k, k + 2});
  spec.vertex_orbit.push_back({2 * n - 1, 2 * n + 3});
  return spec;
}

}  // namespace trellis
