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

#include <gtest/gtest.h>

#include "test_support.hpp"

using namespace trellis;
using testing_support::load;

namespace {

HomoclinicTrellisSpec spec_of(std::vector<TrellisVertex> v, std::vector<std::int64_t> map) {
  HomoclinicTrellisSpec s;
  s.vertices = std::move(v);
  s.stable_segment_map = std::move(map);
  return s;
}

constexpr auto P = OrientationSign::positive;
constexpr auto N = OrientationSign::negative;

}  // namespace

TEST(Orientation, RoundTripsThroughText) {
  for (auto s : {P, N}) EXPECT_EQ(parse_orientation(to_string(s)), s);
  EXPECT_FALSE(parse_orientation("x").has_value());
  EXPECT_EQ(flipped(P), N);
  EXPECT_EQ(flipped(N), P);
}

TEST(ValidateSpec, HorseshoeHasNoFindings) {
  const auto doc = load("horseshoe");
  const auto rep = validate_spec(*doc.trellis);
  EXPECT_TRUE(rep.ok());
  EXPECT_TRUE(rep.findings.empty());
}

TEST(ValidateSpec, SingleVertexIsValid) {
  const auto rep = validate_spec(spec_of({{0, 0, P}}, {}));
  EXPECT_TRUE(rep.ok());
}

TEST(ValidateSpec, DuplicateUnstableCoordinate) {
  const auto rep = validate_spec(spec_of({{0, 0, P}, {1, 2, N}, {1, 3, P}}, {0, 0}));
  EXPECT_FALSE(rep.ok());
  ASSERT_TRUE(rep.has("u_not_distinct"));
  bool found = false;
  for (const auto& f : rep.findings) found = found || f.message == "unstable coordinates not distinct";
  EXPECT_TRUE(found);
}

TEST(ValidateSpec, DuplicateStableCoordinate) {
  EXPECT_TRUE(validate_spec(spec_of({{0, 0, P}, {1, 1, N}, {2, 1, P}}, {0, 0})).has("s_not_distinct"));
}

TEST(ValidateSpec, BasePointChecks) {
  EXPECT_TRUE(validate_spec(spec_of({{1, 0, P}, {2, 1, N}}, {0})).has("missing_base_point"));
  EXPECT_TRUE(validate_spec(spec_of({{0, 0, N}, {1, 1, N}}, {0})).has("bad_base_point"));
  EXPECT_TRUE(validate_spec(spec_of({{0, 1, P}, {1, 0, N}}, {0})).has("bad_base_point"));
}

TEST(ValidateSpec, EmptyAndSurface) {
  EXPECT_TRUE(validate_spec(spec_of({}, {})).has("no_vertices"));
  auto s = spec_of({{0, 0, P}}, {});
  s.surface = "torus";
  EXPECT_TRUE(validate_spec(s).has("unsupported_surface"));
}

TEST(ValidateSpec, SegmentMapShapeAndRange) {
  const std::vector<TrellisVertex> v = {{0, 0, P}, {1, 3, N}, {2, 2, P}, {3, 1, N}};
  EXPECT_TRUE(validate_spec(spec_of(v, {0, 0})).has("segment_map_size"));
  const auto rep = validate_spec(spec_of(v, {0, 3, 0}));
  ASSERT_TRUE(rep.has("segment_map_range"));
  EXPECT_THROW(w_action(spec_of(v, {0, 3, 0})), ValidationError);
  try {
    w_action(spec_of(v, {0, -1, 0}));
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("image leaves retained trellis"), std::string::npos);
  }
}

TEST(ValidateSpec, BaseSegmentMustStayAtBase) {
  const std::vector<TrellisVertex> v = {{0, 0, P}, {1, 3, N}, {2, 2, P}, {3, 1, N}};
  EXPECT_TRUE(validate_spec(spec_of(v, {1, 0, 0})).has("base_segment_not_invariant"));
}

TEST(ValidateSpec, NonContractingCycle) {
  const std::vector<TrellisVertex> v = {{0, 0, P}, {1, 3, N}, {2, 2, P}, {3, 1, N}};
  EXPECT_TRUE(validate_spec(spec_of(v, {0, 2, 1})).has("not_contracting"));
}

TEST(ValidateSpec, VertexOrbitChecks) {
  auto s = *load("horseshoe").trellis;
  s.vertex_orbit = {{1, 3}, {1, 4}};
  EXPECT_TRUE(validate_spec(s).has("vertex_orbit_duplicate"));
  s.vertex_orbit = {{1, 42}};
  EXPECT_TRUE(validate_spec(s).has("vertex_orbit_unknown"));
  s.vertex_orbit = {{6, 1}};
  EXPECT_TRUE(validate_spec(s).has("vertex_orbit_inconsistent"));
}

TEST(ValidateSpec, LabelOrderedMapsPassWithWarnings) {
  auto hs = *load("horseshoe").trellis;
  hs.vertex_orbit.clear();
  hs.stable_segment_map = {0, 3, 3, 0, 0, 3, 4};
  auto rep = validate_spec(hs);
  EXPECT_TRUE(rep.ok());
  EXPECT_TRUE(rep.has("segment_map_not_monotone"));
  EXPECT_EQ(w_action(hs), (std::vector<std::size_t>{0, 3, 3, 0, 0, 3, 4}));

  auto t3 = *load("type3").trellis;
  t3.vertex_orbit.clear();
  t3.stable_segment_map = {0, 3, 3, 4, 0, 0, 3, 5, 7};
  rep = validate_spec(t3);
  EXPECT_TRUE(rep.ok());
  EXPECT_GT(rep.count(Severity::warning), 0u);
}

TEST(ValidateSpec, IsDeterministic) {
  auto s = *load("type3").trellis;
  s.stable_segment_map = {0, 3, 3, 4, 0, 0, 3, 5, 7};
  const auto a = validate_spec(s), b = validate_spec(s);
  ASSERT_EQ(a.findings.size(), b.findings.size());
  for (std::size_t i = 0; i < a.findings.size(); ++i) {
    EXPECT_EQ(a.findings[i].code, b.findings[i].code);
    EXPECT_EQ(a.findings[i].element, b.findings[i].element);
  }
}

TEST(StableSegments, CountsAndEndpoints) {
  const auto hs = *load("horseshoe").trellis;
  const auto segs = stable_segments(hs);
  ASSERT_EQ(segs.size(), 7u);
  for (std::size_t i = 0; i < segs.size(); ++i) {
    EXPECT_EQ(segs[i].index, i);
    EXPECT_EQ(segs[i].lower.s, static_cast<int>(i));
    EXPECT_EQ(segs[i].upper.s, static_cast<int>(i) + 1);
  }
  EXPECT_EQ(stable_segments(*load("type3").trellis).size(), 9u);
  EXPECT_TRUE(stable_segments(spec_of({{0, 0, P}}, {})).empty());
}

TEST(WAction, FixtureMapsReturnedUnchanged) {
  EXPECT_EQ(w_action(*load("horseshoe").trellis),
            (std::vector<std::size_t>{0, 0, 0, 1, 2, 2, 2}));
  EXPECT_EQ(w_action(*load("type3").trellis),
            (std::vector<std::size_t>{0, 0, 0, 1, 2, 3, 4, 4, 4}));
  EXPECT_EQ(w_action(*load("horseshoe_iterate2").trellis), std::vector<std::size_t>(7, 0));
}

TEST(WAction, IteratesIntoBaseSegment) {
  for (int n = 2; n <= 10; ++n) {
    const auto s = make_type_n(n);
    const auto w = w_action(s);
    const auto base = base_segments(s);
    for (std::size_t i = 0; i < w.size(); ++i) {
      std::size_t cur = i;
      for (std::size_t k = 0; k < w.size(); ++k) cur = w[cur];
      EXPECT_NE(std::find(base.begin(), base.end(), cur), base.end());
    }
  }
}

TEST(TypeN, GeneratorValidatesAndMatchesFixtures) {
  for (int n = 2; n <= 10; ++n) {
    const auto s = make_type_n(n);
    EXPECT_EQ(s.vertices.size(), static_cast<std::size_t>(2 * n + 4));
    EXPECT_TRUE(validate_spec(s).findings.empty()) << "n=" << n;
  }
  const auto t3 = *load("type3").trellis;
  const auto g3 = make_type_n(3);
  ASSERT_EQ(t3.vertices.size(), g3.vertices.size());
  for (std::size_t i = 0; i < t3.vertices.size(); ++i) {
    EXPECT_EQ(t3.vertices[i].u, g3.vertices[i].u);
    EXPECT_EQ(t3.vertices[i].s, g3.vertices[i].s);
    EXPECT_EQ(t3.vertices[i].orient, g3.vertices[i].orient);
  }
  EXPECT_EQ(t3.stable_segment_map, g3.stable_segment_map);
  EXPECT_EQ(make_type_n(2).vertices.size(), load("horseshoe").trellis->vertices.size());
  EXPECT_THROW(make_type_n(1), ValidationError);
}

TEST(Sorting, BothOrdersPermuteTheSameVertices) {
  const auto s = *load("type3").trellis;
  auto a = sorted_by_u(s), b = sorted_by_s(s);
  auto key = [](const TrellisVertex& v) { return std::tuple(v.u, v.s); };
  std::sort(b.begin(), b.end(), [&](auto& x, auto& y) { return key(x) < key(y); });
  std::sort(a.begin(), a.end(), [&](auto& x, auto& y) { return key(x) < key(y); });
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(key(a[i]), key(b[i]));
}
