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

#include <map>
#include <set>

#include "test_support.hpp"

using namespace trellis;
using testing_support::load;

namespace {

constexpr auto P = OrientationSign::positive;
constexpr auto N = OrientationSign::negative;

void expect_cut_invariants(const CombinatorialMap& m, const CutSurface& cut) {
  const auto faces = trace_faces(m);
  ASSERT_EQ(cut.components.size(), 1u);
  EXPECT_EQ(cut.regions.size(), cut.crosscuts.size() + 1);
  EXPECT_EQ(cut.regions.size(), faces.size());
  std::set<std::size_t> face_ids;
  for (const auto& r : cut.regions) face_ids.insert(r.face);
  EXPECT_EQ(face_ids.size(), faces.size());
  std::size_t incidence = 0;
  for (const auto& r : cut.regions) incidence += r.crosscuts.size();
  EXPECT_EQ(incidence, 2 * cut.crosscuts.size());
  for (const auto& c : cut.crosscuts) EXPECT_NE(c.regions[0], c.regions[1]);
  for (std::size_t i = 0; i < cut.crosscuts.size(); ++i)
    for (std::size_t j = i + 1; j < cut.crosscuts.size(); ++j)
      EXPECT_FALSE(chords_cross(cut.crosscuts[i], cut.crosscuts[j]));
  // Each cross-cut appears in exactly the two regions it separates.
  for (const auto& c : cut.crosscuts)
    for (const auto& r : cut.regions) {
      const bool listed =
          std::find(r.crosscuts.begin(), r.crosscuts.end(), c.segment) != r.crosscuts.end();
      EXPECT_EQ(listed, r.id == c.regions[0] || r.id == c.regions[1]);
    }
}

}  // namespace

TEST(BuildMap, HorseshoeCounts) {
  const auto m = build_map(*load("horseshoe").trellis);
  EXPECT_EQ(m.vertex_count(), 8u);
  EXPECT_EQ(m.edge_count(), 14u);
  EXPECT_TRUE(well_formed(m));
  EXPECT_EQ(count_faces(m), 8u);
  EXPECT_EQ(trace_faces(m).size(), 8u);
}

TEST(BuildMap, TypeThreeCounts) {
  const auto m = build_map(*load("type3").trellis);
  EXPECT_EQ(m.vertex_count(), 10u);
  EXPECT_EQ(m.edge_count(), 18u);
  EXPECT_EQ(trace_faces(m).size(), 10u);
}

TEST(BuildMap, SingleVertexIsEmpty) {
  const auto m = build_rotation_system({{0, 0, P}});
  EXPECT_EQ(m.vertex_count(), 1u);
  EXPECT_EQ(m.edge_count(), 0u);
  EXPECT_EQ(trace_faces(m).size(), 1u);
}

TEST(BuildMap, BigonHasTwoFaces) {
  const auto m = build_rotation_system({{0, 0, P}, {1, 1, N}});
  EXPECT_EQ(m.edge_count(), 2u);
  EXPECT_EQ(trace_faces(m).size(), 2u);
}

TEST(BuildMap, RejectsInvalidSpec) {
  HomoclinicTrellisSpec s;
  s.vertices = {{0, 0, P}, {1, 2, N}, {1, 3, P}};
  s.stable_segment_map = {0, 0};
  EXPECT_THROW(build_map(s), ValidationError);
}

TEST(BuildMap, RotationConventionAtInteriorVertex) {
  const auto m = build_map(*load("horseshoe").trellis);
  for (std::size_t v = 0; v < m.vertex_count(); ++v) {
    std::vector<std::size_t> ring;
    std::size_t start = 0;
    while (m.darts[start].vertex != v) ++start;
    std::size_t d = start;
    do {
      ring.push_back(d);
      d = m.rotation[d];
    } while (d != start);
    if (ring.size() != 4) continue;
    // Rotate so the unstable outgoing dart is first.
    while (!(m.darts[ring[0]].curve == Curve::unstable && m.darts[ring[0]].sense == Sense::forward))
      std::rotate(ring.begin(), ring.begin() + 1, ring.end());
    const bool pos = m.vertices[v].orient == P;
    EXPECT_EQ(m.darts[ring[1]].curve, Curve::stable);
    EXPECT_EQ(m.darts[ring[1]].sense, pos ? Sense::forward : Sense::backward);
    EXPECT_EQ(m.darts[ring[2]].curve, Curve::unstable);
    EXPECT_EQ(m.darts[ring[2]].sense, Sense::backward);
  }
}

TEST(TraceFaces, FlippedVertexBreaksEuler) {
  auto v = load("horseshoe").trellis->vertices;
  v[3].orient = flipped(v[3].orient);
  const auto m = build_rotation_system(v);
  try {
    trace_faces(m);
    FAIL() << "expected an embedding error";
  } catch (const EmbeddingError& e) {
    EXPECT_NE(std::string(e.what()).find("embedding convention violated"), std::string::npos);
  }
}

TEST(TraceFaces, RegionIdsFollowLeastDart) {
  const auto faces = trace_faces(build_map(*load("type3").trellis));
  std::size_t prev = 0;
  for (std::size_t i = 0; i < faces.size(); ++i) {
    EXPECT_EQ(faces[i].id, i);
    const auto least = *std::min_element(faces[i].boundary.begin(), faces[i].boundary.end());
    if (i) {
      EXPECT_GT(least, prev);
    }
    prev = least;
  }
}

TEST(TraceFaces, MirrorImageHasSameFaceCount) {
  for (const char* name : {"horseshoe", "type3", "t1"}) {
    auto v = load(name).trellis->vertices;
    const auto f = count_faces(build_rotation_system(v));
    for (auto& x : v) x.orient = flipped(x.orient);
    EXPECT_EQ(count_faces(build_rotation_system(v)), f) << name;
  }
}

TEST(CutUnstable, HorseshoeDisk) {
  const auto m = build_map(*load("horseshoe").trellis);
  const auto cut = cut_unstable(m);
  EXPECT_EQ(cut.crosscuts.size(), 7u);
  EXPECT_EQ(cut.regions.size(), 8u);
  expect_cut_invariants(m, cut);
}

TEST(CutUnstable, TypeThreeDisk) {
  const auto m = build_map(*load("type3").trellis);
  const auto cut = cut_unstable(m);
  EXPECT_EQ(cut.crosscuts.size(), 9u);
  EXPECT_EQ(cut.regions.size(), 10u);
  expect_cut_invariants(m, cut);
}

TEST(CutUnstable, NoIntersections) {
  const auto cut = cut_unstable(build_rotation_system({{0, 0, P}}));
  EXPECT_EQ(cut.components.size(), 1u);
  EXPECT_TRUE(cut.crosscuts.empty());
  EXPECT_EQ(cut.regions.size(), 1u);
}

TEST(CutUnstable, RejectsClosedUnstableCurve) {
  auto m = build_map(*load("horseshoe").trellis);
  for (auto& e : m.edges)
    if (e.curve == Curve::unstable && e.to == m.vertex_count() - 1) e.to = 0;
  try {
    cut_unstable(m);
    FAIL();
  } catch (const EmbeddingError& e) {
    EXPECT_NE(std::string(e.what()).find("unstable curve not an embedded arc"), std::string::npos);
  }
}

TEST(CutUnstable, RandomMeandersGiveOneDisk) {
  std::mt19937 rng(20260101);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = std::uniform_int_distribution<int>(2, 9)(rng);
    const auto m = build_rotation_system(testing_support::random_meander(rng, n));
    const auto cut = cut_unstable(m);
    EXPECT_EQ(cut.crosscuts.size(), static_cast<std::size_t>(n - 1));
    expect_cut_invariants(m, cut);
  }
}
