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
using testing_support::analyze_fixture;
using testing_support::load;

namespace {

GradedMatrixFamily single(int degree, std::vector<IntMatrix> mats, std::vector<std::string> regions) {
  GradedMatrixFamily f;
  f.regions = std::move(regions);
  GradedBlock b;
  b.degree = degree;
  for (std::size_t i = 0; i < mats.front().rows(); ++i) b.basis.push_back("x" + std::to_string(i));
  b.matrices = std::move(mats);
  f.degrees.push_back(std::move(b));
  return f;
}

// Block-diagonal sum of two families over the same regions.
GradedMatrixFamily direct_sum(const GradedMatrixFamily& f, const GradedMatrixFamily& g) {
  GradedMatrixFamily out;
  out.regions = f.regions;
  auto blocks = f.degrees;
  for (const auto& b : g.degrees) {
    auto it = std::find_if(blocks.begin(), blocks.end(),
                           [&](const GradedBlock& x) { return x.degree == b.degree; });
    if (it == blocks.end()) {
      blocks.push_back(b);
      continue;
    }
    const std::size_t n1 = it->basis.size(), n2 = b.basis.size();
    for (std::size_t r = 0; r < out.regions.size(); ++r) {
      IntMatrix m(n1 + n2, n1 + n2);
      for (std::size_t i = 0; i < n1; ++i)
        for (std::size_t j = 0; j < n1; ++j) m(i, j) = it->matrices[r](i, j);
      for (std::size_t i = 0; i < n2; ++i)
        for (std::size_t j = 0; j < n2; ++j) m(n1 + i, n1 + j) = b.matrices[r](i, j);
      it->matrices[r] = m;
    }
    for (const auto& name : b.basis) it->basis.push_back(name + "'");
  }
  out.degrees = blocks;
  return out;
}

std::vector<RegionCode> all_codes(std::size_t k, unsigned n) {
  std::vector<RegionCode> out{{}};
  for (unsigned step = 0; step < n; ++step) {
    std::vector<RegionCode> next;
    for (const auto& c : out)
      for (std::size_t r = 0; r < k; ++r) {
        auto d = c;
        d.push_back(r);
        next.push_back(d);
      }
    out = std::move(next);
  }
  return out;
}

}  // namespace

TEST(Lefschetz, TangencyEveryCodeIsForced) {
  const auto fam = *load("tangency").family;
  for (unsigned n = 1; n <= 8; ++n) {
    const auto nc = nonvanishing_codes(fam, n);
    EXPECT_EQ(nc.codes.size(), std::size_t{1} << n) << n;
    for (const auto& r : nc.codes) EXPECT_EQ(abs(r.value), 1);
  }
}

TEST(Lefschetz, TangencySingleLetters) {
  const auto fam = *load("tangency").family;
  EXPECT_EQ(lefschetz_number(fam, {0}).value, -1);
  EXPECT_EQ(lefschetz_number(fam, {1}).value, 1);
  EXPECT_EQ(lefschetz_number(fam, {0, 1}).value, 1);
  EXPECT_EQ(lefschetz_number(fam, {0, 0, 0}).value, -1);
}

TEST(Lefschetz, ZeroFamilyHasNoCodes) {
  const auto fam = single(1, {IntMatrix(2, 2), IntMatrix(2, 2)}, {"A", "B"});
  EXPECT_EQ(lefschetz_number(fam, {0, 1}).value, 0);
  for (unsigned n = 1; n <= 4; ++n) EXPECT_TRUE(nonvanishing_codes(fam, n).codes.empty());
}

TEST(Lefschetz, OneByOneIdentity) {
  const auto fam = single(1, {IntMatrix::identity(1)}, {"A"});
  for (unsigned n = 1; n <= 6; ++n) {
    const auto nc = nonvanishing_codes(fam, n);
    ASSERT_EQ(nc.codes.size(), 1u);
    EXPECT_EQ(nc.codes[0].value, -1);
    EXPECT_EQ(nc.codes[0].code.size(), n);
  }
}

TEST(Lefschetz, DegreeSigns) {
  auto fam = single(0, {IntMatrix::from_rows({{2}})}, {"A"});
  EXPECT_EQ(lefschetz_number(fam, {0}).value, 2);
  fam.degrees.push_back({1, {"y"}, {IntMatrix::from_rows({{3}})}});
  fam.degrees.push_back({2, {"z"}, {IntMatrix::from_rows({{5}})}});
  EXPECT_EQ(lefschetz_number(fam, {0}).value, 2 - 3 + 5);
  EXPECT_EQ(lefschetz_number(fam, {0, 0}).value, 4 - 9 + 25);
}

TEST(Lefschetz, ValidationRejectsBadShapes) {
  auto fam = single(1, {IntMatrix::identity(2), IntMatrix::identity(2)}, {"A", "B"});
  EXPECT_NO_THROW(validate_family(fam));
  fam.degrees[0].matrices[1] = IntMatrix::identity(3);
  EXPECT_THROW(validate_family(fam), DimensionError);
  fam = single(1, {IntMatrix::identity(2)}, {"A", "A"});
  EXPECT_THROW(validate_family(fam), ValidationError);
  fam = single(1, {IntMatrix::identity(2)}, {"A"});
  fam.degrees.push_back(fam.degrees[0]);
  EXPECT_THROW(validate_family(fam), ValidationError);
  EXPECT_THROW(lefschetz_number(single(1, {IntMatrix::identity(1)}, {"A"}), {1}), ValidationError);
}

TEST(Lefschetz, BudgetMarksPartial) {
  const auto fam = *load("tangency").family;
  const auto nc = nonvanishing_codes(fam, 8, 10);
  EXPECT_TRUE(nc.partial);
  EXPECT_LE(nc.examined, 10u);
}

TEST(Lefschetz, AdditiveUnderDirectSum) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n1 = 1 + trial % 3, n2 = 1 + (trial / 3) % 3;
    auto f = single(1 + trial % 2,
                    {testing_support::random_matrix(rng, n1, -2, 2),
                     testing_support::random_matrix(rng, n1, -2, 2)},
                    {"A", "B"});
    auto g = single(1,
                    {testing_support::random_matrix(rng, n2, -2, 2),
                     testing_support::random_matrix(rng, n2, -2, 2)},
                    {"A", "B"});
    const auto h = direct_sum(f, g);
    for (const auto& code : all_codes(2, 3))
      EXPECT_EQ(lefschetz_number(h, code).value,
                lefschetz_number(f, code).value + lefschetz_number(g, code).value);
  }
}

TEST(Lefschetz, CyclicInvariance) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const auto fam = single(1,
                            {testing_support::random_matrix(rng, 3, -2, 2),
                             testing_support::random_matrix(rng, 3, -2, 2),
                             testing_support::random_matrix(rng, 3, -2, 2)},
                            {"A", "B", "C"});
    for (const auto& code : all_codes(3, 4)) {
      auto rotated = code;
      std::rotate(rotated.begin(), rotated.begin() + 1, rotated.end());
      EXPECT_EQ(lefschetz_number(fam, code).value, lefschetz_number(fam, rotated).value);
    }
  }
}

TEST(Lefschetz, PrunedEnumerationMatchesExhaustive) {
  std::mt19937 rng(8);
  for (int trial = 0; trial < 20; ++trial) {
    const auto fam = single(1,
                            {testing_support::random_matrix(rng, 2, -1, 1),
                             testing_support::random_matrix(rng, 2, -1, 1)},
                            {"A", "B"});
    for (unsigned n = 1; n <= 5; ++n) {
      std::vector<RegionCode> expect;
      for (const auto& code : all_codes(2, n))
        if (lefschetz_number(fam, code).value != 0) expect.push_back(code);
      std::vector<RegionCode> got;
      for (const auto& r : nonvanishing_codes(fam, n).codes) got.push_back(r.code);
      EXPECT_EQ(got, expect);
    }
  }
}

TEST(Degree1, AnosovRose) {
  const auto an = analyze_fixture("anosov");
  const auto& d = an.degree1;
  EXPECT_TRUE(d.collapsed.empty());
  EXPECT_EQ(d.full, IntMatrix::from_rows({{1, 0, 0}, {0, 2, -1}, {1, -1, 1}}));
  EXPECT_EQ(d.full.trace(), 4);
  EXPECT_TRUE(d.exact);
  // only the beta row survives in R2
  EXPECT_EQ(lefschetz_number(d.family, {1}).value, -2);
}

TEST(Degree1, IdentityAndConstant) {
  const auto doc = load("anosov");
  const auto& g = doc.graph->graph;
  GraphSelfMap id{{0}, {}};
  for (std::size_t e = 0; e < g.edges.size(); ++e) id.edge_images.push_back({{e, false}});
  EXPECT_EQ(derive_degree1_action(g, id).full, IntMatrix::identity(3));
  GraphSelfMap constant{{0}, {{}, {}, {}}};
  EXPECT_TRUE(derive_degree1_action(g, constant).full.is_zero());
  const auto it2 = analyze_fixture("horseshoe_iterate2");
  EXPECT_TRUE(it2.degree1.full.is_zero());
}

TEST(Degree1, SignedCountsBoundedByUnsigned) {
  for (const char* name : {"horseshoe", "type3", "heteroclinic", "punctured", "anosov"}) {
    const auto an = analyze_fixture(name);
    const auto& d = an.degree1;
    for (std::size_t i = 0; i < d.basis.size(); ++i)
      for (std::size_t j = 0; j < d.basis.size(); ++j)
        EXPECT_LE(abs(d.full(i, j)), an.all.a(d.basis[i], d.basis[j])) << name;
  }
}

TEST(Degree1, RegionRowsPartitionTheMatrix) {
  const auto an = analyze_fixture("heteroclinic");
  const auto& block = an.degree1.family.degrees.at(0);
  IntMatrix sum(an.degree1.basis.size(), an.degree1.basis.size());
  for (const auto& m : block.matrices) sum = sum + m;
  // Untagged basis edges contribute no rows.
  for (std::size_t i = 0; i < an.degree1.basis.size(); ++i) {
    const bool tagged = an.graph.edges[an.degree1.basis[i]].region.has_value();
    for (std::size_t j = 0; j < an.degree1.basis.size(); ++j)
      EXPECT_EQ(sum(i, j), tagged ? an.degree1.full(i, j) : Integer(0));
  }
}

TEST(Degree1, RestrictRegions) {
  const auto fam = *load("tangency").family;
  const auto only = restrict_regions(fam, {0});
  ASSERT_EQ(only.regions, (std::vector<std::string>{"R1"}));
  EXPECT_EQ(lefschetz_number(only, {0, 0}).value, -1);
  EXPECT_EQ(nonvanishing_codes(only, 3).codes.size(), 1u);
}
