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

// Relative Lefschetz numbers of region codes from graded per-region action
// matrices, and the degree-one action of a graph self-map.

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "trellis/divided_graph.hpp"
#include "trellis/matrix.hpp"
#include "trellis/symbolic.hpp"

namespace trellis {

struct GradedBlock {
  int degree = 1;
  std::vector<std::string> basis;
  std::vector<IntMatrix> matrices;  // one per region, in alphabet order
};

struct GradedMatrixFamily {
  std::vector<std::string> regions;
  std::vector<GradedBlock> degrees;
};

inline void validate_family(const GradedMatrixFamily& fam) {
  std::set<std::string> seen;
  for (const auto& r : fam.regions)
    if (!seen.insert(r).second) throw ValidationError("duplicate region " + r);
  std::set<int> degrees;
  for (const auto& block : fam.degrees) {
    if (block.degree < 0) throw ValidationError("negative degree");
    if (!degrees.insert(block.degree).second)
      throw ValidationError("degree " + std::to_string(block.degree) + " given twice");
    if (block.matrices.size() != fam.regions.size())
      throw ValidationError("degree " + std::to_string(block.degree) +
                            " does not give one matrix per region");
    for (const auto& m : block.matrices)
      if (m.rows() != block.basis.size() || m.cols() != block.basis.size())
        throw DimensionError("degree " + std::to_string(block.degree) + " matrix is " +
                             m.shape() + " but the basis has " +
                             std::to_string(block.basis.size()) + " elements");
  }
}

struct LefschetzReport {
  RegionCode code;
  Integer value = 0;
  bool nonzero = false;
};

// Alternating sum over degrees of the trace of the code-ordered product.
inline LefschetzReport lefschetz_number(const GradedMatrixFamily& fam, const RegionCode& code) {
  if (code.empty()) throw ValidationError("empty region code");
  for (auto r : code)
    if (r >= fam.regions.size()) throw ValidationError("unknown region letter in code");
  LefschetzReport rep;
  rep.code = code;
  for (const auto& block : fam.degrees) {
    IntMatrix product = block.matrices.at(code[0]);
    for (std::size_t k = 1; k < code.size(); ++k) product = product * block.matrices.at(code[k]);
    const Integer t = product.trace();
    rep.value += (block.degree % 2 == 0) ? t : Integer(-t);
  }
  rep.nonzero = rep.value != 0;
  return rep;
}

struct NonvanishingCodes {
  unsigned length = 0;
  std::vector<LefschetzReport> codes;
  std::size_t examined = 0;
  bool partial = false;
};

// Every code of length n with nonzero Lefschetz number, lexicographic.
// Prefixes whose products vanish in every degree are skipped; `budget` caps
// the number of matrix products.
inline NonvanishingCodes nonvanishing_codes(const GradedMatrixFamily& fam, unsigned n,
                                            std::size_t budget = 1000000) {
  if (n < 1) throw ValidationError("code length must be at least 1");
  NonvanishingCodes out;
  out.length = n;
  RegionCode code;
  auto visit = [&](auto&& self, const std::vector<IntMatrix>& products) -> void {
    if (out.partial) return;
    if (code.size() == n) {
      LefschetzReport rep;
      rep.code = code;
      for (std::size_t d = 0; d < fam.degrees.size(); ++d) {
        const Integer t = products[d].trace();
        rep.value += (fam.degrees[d].degree % 2 == 0) ? t : Integer(-t);
      }
      rep.nonzero = rep.value != 0;
      if (rep.nonzero) out.codes.push_back(std::move(rep));
      return;
    }
    for (std::size_t r = 0; r < fam.regions.size(); ++r) {
      if (out.examined >= budget) {
        out.partial = true;
        return;
      }
      ++out.examined;
      std::vector<IntMatrix> next;
      bool alive = false;
      for (std::size_t d = 0; d < fam.degrees.size(); ++d) {
        const auto& m = fam.degrees[d].matrices[r];
        next.push_back(code.empty() ? m : products[d] * m);
        alive = alive || !next.back().is_zero();
      }
      if (!alive) continue;
      code.push_back(r);
      self(self, next);
      code.pop_back();
    }
  };
  visit(visit, std::vector<IntMatrix>(fam.degrees.size()));
  return out;
}

// Keeps only the listed regions, in the given order.
inline GradedMatrixFamily restrict_regions(const GradedMatrixFamily& fam,
                                           const std::vector<std::size_t>& keep) {
  GradedMatrixFamily out;
  for (auto r : keep) out.regions.push_back(fam.regions.at(r));
  for (const auto& block : fam.degrees) {
    GradedBlock b;
    b.degree = block.degree;
    b.basis = block.basis;
    for (auto r : keep) b.matrices.push_back(block.matrices.at(r));
    out.degrees.push_back(std::move(b));
  }
  return out;
}

struct Degree1Action {
  GradedMatrixFamily family;
  std::vector<std::size_t> basis;      // graph edges kept as generators
  std::vector<std::size_t> collapsed;  // forest edges collapsed together with W
  IntMatrix full;                      // signed counts over the basis
  // True when no collapsed edge's image crosses a basis edge, so the matrix
  // is the induced action on the quotient.
  bool exact = true;
};

// Kruskal in edge order with all of W merged first; returns the forest.
inline std::vector<std::size_t> default_collapse(const DividedGraph& g) {
  std::vector<std::size_t> parent(g.vertices.size());
  for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = i;
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::optional<std::size_t> w_root;
  for (std::size_t v = 0; v < g.vertices.size(); ++v)
    if (g.vertices[v].w_member) {
      if (w_root)
        parent[find(v)] = find(*w_root);
      else
        w_root = v;
    }
  std::vector<std::size_t> forest;
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    const auto a = find(g.edges[e].tail), b = find(g.edges[e].head);
    if (a == b) continue;
    parent[a] = b;
    forest.push_back(e);
  }
  return forest;
}

// Signed occurrence counts (+1 for e, -1 for ~e) of basis edges in the
// images of basis edges; region matrices keep only that region's rows.
inline Degree1Action derive_degree1_action(const DividedGraph& g, const GraphSelfMap& m,
                                           std::optional<std::vector<std::size_t>> collapse = {}) {
  Degree1Action act;
  act.collapsed = collapse ? *collapse : default_collapse(g);
  std::set<std::size_t> gone(act.collapsed.begin(), act.collapsed.end());
  for (auto e : gone)
    if (e >= g.edges.size()) throw ValidationError("collapse set names an unknown edge");
  std::map<std::size_t, std::size_t> slot;
  for (std::size_t e = 0; e < g.edges.size(); ++e)
    if (!gone.count(e)) {
      slot[e] = act.basis.size();
      act.basis.push_back(e);
    }
  const std::size_t n = act.basis.size();
  act.full = IntMatrix(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (const auto& step : m.edge_images[act.basis[i]]) {
      const auto it = slot.find(step.edge);
      if (it != slot.end()) act.full(i, it->second) += step.reversed ? -1 : 1;
    }
  for (auto e : act.collapsed)
    for (const auto& step : m.edge_images[e])
      if (slot.count(step.edge)) act.exact = false;

  act.family.regions = g.region_names;
  GradedBlock block;
  block.degree = 1;
  for (auto e : act.basis) block.basis.push_back(g.edges[e].name);
  for (std::size_t r = 0; r < g.region_names.size(); ++r) {
    IntMatrix mr(n, n);
    for (std::size_t i = 0; i < n; ++i)
      if (g.edges[act.basis[i]].region == r)
        for (std::size_t j = 0; j < n; ++j) mr(i, j) = act.full(i, j);
    block.matrices.push_back(std::move(mr));
  }
  act.family.degrees.push_back(std::move(block));
  return act;
}

}  // namespace trellis
