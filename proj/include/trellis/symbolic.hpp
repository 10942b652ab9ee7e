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

// Transition matrices of graph self-maps, region codes, periodic counts,
// spectral radius with an exact bracket, and the edge shift.

#include <algorithm>
#include <cmath>
#include <limits>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "trellis/divided_graph.hpp"
#include "trellis/matrix.hpp"
#include "trellis/polynomial.hpp"

namespace trellis {

using RegionCode = std::vector<std::size_t>;

struct TransitionSystem {
  std::vector<std::string> edge_names;
  std::vector<std::optional<std::size_t>> edge_region;
  std::vector<std::string> region_names;
  std::vector<std::size_t> selection;  // the region set, sorted
  IntMatrix a;                         // full transition matrix
  std::map<std::size_t, IntMatrix> by_region;  // P_R A for every region tag in use
  IntMatrix a_selected;                // sum of P_R A over the selection
  std::vector<std::size_t> fixed_edges;  // edges whose image is exactly themselves

  std::size_t size() const { return edge_names.size(); }

  // Edges tagged with a selected region; rows and columns shown in displays.
  std::vector<std::size_t> display_indices() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < edge_region.size(); ++i)
      if (edge_region[i] && std::binary_search(selection.begin(), selection.end(), *edge_region[i]))
        out.push_back(i);
    return out;
  }

  IntMatrix projection(std::size_t region) const {
    IntMatrix p(size(), size());
    for (std::size_t i = 0; i < size(); ++i)
      if (edge_region[i] == region) p(i, i) = 1;
    return p;
  }

  const IntMatrix& region_matrix(std::size_t region) const {
    const auto it = by_region.find(region);
    if (it == by_region.end())
      throw ValidationError("unknown region " + (region < region_names.size()
                                                     ? region_names[region]
                                                     : std::to_string(region)));
    return it->second;
  }
};

// Builds P_R A and their sum from a bare matrix with edge tags; no selection
// means every region tag that occurs.
inline TransitionSystem make_system(IntMatrix a, std::vector<std::string> edge_names,
                                    std::vector<std::optional<std::size_t>> edge_region,
                                    std::vector<std::string> region_names,
                                    std::optional<std::vector<std::size_t>> chosen = {}) {
  if (!a.is_square() || a.rows() != edge_names.size() || edge_region.size() != edge_names.size())
    throw DimensionError("transition matrix does not match the edge list");
  TransitionSystem ts;
  ts.edge_names = std::move(edge_names);
  ts.edge_region = std::move(edge_region);
  ts.region_names = std::move(region_names);
  ts.a = std::move(a);
  std::set<std::size_t> used;
  for (const auto& r : ts.edge_region)
    if (r) {
      if (*r >= ts.region_names.size()) throw ValidationError("edge tagged with an undeclared region");
      used.insert(*r);
    }
  std::vector<std::size_t> selection =
      chosen ? *chosen : std::vector<std::size_t>(used.begin(), used.end());
  std::sort(selection.begin(), selection.end());
  selection.erase(std::unique(selection.begin(), selection.end()), selection.end());
  for (auto r : selection)
    if (r >= ts.region_names.size()) throw ValidationError("selected region does not exist");
  ts.selection = std::move(selection);
  for (auto r : used) ts.by_region.emplace(r, ts.projection(r) * ts.a);
  ts.a_selected = IntMatrix(ts.size(), ts.size());
  for (auto r : ts.selection) {
    const auto it = ts.by_region.find(r);
    if (it != ts.by_region.end()) ts.a_selected = ts.a_selected + it->second;
  }
  return ts;
}

// A[i][j] counts the traversals of edge j, in either direction, by the image
// of edge i.
inline TransitionSystem transition(const DividedGraph& g, const GraphSelfMap& m,
                                   std::optional<std::vector<std::size_t>> selection = {}) {
  const std::size_t n = g.edges.size();
  IntMatrix a(n, n);
  std::vector<std::size_t> fixed;
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& step : m.edge_images[i]) a(i, step.edge) += 1;
    const auto& img = m.edge_images[i];
    if (img.size() == 1 && img[0] == OrientedEdge{i, false}) fixed.push_back(i);
  }
  std::vector<std::string> names;
  std::vector<std::optional<std::size_t>> tags;
  for (const auto& e : g.edges) {
    names.push_back(e.name);
    tags.push_back(e.region);
  }
  auto ts = make_system(std::move(a), std::move(names), std::move(tags), g.region_names,
                        std::move(selection));
  ts.fixed_edges = std::move(fixed);
  return ts;
}

inline std::string format_code(const TransitionSystem& ts, const RegionCode& code) {
  std::string out;
  for (auto r : code) out += ts.region_names.at(r);
  return out;
}

// Reads "R1R2R2", tolerating spaces and commas between letters. Longest
// region name wins at each position.
inline RegionCode parse_code(const std::vector<std::string>& region_names, const std::string& text) {
  RegionCode code;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (text[pos] == ' ' || text[pos] == ',') {
      ++pos;
      continue;
    }
    std::size_t best = region_names.size(), best_len = 0;
    for (std::size_t r = 0; r < region_names.size(); ++r) {
      const auto& name = region_names[r];
      if (name.size() > best_len && text.compare(pos, name.size(), name) == 0) {
        best = r;
        best_len = name.size();
      }
    }
    if (best == region_names.size())
      throw ValidationError("unknown region letter at \"" + text.substr(pos) + "\"");
    code.push_back(best);
    pos += best_len;
  }
  if (code.empty()) throw ValidationError("empty region code");
  return code;
}

inline IntMatrix word_matrix(const TransitionSystem& ts, const RegionCode& code) {
  if (code.empty()) throw ValidationError("empty region code");
  IntMatrix out = ts.region_matrix(code[0]);
  for (std::size_t k = 1; k < code.size(); ++k) out = out * ts.region_matrix(code[k]);
  return out;
}

struct CodeCount {
  RegionCode code;
  Integer trace;
};

struct PeriodicCounts {
  unsigned length = 0;
  std::vector<CodeCount> entries;  // codes with nonzero trace, lexicographic
  Integer total = 0;               // sum of the listed traces
  Integer expected = 0;            // Tr(A_sel^n), computed directly
  bool partial = false;
  std::size_t products = 0;
};

inline constexpr const char* kVertexCaveat =
    "counts are valid up to a vertex-correction constant independent of n";

// Depth-first over codes of length n in the selection alphabet; branches whose
// partial product vanishes are cut. `budget` caps the number of products.
inline PeriodicCounts periodic_counts(const TransitionSystem& ts, unsigned n,
                                      std::size_t budget = 1000000) {
  if (n < 1) throw ValidationError("code length must be at least 1");
  PeriodicCounts out;
  out.length = n;
  out.expected = power(ts.a_selected, n).trace();
  const auto& alphabet = ts.selection;
  RegionCode code;
  auto visit = [&](auto&& self, const IntMatrix& product) -> void {
    if (out.partial) return;
    if (code.size() == n) {
      const Integer t = product.trace();
      if (t != 0) {
        out.entries.push_back({code, t});
        out.total += t;
      }
      return;
    }
    for (auto r : alphabet) {
      if (out.products >= budget) {
        out.partial = true;
        return;
      }
      ++out.products;
      const auto it = ts.by_region.find(r);
      if (it == ts.by_region.end()) continue;
      IntMatrix next = code.empty() ? it->second : product * it->second;
      if (next.is_zero()) continue;
      code.push_back(r);
      self(self, next);
      code.pop_back();
    }
  };
  visit(visit, IntMatrix());
  return out;
}

// Strongly connected components of the digraph with an arc i -> j when
// M[i][j] != 0, each sorted, listed by least member.
inline std::vector<std::vector<std::size_t>> strong_components(const IntMatrix& m) {
  const std::size_t n = m.rows();
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) reach[i][j] = (i == j) || m(i, j) != 0;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (reach[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (reach[k][j]) reach[i][j] = true;
  std::vector<bool> placed(n, false);
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t i = 0; i < n; ++i) {
    if (placed[i]) continue;
    std::vector<std::size_t> comp;
    for (std::size_t j = i; j < n; ++j)
      if (reach[i][j] && reach[j][i]) {
        comp.push_back(j);
        placed[j] = true;
      }
    out.push_back(std::move(comp));
  }
  return out;
}

// True for a component carrying a cycle.
inline bool recurrent(const IntMatrix& m, const std::vector<std::size_t>& comp) {
  return comp.size() > 1 || m(comp[0], comp[0]) != 0;
}

// An irreducible nonnegative integer block has spectral radius above one
// exactly when some row sum inside the block exceeds one.
inline bool expanding_block(const IntMatrix& m, const std::vector<std::size_t>& comp) {
  if (!recurrent(m, comp)) return false;
  for (auto i : comp) {
    Integer s = 0;
    for (auto j : comp) s += m(i, j);
    if (s > 1) return true;
  }
  return false;
}

// Regions tagging an edge of some expanding block of the full matrix.
inline std::vector<std::size_t> expanding_regions(const TransitionSystem& ts) {
  std::set<std::size_t> out;
  for (const auto& comp : strong_components(ts.a))
    if (expanding_block(ts.a, comp))
      for (auto i : comp)
        if (ts.edge_region[i]) out.insert(*ts.edge_region[i]);
  return {out.begin(), out.end()};
}

struct RadiusCertificate {
  Polynomial squarefree;  // square-free part of the characteristic polynomial
  Rational lo = 0;        // the largest real root lies in (lo, hi]
  Rational hi = 0;
  Rational bound = 0;     // 1 + max row sum
};

struct SpectralRadius {
  double value = 0;
  Polynomial char_poly;
  RadiusCertificate certificate;
  std::optional<Integer> exact_integer;
  std::optional<double> power_estimate;  // Collatz-Wielandt midpoint on the dominant block
  bool power_agrees = true;
};

inline double to_double(const Rational& x) { return x.convert_to<double>(); }

inline int sign(const Rational& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

// Re-checks a bracket from scratch: a sign change of the square-free
// polynomial across (lo, hi] (or hi itself a root) and no root above hi.
inline bool verify_certificate(const RadiusCertificate& c) {
  const SturmSequence sturm(c.squarefree);
  if (c.lo == 0 && c.hi == 0) return sturm.count_roots(0, c.bound) == 0;
  const auto p = to_rational(c.squarefree);
  const int s_hi = sign(evaluate(p, c.hi));
  const int s_lo = sign(evaluate(p, c.lo));
  const bool crossing = s_hi == 0 || (s_lo != 0 && s_lo != s_hi);
  return crossing && c.lo < c.hi && sturm.count_roots(c.hi, c.bound) == 0;
}

namespace detail {

// Collatz-Wielandt bracket for the spectral radius of one irreducible block,
// iterating I + B so the block is primitive.
inline std::pair<double, double> collatz_wielandt(const IntMatrix& m,
                                                  const std::vector<std::size_t>& comp) {
  const std::size_t k = comp.size();
  std::vector<double> x(k, 1.0), y(k);
  double lo = 0, hi = 0;
  for (int iter = 0; iter < 5000; ++iter) {
    for (std::size_t i = 0; i < k; ++i) {
      double s = x[i];
      for (std::size_t j = 0; j < k; ++j) s += m(comp[i], comp[j]).convert_to<double>() * x[j];
      y[i] = s;
    }
    lo = std::numeric_limits<double>::infinity();
    hi = 0;
    double norm = 0;
    for (std::size_t i = 0; i < k; ++i) {
      const double r = y[i] / x[i];
      lo = std::min(lo, r);
      hi = std::max(hi, r);
      norm = std::max(norm, y[i]);
    }
    for (std::size_t i = 0; i < k; ++i) x[i] = y[i] / norm;
    if (hi - lo < 1e-13 * hi) break;
  }
  return {lo - 1.0, hi - 1.0};
}

}  // namespace detail

// Largest real root of the characteristic polynomial of a square integer
// matrix, located by Sturm counts on [0, 1 + max row sum] and bisected to
// width below `tol`. For nonnegative matrices this is the spectral radius.
inline SpectralRadius spectral_radius(const IntMatrix& m, double tol = 1e-9) {
  if (!(tol > 0)) throw ValidationError("tolerance must be positive");
  SpectralRadius out;
  out.char_poly = char_poly(m);
  auto& cert = out.certificate;
  cert.squarefree = squarefree_part(out.char_poly);
  cert.bound = Rational(1 + m.max_row_sum());
  const SturmSequence sturm(cert.squarefree);
  if (sturm.count_roots(0, cert.bound) == 0) return out;

  const Rational width(tol);
  Rational lo = 0, hi = cert.bound;
  while (hi - lo >= width || sturm.count_roots(lo, hi) > 1) {
    const Rational mid = (lo + hi) / 2;
    if (sturm.count_roots(mid, hi) > 0)
      lo = mid;
    else
      hi = mid;
  }
  cert.lo = lo;
  cert.hi = hi;
  const auto p = to_rational(cert.squarefree);
  if (evaluate(p, hi) == 0) {
    out.value = to_double(hi);
  } else {
    out.value = to_double((lo + hi) / 2);
  }
  const Integer nearest(static_cast<long long>(std::llround(out.value)));
  if (Rational(nearest) > lo && Rational(nearest) <= hi && evaluate(p, Rational(nearest)) == 0) {
    out.exact_integer = nearest;
    out.value = nearest.convert_to<double>();
  }

  if (m.is_nonnegative()) {
    double best = 0, best_width = 0;
    for (const auto& comp : strong_components(m)) {
      if (!recurrent(m, comp)) continue;
      const auto [l, h] = detail::collatz_wielandt(m, comp);
      if ((l + h) / 2 > best) {
        best = (l + h) / 2;
        best_width = h - l;
      }
    }
    out.power_estimate = best;
    out.power_agrees = std::abs(best - out.value) <= std::max(1e-6, best_width);
  }
  return out;
}

struct EntropyBound {
  SpectralRadius radius;
  double ln = 0;
  double log2 = 0;
  bool certified = true;  // false when the map carries no tightness certificate
  bool positive() const { return ln > 0; }
};

// Radius of the selected-region matrix on its displayed rows and columns.
inline EntropyBound entropy_bound(const TransitionSystem& ts, double tol = 1e-9,
                                  bool certified = true) {
  EntropyBound b;
  b.radius = spectral_radius(ts.a_selected.principal(ts.display_indices()), tol);
  b.certified = certified;
  if (b.radius.value > 1 && !(b.radius.exact_integer && *b.radius.exact_integer == 1)) {
    b.ln = b.radius.exact_integer ? std::log(b.radius.exact_integer->convert_to<double>())
                                  : std::log(b.radius.value);
    b.log2 = b.ln / std::log(2.0);
  }
  return b;
}

struct ShiftArc {
  std::size_t from = 0;
  std::size_t to = 0;
  std::size_t label = 0;  // region of the source edge
};

struct EdgeShift {
  std::vector<std::size_t> nodes;  // edge indices
  std::vector<ShiftArc> arcs;      // one per unit of A_sel[i][j]
};

inline EdgeShift edge_shift(const TransitionSystem& ts) {
  EdgeShift s;
  s.nodes = ts.display_indices();
  for (auto i : s.nodes)
    for (auto j : s.nodes) {
      const auto count = ts.a_selected(i, j).convert_to<std::size_t>();
      for (std::size_t k = 0; k < count; ++k) s.arcs.push_back({i, j, *ts.edge_region[i]});
    }
  return s;
}

}  // namespace trellis
