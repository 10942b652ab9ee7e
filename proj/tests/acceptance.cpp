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

// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails. Self-contained so it can run without the unit test harness.

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <sstream>

#include "test_support.hpp"

using namespace trellis;
using namespace testing_support;
using Mode = RegionSelection::Mode;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream note;
  std::string failures;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      failures += (failures.empty() ? "" : "; ") + what;
    }
  }
};

Polynomial poly(const std::vector<long long>& descending) {
  return Polynomial::from_descending(descending);
}

bool near(double a, double b, double tol) { return std::abs(a - b) <= tol; }

// Largest real root of a monic cubic by Newton from above.
double cubic_root(double b, double c, double d) {
  long double x = 4;
  for (int i = 0; i < 200; ++i) x -= (x * x * x + b * x * x + c * x + d) / (3 * x * x + 2 * b * x + c);
  return static_cast<double>(x);
}

const double kGolden2 = (3 + std::sqrt(5.0)) / 2;

void horseshoe(Outcome& o) {
  const auto an = analyze_fixture("horseshoe", Mode::expanding);
  o.require(near(an.bound.ln, std::log(2.0), 1e-9), "bound is not ln 2");
  o.require(an.essential_char_poly == poly({1, -2, 0}), "char poly " + to_string(an.essential_char_poly));
  o.note << "bound " << an.bound.ln << ", " << to_string(an.essential_char_poly);
}

void type3(Outcome& o) {
  const auto an = analyze_fixture("type3", Mode::expanding);
  const double root = cubic_root(-1, 0, -2);
  o.require(an.essential_char_poly == poly({1, -1, 0, -2, 0}),
            "char poly " + to_string(an.essential_char_poly));
  o.require(near(an.bound.radius.value, root, 1e-6), "lambda_max off");
  o.require(an.bound.ln >= 0.527 && near(an.bound.ln, 0.5283, 2e-3), "bound off");
  o.note << "lambda_max " << an.bound.radius.value << ", bound " << an.bound.ln;
}

void type_n(Outcome& o) {
  double previous = 0;
  int matched = 0;
  for (int n = 2; n <= 10; ++n) {
    AnalysisOptions opt;
    opt.regions.mode = Mode::expanding;
    const auto an = analyze_trellis(make_type_n(n), opt);
    std::vector<long long> d(static_cast<std::size_t>(n) + 2, 0);
    d[0] = 1;
    d[1] = -1;
    d[static_cast<std::size_t>(n)] = -2;
    const bool match = an.essential_char_poly == poly(d);
    matched += match;
    o.require(match, "n=" + std::to_string(n) + " char poly " + to_string(an.essential_char_poly));
    if (n > 2) o.require(an.bound.radius.value < previous, "not decreasing at n=" + std::to_string(n));
    previous = an.bound.radius.value;
  }
  o.note << matched << " of 9 polynomials match, lambda_max(10) " << previous;
}

void heteroclinic(Outcome& o) {
  const auto an = analyze_fixture("heteroclinic");
  const double root = cubic_root(-1, -1, -1);
  o.require(divides(poly({1, -1, -1, -1}), an.selected_char_poly),
            "char poly " + to_string(an.selected_char_poly));
  o.require(near(an.bound.radius.value, 1.83929, 1e-5) && near(an.bound.radius.value, root, 1e-9),
            "lambda_max off");
  o.require(near(an.bound.ln, 0.6093, 1e-4), "bound off");
  o.note << "lambda_max " << an.bound.radius.value << ", bound " << an.bound.ln;
}

void punctured(Outcome& o) {
  const auto an = analyze_fixture("punctured");
  o.require(divides(poly({1, -3, 1}), an.full_char_poly), "char poly " + to_string(an.full_char_poly));
  o.require(near(an.bound.ln, std::log(kGolden2), 1e-9), "bound off");
  o.note << to_string(an.full_char_poly) << ", bound " << an.bound.ln;
}

void anosov(Outcome& o) {
  const auto an = analyze_fixture("anosov");
  o.require(near(an.bound.radius.value, kGolden2, 1e-9), "lambda_max off");
  o.require(an.degree1.full.trace() == 4, "degree-one trace " + an.degree1.full.trace().str());
  o.note << "lambda_max " << an.bound.radius.value << ", trace " << an.degree1.full.trace().str();
}

void tangency(Outcome& o) {
  const auto fam = *load("tangency").family;
  for (unsigned n = 1; n <= 8; ++n) {
    std::size_t ok = 0;
    for (std::size_t k = 0; k < (std::size_t{1} << n); ++k) {
      RegionCode code;
      for (unsigned i = 0; i < n; ++i) code.push_back((k >> (n - 1 - i)) & 1);
      const auto v = lefschetz_number(fam, code).value;
      if (v == 1 || v == -1) ++ok;
    }
    o.require(ok == (std::size_t{1} << n), "n=" + std::to_string(n) + " has a code with |L| != 1");
    o.require(nonvanishing_codes(fam, n).codes.size() >= (std::size_t{1} << n),
              "n=" + std::to_string(n) + " too few nonvanishing codes");
  }
  o.note << "all codes up to length 8 have |L| = 1";
}

void triviality(Outcome& o) {
  for (const char* name : {"t0", "t1", "horseshoe_iterate2"}) {
    const auto an = analyze_fixture(name);
    o.require(an.trivial, std::string(name) + " not constant");
    o.require(an.bound.ln == 0, std::string(name) + " bound nonzero");
  }
  o.note << "t0, t1, horseshoe_iterate2 constant with bound 0";
}

void properties(Outcome& o) {
  std::mt19937 rng(9);
  // (a) Euler on every generated map.
  for (int t = 0; t < 100; ++t) {
    const auto m = build_rotation_system(random_meander(rng, 2 + t % 12));
    o.require(m.euler_characteristic(trace_faces(m).size()) == 2, "Euler failed on a meander");
  }
  for (int n = 2; n <= 10; ++n) {
    const auto m = build_map(make_type_n(n));
    o.require(m.euler_characteristic(trace_faces(m).size()) == 2, "Euler failed on type-n");
  }
  // (b) trace identity on fixtures and random systems.
  auto trace_identity = [&](const TransitionSystem& ts) {
    IntMatrix sel = IntMatrix::identity(ts.size()), full = sel;
    for (unsigned n = 1; n <= 8; ++n) {
      sel = sel * ts.a_selected;
      full = full * ts.a;
      const auto pc = periodic_counts(ts, n, 10000000);
      if (pc.partial || pc.total != sel.trace() || sel.trace() > full.trace()) return false;
    }
    return true;
  };
  for (const char* name : {"horseshoe", "type3", "heteroclinic", "punctured", "anosov"})
    for (auto mode : {Mode::all, Mode::expanding})
      o.require(trace_identity(analyze_fixture(name, mode).selected),
                std::string("trace identity failed on ") + name);
  for (int t = 0; t < 100; ++t)
    o.require(trace_identity(random_system(rng)), "trace identity failed on a random system");
  // (c) tighten.
  for (int t = 0; t < 100; ++t) {
    const auto g = random_tree(rng, 2 + t % 10);
    const auto m = random_tree_map(rng, g);
    const auto r = tighten(g, m, all_regions(g));
    for (std::size_t k = 1; k < r.length_trace.size(); ++k)
      o.require(r.length_trace[k] < r.length_trace[k - 1], "tighten move did not shorten");
    const auto again = tighten(g, r.map, all_regions(g));
    o.require(again.moves == 0 && again.map == r.map, "tighten not idempotent");
  }
  // (d) reduce.
  for (int t = 0; t < 100; ++t) {
    const auto g = random_tree(rng, 2 + t % 9);
    const auto p = reduce(random_walk(rng, g, 0, t % 20));
    o.require(is_reduced(p) && reduce(p) == p, "reduce not idempotent");
  }
  // (e) certificates.
  for (int t = 0; t < 100; ++t) {
    const auto r = spectral_radius(random_matrix(rng, 1 + t % 5, 0, 3));
    o.require(verify_certificate(r.certificate), "certificate rejected");
  }
  o.note << "Euler, trace identity, tighten, reduce, certificates";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria = {
      {"horseshoe end-to-end", horseshoe},
      {"type-3 end-to-end", type3},
      {"type-n family n=2..10", type_n},
      {"heteroclinic graph", heteroclinic},
      {"punctured surface", punctured},
      {"Anosov rose", anosov},
      {"tangency Lefschetz numbers", tangency},
      {"triviality detection", triviality},
      {"property suite", properties},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].second(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    o.require(secs <= 5, "took longer than 5 s");
    if (!o.pass) ++failures;
    std::cout << "criterion " << i + 1 << " " << (o.pass ? "PASS" : "FAIL") << " "
              << criteria[i].first << " (" << o.note.str() << ", " << secs << " s)"
              << (o.failures.empty() ? "" : " failed: " + o.failures) << "\n";
  }
  return failures == 0 ? 0 : 1;
}
