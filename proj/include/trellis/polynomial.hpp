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

// Integer polynomials: characteristic polynomials, printing, square-free
// parts and Sturm sequences for exact real-root counting.

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include <boost/integer/common_factor.hpp>

#include "trellis/matrix.hpp"

namespace trellis {

// Coefficients in ascending order: c[0] + c[1] x + ... . The zero polynomial
// has no coefficients.
struct Polynomial {
  std::vector<Integer> c;

  Polynomial() = default;
  explicit Polynomial(std::vector<Integer> ascending) : c(std::move(ascending)) { trim(); }

  static Polynomial from_descending(const std::vector<long long>& coeffs) {
    std::vector<Integer> a(coeffs.rbegin(), coeffs.rend());
    return Polynomial(std::move(a));
  }
  static Polynomial monomial(std::size_t k) {
    std::vector<Integer> a(k + 1, 0);
    a[k] = 1;
    return Polynomial(std::move(a));
  }

  void trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }
  bool is_zero() const { return c.empty(); }
  long degree() const { return static_cast<long>(c.size()) - 1; }
  Integer leading() const { return c.empty() ? Integer(0) : c.back(); }
  Integer coefficient(std::size_t k) const { return k < c.size() ? c[k] : Integer(0); }

  template <class T>
  T evaluate(const T& x) const {
    T acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + T(*it);
    return acc;
  }

  // Largest k with x^k dividing the polynomial.
  std::size_t zero_multiplicity() const {
    std::size_t k = 0;
    while (k < c.size() && c[k] == 0) ++k;
    return k;
  }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Integer> out(a.c.size() + b.c.size() - 1, 0);
    for (std::size_t i = 0; i < a.c.size(); ++i)
      for (std::size_t j = 0; j < b.c.size(); ++j) out[i + j] += a.c[i] * b.c[j];
    return Polynomial(std::move(out));
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    std::vector<Integer> out(std::max(a.c.size(), b.c.size()), 0);
    for (std::size_t i = 0; i < a.c.size(); ++i) out[i] += a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i) out[i] -= b.c[i];
    return Polynomial(std::move(out));
  }
};

// det(xI - M) by Berkowitz's division-free recurrence.
inline Polynomial char_poly(const IntMatrix& m) {
  if (!m.is_square()) throw DimensionError("characteristic polynomial of a non-square matrix");
  const std::size_t n = m.rows();
  // Descending coefficients of the current leading principal minor's polynomial.
  std::vector<Integer> p{1};
  for (std::size_t r = 0; r < n; ++r) {
    // Toeplitz column: 1, -a, -R S, -R A S, ..., -R A^{r-1} S.
    std::vector<Integer> col(r + 2, 0);
    col[0] = 1;
    col[1] = -m(r, r);
    std::vector<Integer> v(r);  // A_r^k S
    for (std::size_t i = 0; i < r; ++i) v[i] = m(i, r);
    for (std::size_t k = 0; k < r; ++k) {
      Integer dot = 0;
      for (std::size_t i = 0; i < r; ++i) dot += m(r, i) * v[i];
      col[k + 2] = -dot;
      std::vector<Integer> next(r, 0);
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) next[i] += m(i, j) * v[j];
      v = std::move(next);
    }
    std::vector<Integer> q(r + 2, 0);
    for (std::size_t i = 0; i < r + 2; ++i)
      for (std::size_t j = 0; j <= std::min(i, r); ++j) q[i] += col[i - j] * p[j];
    p = std::move(q);
  }
  std::reverse(p.begin(), p.end());
  return Polynomial(std::move(p));
}

namespace detail {

inline std::string term(const Integer& coeff, std::size_t k, const std::string& var, bool first) {
  std::string out;
  const Integer mag = abs(coeff);
  if (first)
    out = coeff < 0 ? "-" : "";
  else
    out = coeff < 0 ? " - " : " + ";
  if (k == 0 || mag != 1) out += mag.str();
  if (k >= 1) out += var;
  if (k >= 2) out += "^" + std::to_string(k);
  return out;
}

inline std::string plain(const Polynomial& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (std::size_t k = p.c.size(); k-- > 0;) {
    if (p.c[k] == 0) continue;
    out += term(p.c[k], k, var, first);
    first = false;
  }
  return out;
}

}  // namespace detail

// Prints with any power of the variable factored out: "λ(λ^3 - λ^2 - 2)".
inline std::string to_string(const Polynomial& p, const std::string& var = "λ") {
  if (p.is_zero()) return "0";
  const std::size_t k = p.zero_multiplicity();
  if (k == 0) return detail::plain(p, var);
  Polynomial rest(std::vector<Integer>(p.c.begin() + static_cast<long>(k), p.c.end()));
  std::string head = var + (k > 1 ? "^" + std::to_string(k) : "");
  if (rest.degree() == 0) {
    if (rest.c[0] == 1) return head;
    if (rest.c[0] == -1) return "-" + head;
    return rest.c[0].str() + head;
  }
  return head + "(" + detail::plain(rest, var) + ")";
}

// Polynomials over the rationals, ascending, trimmed.
using RationalPoly = std::vector<Rational>;

inline RationalPoly to_rational(const Polynomial& p) { return {p.c.begin(), p.c.end()}; }

inline void trim(RationalPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline Rational evaluate(const RationalPoly& p, const Rational& x) {
  Rational acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

inline RationalPoly derivative(const RationalPoly& p) {
  RationalPoly d;
  for (std::size_t k = 1; k < p.size(); ++k) d.push_back(p[k] * static_cast<long long>(k));
  trim(d);
  return d;
}

// Quotient and remainder; the divisor must be nonzero.
inline std::pair<RationalPoly, RationalPoly> divmod(RationalPoly a, const RationalPoly& b) {
  trim(a);
  if (b.empty()) throw Error("polynomial division by zero");
  if (a.size() < b.size()) return {{}, a};
  RationalPoly q(a.size() - b.size() + 1, 0);
  while (!a.empty() && a.size() >= b.size()) {
    const std::size_t shift = a.size() - b.size();
    const Rational f = a.back() / b.back();
    q[shift] = f;
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= f * b[i];
    a.pop_back();
    trim(a);
  }
  trim(q);
  return {q, a};
}

inline RationalPoly monic(RationalPoly p) {
  trim(p);
  if (p.empty()) return p;
  const Rational lead = p.back();
  for (auto& x : p) x /= lead;
  return p;
}

inline RationalPoly gcd(RationalPoly a, RationalPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

// Clears denominators and content; leading coefficient made positive.
inline Polynomial primitive(const RationalPoly& p) {
  Integer l = 1;
  for (const auto& x : p) l = boost::integer::lcm(l, Integer(denominator(x)));
  std::vector<Integer> out;
  for (const auto& x : p) out.push_back(Integer(numerator(x)) * (l / Integer(denominator(x))));
  Integer g = 0;
  for (const auto& x : out) g = boost::integer::gcd(g, Integer(abs(x)));
  if (g > 1)
    for (auto& x : out) x /= g;
  Polynomial result(std::move(out));
  if (result.leading() < 0)
    for (auto& x : result.c) x = -x;
  return result;
}

// Product of the distinct irreducible factors, as a primitive integer polynomial.
inline Polynomial squarefree_part(const Polynomial& p) {
  if (p.degree() < 1) return p;
  const auto rp = to_rational(p);
  const auto g = gcd(rp, derivative(rp));
  return primitive(divmod(rp, g).first);
}

inline bool divides(const Polynomial& d, const Polynomial& p) {
  if (d.is_zero()) return p.is_zero();
  return divmod(to_rational(p), to_rational(d)).second.empty();
}

class SturmSequence {
 public:
  explicit SturmSequence(const Polynomial& p) {
    chain_.push_back(to_rational(p));
    trim(chain_.back());
    if (chain_.back().empty()) return;
    chain_.push_back(derivative(chain_.back()));
    while (!chain_.back().empty()) {
      auto r = divmod(chain_[chain_.size() - 2], chain_.back()).second;
      for (auto& x : r) x = -x;
      chain_.push_back(std::move(r));
    }
    chain_.pop_back();
  }

  std::size_t sign_changes(const Rational& x) const {
    std::size_t changes = 0;
    int last = 0;
    for (const auto& q : chain_) {
      const Rational v = evaluate(q, x);
      const int s = v > 0 ? 1 : (v < 0 ? -1 : 0);
      if (s == 0) continue;
      if (last != 0 && s != last) ++changes;
      last = s;
    }
    return changes;
  }

  // Distinct real roots in the half-open interval (a, b].
  std::size_t count_roots(const Rational& a, const Rational& b) const {
    if (chain_.empty() || chain_[0].empty() || !(a < b)) return 0;
    const auto va = sign_changes(a), vb = sign_changes(b);
    return va > vb ? va - vb : 0;
  }

 private:
  std::vector<RationalPoly> chain_;
};

}  // namespace trellis
