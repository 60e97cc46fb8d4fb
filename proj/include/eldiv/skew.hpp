/*
   Copyright 2026 The eldiv authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef ELDIV_SKEW_HPP
#define ELDIV_SKEW_HPP

// Twisted polynomials F_p{tau} over a residue field, tau c = c^q tau.
// These are the q-linearized operators: f = sum f_i tau^i acts on field
// elements as x -> sum f_i x^{q^i}, and multiplication is composition.
//
// The ring is left and right Euclidean; only right division is implemented
// because kernels correspond to right divisors. right_gcd(f, tau^d - 1)
// measures the F_q-dimension of ker f inside F_{q^d}: tau^d - 1 is separable
// with kernel exactly F_{q^d}, so the right gcd is separable too and its
// tau-degree counts the common kernel.

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "eldiv/residue.hpp"

namespace eldiv {

struct SkewPoly {
  ResidueField K;
  std::vector<ResElem> c;  // c[i] = coefficient of tau^i, no trailing zeros

  friend bool operator==(const SkewPoly& a, const SkewPoly& b) {
    return a.K.same_field(b.K) && a.c == b.c;
  }
};

inline int deg_tau(const SkewPoly& f) { return static_cast<int>(f.c.size()) - 1; }
inline bool skew_is_zero(const SkewPoly& f) { return f.c.empty(); }

inline void skew_trim(SkewPoly& f) {
  while (!f.c.empty() && f.K.is_zero(f.c.back())) f.c.pop_back();
}

inline SkewPoly skew_zero(const ResidueField& K) { return SkewPoly{K, {}}; }

inline SkewPoly skew_const(const ResidueField& K, const ResElem& a) {
  SkewPoly f{K, {a}};
  skew_trim(f);
  return f;
}

inline SkewPoly skew_one(const ResidueField& K) { return skew_const(K, K.one()); }

inline SkewPoly skew_tau_power(const ResidueField& K, int n) {
  if (n < 0) throw std::invalid_argument("skew_tau_power: negative exponent");
  SkewPoly f{K, std::vector<ResElem>(static_cast<std::size_t>(n) + 1, K.zero())};
  f.c.back() = K.one();
  return f;
}

inline SkewPoly skew_from_coeffs(const ResidueField& K, std::vector<ResElem> coeffs) {
  SkewPoly f{K, std::move(coeffs)};
  skew_trim(f);
  return f;
}

namespace detail {
inline void require_same_field(const SkewPoly& a, const SkewPoly& b) {
  if (!a.K.same_field(b.K)) throw std::invalid_argument("skew: operands over different fields");
}
}  // namespace detail

inline SkewPoly skew_add(const SkewPoly& a, const SkewPoly& b) {
  detail::require_same_field(a, b);
  SkewPoly r{a.K, {}};
  r.c.resize(std::max(a.c.size(), b.c.size()), a.K.zero());
  for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] = a.c[i];
  for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] = a.K.add(r.c[i], b.c[i]);
  skew_trim(r);
  return r;
}

inline SkewPoly skew_neg(const SkewPoly& a) {
  SkewPoly r = a;
  for (auto& x : r.c) x = a.K.neg(x);
  return r;
}

inline SkewPoly skew_sub(const SkewPoly& a, const SkewPoly& b) { return skew_add(a, skew_neg(b)); }

// Left multiplication by a constant scales every coefficient.
inline SkewPoly skew_scale(const ResElem& s, const SkewPoly& f) {
  SkewPoly r = f;
  for (auto& x : r.c) x = f.K.mul(s, x);
  skew_trim(r);
  return r;
}

// (fg)_k = sum_{i+j=k} f_i * (g_j)^{q^i}.
inline SkewPoly skew_mul(const SkewPoly& f, const SkewPoly& g) {
  detail::require_same_field(f, g);
  const ResidueField& K = f.K;
  if (skew_is_zero(f) || skew_is_zero(g)) return skew_zero(K);
  SkewPoly r{K, std::vector<ResElem>(f.c.size() + g.c.size() - 1, K.zero())};
  std::vector<ResElem> twisted(g.c.size());
  for (std::size_t i = 0; i < f.c.size(); ++i) {
    if (K.is_zero(f.c[i])) continue;
    for (std::size_t j = 0; j < g.c.size(); ++j)
      twisted[j] = K.frobenius_pow(g.c[j], static_cast<unsigned>(i));
    for (std::size_t j = 0; j < g.c.size(); ++j)
      r.c[i + j] = K.add(r.c[i + j], K.mul(f.c[i], twisted[j]));
  }
  skew_trim(r);
  return r;
}

// f = s*g + r with deg_tau r < deg_tau g.
inline std::pair<SkewPoly, SkewPoly> right_divmod(const SkewPoly& f, const SkewPoly& g) {
  detail::require_same_field(f, g);
  if (skew_is_zero(g)) throw std::domain_error("right_divmod: division by zero");
  const ResidueField& K = f.K;
  SkewPoly r = f;
  SkewPoly s{K, {}};
  const int dg = deg_tau(g);
  if (deg_tau(r) >= dg) s.c.assign(static_cast<std::size_t>(deg_tau(r) - dg) + 1, K.zero());
  while (deg_tau(r) >= dg) {
    const int k = deg_tau(r) - dg;
    // (t tau^k) g has leading coefficient t * g_top^{q^k}.
    const ResElem t = K.mul(r.c.back(), K.inv(K.frobenius_pow(g.c.back(), static_cast<unsigned>(k))));
    s.c[static_cast<std::size_t>(k)] = t;
    for (int j = 0; j <= dg; ++j) {
      auto& rc = r.c[static_cast<std::size_t>(k + j)];
      rc = K.sub(rc, K.mul(t, K.frobenius_pow(g.c[static_cast<std::size_t>(j)], static_cast<unsigned>(k))));
    }
    skew_trim(r);
  }
  skew_trim(s);
  return {s, r};
}

inline SkewPoly skew_monic(const SkewPoly& f) {
  if (skew_is_zero(f)) throw std::domain_error("skew_monic: zero operand");
  return skew_scale(f.K.inv(f.c.back()), f);
}

// Monic right divisor of maximal tau-degree.
inline SkewPoly right_gcd(const SkewPoly& a, const SkewPoly& b) {
  detail::require_same_field(a, b);
  if (skew_is_zero(a) && skew_is_zero(b)) throw std::domain_error("right_gcd: gcd(0, 0)");
  SkewPoly x = a, y = b;
  while (!skew_is_zero(y)) {
    SkewPoly r = right_divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return skew_monic(x);
}

// dim_{F_q} of ker f intersected with F_{q^d}.
inline int kernel_rank_in(const SkewPoly& f, int d) {
  if (skew_is_zero(f)) throw std::domain_error("kernel_rank_in: zero operator");
  if (d < 1) throw std::invalid_argument("kernel_rank_in: extension degree must be >= 1");
  SkewPoly td1 = skew_tau_power(f.K, d);
  td1.c[0] = f.K.neg(f.K.one());
  return deg_tau(right_gcd(f, td1));
}

// f(x) = sum f_i x^{q^i}.
inline ResElem skew_eval(const SkewPoly& f, const ResElem& x) {
  const ResidueField& K = f.K;
  ResElem acc = K.zero(), y = x;
  for (std::size_t i = 0; i < f.c.size(); ++i) {
    if (i > 0) y = K.frobenius(y);
    if (!K.is_zero(f.c[i])) acc = K.add(acc, K.mul(f.c[i], y));
  }
  return acc;
}

inline std::string to_string(const SkewPoly& f) {
  if (skew_is_zero(f)) return "0";
  std::string s;
  for (std::size_t i = 0; i < f.c.size(); ++i) {
    if (f.K.is_zero(f.c[i])) continue;
    if (!s.empty()) s += " + ";
    s += "(" + f.K.ring().to_text(f.K.to_poly(f.c[i])) + ")";
    if (i == 1) s += "*t";
    if (i > 1) s += "*t^" + std::to_string(i);
  }
  return s;
}

}  // namespace eldiv

#endif  // ELDIV_SKEW_HPP
