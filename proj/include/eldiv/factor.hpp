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

#ifndef ELDIV_FACTOR_HPP
#define ELDIV_FACTOR_HPP

// Factorization over F_q[T] and the multiplicative functions built on it:
// mu_A, phi_A, radical/omega, divisor enumeration, and #GL_r(A/aA).
//
// Factorization is deterministic: distinct-degree splitting with
// equal-degree refinement (seeded, fixed PRNG) for larger inputs, plain
// trial division against the irreducible enumeration for degree <= 4.
// Factors always come out monic, sorted in canonical order.

#include <algorithm>
#include <random>
#include <stdexcept>
#include <vector>

#include "eldiv/poly.hpp"
#include "eldiv/rational.hpp"

namespace eldiv {

struct PolyFactor {
  PolyA prime;
  int mult = 0;
  friend bool operator==(const PolyFactor& a, const PolyFactor& b) {
    return a.prime == b.prime && a.mult == b.mult;
  }
};

namespace detail {

// Splits a monic squarefree product of irreducibles, all of degree d.
inline void equal_degree_split(const PolyRing& R, const PolyA& f, int d,
                               std::vector<PolyA>& out) {
  if (PolyRing::deg(f) == d) {
    out.push_back(f);
    return;
  }
  // Deterministic seed from the input so repeated runs split identically.
  std::uint64_t seed = 0x9e3779b97f4a7c15ull ^ static_cast<std::uint64_t>(R.q());
  for (const FqElem c : f.c) seed = seed * 1099511628211ull + c.v + 1;
  std::mt19937_64 rng(seed);
  const unsigned q = R.q();
  for (;;) {
    PolyA u;
    u.c.resize(static_cast<std::size_t>(PolyRing::deg(f)));
    for (auto& c : u.c) c = FqElem{static_cast<std::uint16_t>(rng() % q)};
    PolyRing::trim(u);
    if (PolyRing::deg(u) < 1) continue;
    PolyA v;
    if (q % 2 == 1) {
      // u^{(q^d - 1)/2} is +-1 on each component; the -1 components split off.
      const BigInt e = (ipow(BigInt(q), static_cast<unsigned>(d)) - 1) / 2;
      v = R.sub(R.powmod(u, e, f), R.one());
    } else {
      // Char 2: absolute trace to F_2 of each component.
      const unsigned e2 = R.field().ext_degree();
      const unsigned bits = e2 * static_cast<unsigned>(d);
      PolyA acc = R.rem(u, f), term = acc;
      for (unsigned i = 1; i < bits; ++i) {
        term = R.mulmod(term, term, f);
        acc = R.add(acc, term);
      }
      v = acc;
    }
    if (PolyRing::is_zero(v)) continue;
    const PolyA g = R.gcd(v, f);
    const int dg = PolyRing::deg(g);
    if (dg == 0 || dg == PolyRing::deg(f)) continue;
    equal_degree_split(R, g, d, out);
    equal_degree_split(R, R.quo(f, g), d, out);
    return;
  }
}

// Distinct primes of a monic squarefree f.
inline std::vector<PolyA> squarefree_factor(const PolyRing& R, PolyA f) {
  std::vector<PolyA> out;
  PolyA h = R.rem(R.t(), f);
  for (int d = 1; 2 * d <= PolyRing::deg(f); ++d) {
    h = R.powmod(h, BigInt(R.q()), f);
    const PolyA diff = R.sub(h, R.rem(R.t(), f));
    if (PolyRing::is_zero(diff)) {
      // Every remaining factor has degree dividing d, and degrees below d
      // were already split off, so f is a product of degree-d primes.
      equal_degree_split(R, f, d, out);
      return out;
    }
    const PolyA g = R.gcd(diff, f);
    if (PolyRing::deg(g) > 0) {
      equal_degree_split(R, g, d, out);
      f = R.quo(f, g);
      if (PolyRing::deg(f) == 0) return out;
      h = R.rem(h, f);
    }
  }
  if (PolyRing::deg(f) > 0) out.push_back(f);
  return out;
}

// g with g(T)^p = f(T); valid when f' = 0.
inline PolyA pth_root(const PolyRing& R, const PolyA& f) {
  const unsigned p = R.field().p();
  const unsigned e = R.field().ext_degree();
  PolyA g;
  g.c.resize(PolyRing::deg(f) / p + 1, R.field().zero());
  for (std::size_t i = 0; i < g.c.size(); ++i) {
    FqElem c = f.c[i * p];
    // Inverse Frobenius: c^{p^{e-1}}.
    for (unsigned k = 0; k + 1 < e; ++k) c = R.field().frobenius(c);
    g.c[i] = c;
  }
  PolyRing::trim(g);
  return g;
}

inline void factor_monic(const PolyRing& R, PolyA f, int mult_scale,
                         std::vector<PolyFactor>& out) {
  if (PolyRing::deg(f) == 0) return;
  if (PolyRing::deg(f) <= 4) {
    // Trial division, smallest prime first.
    for (int d = 1; d <= PolyRing::deg(f); ++d) {
      if (2 * d > PolyRing::deg(f)) break;
      for (const PolyA& ell : R.irreducibles_of_degree(d)) {
        int e = 0;
        while (R.divides(ell, f)) {
          f = R.quo(f, ell);
          ++e;
        }
        if (e > 0) out.push_back({ell, e * mult_scale});
        if (PolyRing::deg(f) < 2 * d) break;
      }
    }
    if (PolyRing::deg(f) > 0) out.push_back({f, mult_scale});
    return;
  }
  const PolyA fp = R.derivative(f);
  if (PolyRing::is_zero(fp)) {
    factor_monic(R, pth_root(R, f), mult_scale * static_cast<int>(R.field().p()), out);
    return;
  }
  const PolyA w = R.quo(f, R.gcd(f, fp));  // squarefree; misses primes with p | mult
  for (const PolyA& ell : squarefree_factor(R, w)) {
    int e = 0;
    while (R.divides(ell, f)) {
      f = R.quo(f, ell);
      ++e;
    }
    out.push_back({ell, e * mult_scale});
  }
  if (PolyRing::deg(f) > 0) factor_monic(R, f, mult_scale, out);  // leftover is a p-th power
}

}  // namespace detail

// Monic prime factorization of a != 0 (the unit part is dropped):
// monic(a) = prod prime^mult, factors in canonical order.
inline std::vector<PolyFactor> factor(const PolyRing& R, const PolyA& a) {
  if (PolyRing::is_zero(a)) throw std::domain_error("factor: zero polynomial");
  std::vector<PolyFactor> out;
  detail::factor_monic(R, R.monic(a), 1, out);
  std::sort(out.begin(), out.end(), [](const PolyFactor& x, const PolyFactor& y) {
    return PolyLess{}(x.prime, y.prime);
  });
  return out;
}

// mu_A: 1 on units, (-1)^t on a with squarefree monic part having t prime
// factors, 0 otherwise. Depends only on the monic associate.
inline int mobius(const PolyRing& R, const PolyA& a) {
  if (PolyRing::is_zero(a)) throw std::domain_error("mobius: zero polynomial");
  if (PolyRing::is_unit(a)) return 1;
  int sign = 1;
  for (const auto& pf : factor(R, a)) {
    if (pf.mult > 1) return 0;
    sign = -sign;
  }
  return sign;
}

// phi_A(a) = #(A/aA)^* = |a| prod_{p | a} (1 - 1/|p|).
inline BigInt euler_phi(const PolyRing& R, const PolyA& a) {
  if (PolyRing::is_zero(a)) throw std::domain_error("euler_phi: zero polynomial");
  BigInt r = 1;
  for (const auto& pf : factor(R, a)) {
    const BigInt np = R.norm(pf.prime);
    r *= ipow(np, static_cast<unsigned>(pf.mult - 1)) * (np - 1);
  }
  return r;
}

// Monic product of the distinct prime divisors; rad(unit) = 1.
inline PolyA radical(const PolyRing& R, const PolyA& a) {
  PolyA r = R.one();
  for (const auto& pf : factor(R, a)) r = R.mul(r, pf.prime);
  return r;
}

// Number of distinct monic prime divisors.
inline int omega(const PolyRing& R, const PolyA& a) {
  return static_cast<int>(factor(R, a).size());
}

// All monic divisors of a != 0, canonical order.
inline std::vector<PolyA> monic_divisors(const PolyRing& R, const PolyA& a) {
  const auto fac = factor(R, a);
  std::vector<PolyA> out{R.one()};
  for (const auto& pf : fac) {
    const std::size_t base = out.size();
    PolyA pk = R.one();
    for (int e = 1; e <= pf.mult; ++e) {
      pk = R.mul(pk, pf.prime);
      for (std::size_t i = 0; i < base; ++i) out.push_back(R.mul(out[i], pk));
    }
  }
  std::sort(out.begin(), out.end(), PolyLess{});
  return out;
}

// #GL_r(A/aA) = |a|^{r^2} prod_{l | a} (1 - |l|^{-1}) ... (1 - |l|^{-r}),
// computed exactly via the prime-power local factors.
inline BigInt count_gl(const PolyRing& R, int r, const PolyA& a) {
  if (r < 1) throw std::invalid_argument("count_gl: rank must be >= 1");
  if (PolyRing::is_zero(a)) throw std::domain_error("count_gl: zero modulus");
  BigInt total = 1;
  for (const auto& pf : factor(R, a)) {
    const BigInt s = R.norm(pf.prime);
    const unsigned r2 = static_cast<unsigned>(r) * static_cast<unsigned>(r);
    // s^{e r^2 - r(r+1)/2} * prod_{i=1..r} (s^i - 1)
    BigInt local = ipow(s, static_cast<unsigned>(pf.mult) * r2 -
                               static_cast<unsigned>(r) * (static_cast<unsigned>(r) + 1) / 2);
    for (int i = 1; i <= r; ++i) local *= ipow(s, static_cast<unsigned>(i)) - 1;
    total *= local;
  }
  return total;
}

}  // namespace eldiv

#endif  // ELDIV_FACTOR_HPP
