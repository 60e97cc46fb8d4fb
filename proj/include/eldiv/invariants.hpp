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

#ifndef ELDIV_INVARIANTS_HPP
#define ELDIV_INVARIANTS_HPP

// Frobenius invariants of a rank-2 reduction at p with deg p = d.
//
// The d-th power Frobenius tau^d satisfies a quadratic over A,
//   tau^{2d} + psi_{a1} tau^d + psi_{u p} = 0,   deg a1 <= d/2, u a unit,
// recovered here by solving for the middle coefficient: a1 is pinned down by
// the tau^d..tau^{2d} coefficients of tau^{2d} + psi_{u p} once u is right,
// and exactly one unit u admits a consistent solution.
//
// The group of points over A/p is then A/d1 x A/d2 with d1 | d2 and
// d1 d2 = chi = monic((tau^d - 1 eliminated at X = 1)) = monic(1 + a1 + u p);
// d1 collects the prime powers whose torsion is fully rational over A/p.

#include <utility>
#include <vector>

#include "eldiv/common.hpp"
#include "eldiv/drinfeld.hpp"
#include "eldiv/factor.hpp"

namespace eldiv {

struct PrimeRecord {
  PolyA p;
  int deg = 0;
  int height = 0;
  PolyA a1;
  FqElem u{};
  PolyA chi;
  PolyA d1;
  PolyA d2;
};

// Coefficients (a1, u) of the characteristic polynomial X^2 + a1 X + u p of
// the Frobenius endomorphism.
inline std::pair<PolyA, FqElem> frobenius_charpoly_rank2(const ReducedModule& Mp) {
  if (Mp.rank() != 2) throw std::invalid_argument("frobenius_charpoly_rank2: rank 2 required");
  const ResidueField& K = Mp.field();
  const PolyRing& R = K.ring();
  const Fq& F = R.field();
  const int d = Mp.deg_prime();

  std::vector<std::pair<PolyA, FqElem>> found;
  for (unsigned ui = 1; ui < R.q(); ++ui) {
    const FqElem u = F.elem(ui);
    const SkewPoly& pup = Mp.psi(R.scale(u, Mp.prime()));
    if (deg_tau(pup) != 2 * d)
      throw ConsistencyError("frobenius_charpoly_rank2: image of u p has wrong degree");
    for (int j = 0; j < d; ++j)
      if (!K.is_zero(pup.c[static_cast<std::size_t>(j)]))
        throw ConsistencyError("frobenius_charpoly_rank2: image of u p has low-order terms");

    // G tau^d = -(tau^{2d} + psi_{u p}) forces psi_{a1} = G.
    SkewPoly g = skew_zero(K);
    g.c.resize(static_cast<std::size_t>(d) + 1);
    for (int k = 0; k < d; ++k) g.c[static_cast<std::size_t>(k)] = K.neg(pup.c[static_cast<std::size_t>(d + k)]);
    g.c[static_cast<std::size_t>(d)] = K.neg(K.add(pup.c[static_cast<std::size_t>(2 * d)], K.one()));
    skew_trim(g);

    const PolyA a1 = skew_is_zero(g) ? R.zero() : K.to_poly(g.c[0]);
    if (PolyRing::deg(a1) > d / 2) continue;
    if (Mp.psi(a1) == g) found.emplace_back(a1, u);
  }
  if (found.size() != 1)
    throw ConsistencyError("frobenius_charpoly_rank2: unit coefficient is not unique");
  return found.front();
}

// chi = monic(P(1)) for P(X) = X^2 + a1 X + u p; always of degree deg p.
inline PolyA euler_char(const PolyRing& R, const PolyA& p, const PolyA& a1, FqElem u) {
  const PolyA p1 = R.add(R.add(R.one(), a1), R.scale(u, p));
  if (PolyRing::deg(p1) != PolyRing::deg(p))
    throw ConsistencyError("euler_char: wrong degree at 1");
  return R.monic(p1);
}

// True when the m-torsion is fully rational over the residue field.
inline bool splits_completely(const ReducedModule& Mp, const PolyA& m) {
  if (PolyRing::is_zero(m)) throw std::invalid_argument("splits_completely: zero modulus");
  if (PolyRing::is_unit(m)) return true;
  if (Mp.field().ring().divides(Mp.prime(), m))
    throw std::invalid_argument("splits_completely: modulus shares the characteristic");
  return kernel_rank_in(Mp.psi(m), Mp.deg_prime()) == Mp.rank() * PolyRing::deg(m);
}

// First elementary divisor: the part of chi whose full torsion is rational.
// For each prime power block the rational rank is monotone in the exponent,
// so scan upward until it drops below the full 2 e deg(ell).
inline PolyA first_divisor(const ReducedModule& Mp, const PolyA& chi) {
  const PolyRing& R = Mp.field().ring();
  const int d = Mp.deg_prime();
  PolyA d1 = R.one();
  for (const PolyFactor& pf : factor(R, chi)) {
    if (pf.prime == Mp.prime()) continue;
    const int emax = pf.mult / 2;
    PolyA pw = R.one();
    int got = 0;
    for (int e = 1; e <= emax; ++e) {
      pw = R.mul(pw, pf.prime);
      if (kernel_rank_in(Mp.psi(pw), d) != 2 * e * PolyRing::deg(pf.prime)) break;
      got = e;
    }
    d1 = R.mul(d1, R.pow(pf.prime, static_cast<unsigned>(got)));
  }
  return d1;
}

// Full invariant data at one good prime, with the internal cross-relations
// between the pieces enforced.
inline PrimeRecord compute_record(const ReducedModule& Mp) {
  const PolyRing& R = Mp.field().ring();
  PrimeRecord rec;
  rec.p = Mp.prime();
  rec.deg = Mp.deg_prime();
  rec.height = Mp.height();
  std::tie(rec.a1, rec.u) = frobenius_charpoly_rank2(Mp);
  rec.chi = euler_char(R, rec.p, rec.a1, rec.u);
  rec.d1 = first_divisor(Mp, rec.chi);

  if (!R.divides(R.mul(rec.d1, rec.d1), rec.chi))
    throw ConsistencyError("compute_record: first divisor square exceeds chi");
  const PolyA one_minus_up = R.sub(R.one(), R.scale(rec.u, rec.p));
  if (!R.divides(rec.d1, one_minus_up))
    throw ConsistencyError("compute_record: first divisor misses 1 - u p");
  const auto [d2, rem] = R.divmod(rec.chi, rec.d1);
  if (!PolyRing::is_zero(rem) || !R.divides(rec.d1, d2))
    throw ConsistencyError("compute_record: divisor chain does not split chi");
  rec.d2 = d2;
  return rec;
}

}  // namespace eldiv

#endif  // ELDIV_INVARIANTS_HPP
