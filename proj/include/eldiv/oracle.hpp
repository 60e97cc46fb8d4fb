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

#ifndef ELDIV_ORACLE_HPP
#define ELDIV_ORACLE_HPP

// Brute-force computation of the A-module structure of a reduced Drinfeld
// module on its residue field. Everything here enumerates all q^d field
// elements and evaluates psi directly, so it only scales to tiny fields; the
// point is cross-checking fast algorithms against a second, unrelated path.

#include <vector>

#include "eldiv/common.hpp"
#include "eldiv/drinfeld.hpp"
#include "eldiv/factor.hpp"

namespace eldiv {

inline constexpr std::uint64_t kBruteForceCap = 1u << 14;

namespace detail {

inline void require_brute_feasible(const ReducedModule& Mp) {
  if (Mp.field().size() > kBruteForceCap)
    throw std::invalid_argument("oracle: residue field too large for enumeration");
}

// #{x in the residue field : psi_a(x) = 0}.
inline std::uint64_t count_killed(const ReducedModule& Mp, const PolyA& a) {
  const ResidueField& K = Mp.field();
  const SkewPoly& f = Mp.psi(a);
  std::uint64_t n = 0;
  for (std::uint64_t i = 0; i < K.size(); ++i)
    if (K.is_zero(skew_eval(f, K.element(i)))) ++n;
  return n;
}

inline int exact_log(std::uint64_t n, std::uint64_t base) {
  int e = 0;
  while (n > 1) {
    if (n % base != 0) throw ConsistencyError("oracle: torsion count is not a power of the residue size");
    n /= base;
    ++e;
  }
  return e;
}

}  // namespace detail

// Smallest monic annihilator of every element, accumulated by lcm. This is
// the largest invariant factor of the module.
inline PolyA brute_exponent(const ReducedModule& Mp) {
  detail::require_brute_feasible(Mp);
  const ResidueField& K = Mp.field();
  const PolyRing& R = K.ring();
  PolyA e = R.one();
  for (std::uint64_t i = 1; i < K.size(); ++i) {
    const ResElem x = K.element(i);
    if (K.is_zero(skew_eval(Mp.psi(e), x))) continue;
    PolyA mx = R.zero();
    for (int deg = 1; deg <= K.d() && PolyRing::is_zero(mx); ++deg)
      for (const PolyA& m : R.monics_of_degree(deg))
        if (K.is_zero(skew_eval(Mp.psi(m), x))) {
          mx = m;
          break;
        }
    if (PolyRing::is_zero(mx)) throw ConsistencyError("oracle: element with no annihilator of bounded degree");
    e = R.lcm(e, mx);
  }
  return e;
}

struct ModuleStructure {
  std::vector<PolyA> chain;  // invariant factors, smallest first, padded to rank with 1
  PolyA chi;                 // product of the chain
};

// Invariant factors from torsion point counts: for each prime ell, the
// count killed by ell^e jumps by q^{(number of factors with multiplicity
// >= e) * deg ell} at each level, which pins down the partition.
inline ModuleStructure brute_module_structure(const ReducedModule& Mp) {
  detail::require_brute_feasible(Mp);
  const ResidueField& K = Mp.field();
  const PolyRing& R = K.ring();
  const int d = K.d(), rank = Mp.rank();

  std::vector<PolyA> primes;
  std::vector<std::vector<int>> levels;  // levels[i][e-1] = #factors with v_ell >= e
  for (int dl = 1; dl <= d; ++dl)
    for (const PolyA& ell : R.irreducibles_of_degree(dl)) {
      std::vector<int> ks;
      std::uint64_t prev = 1;
      PolyA pw = R.one();
      for (int e = 1; e <= d + 1; ++e) {
        pw = R.mul(pw, ell);
        const std::uint64_t n = detail::count_killed(Mp, pw);
        if (n == prev) break;
        if (e == d + 1) throw ConsistencyError("oracle: torsion tower does not stabilize");
        if (n < prev || n % prev != 0)
          throw ConsistencyError("oracle: torsion counts do not nest");
        const int delta = detail::exact_log(n / prev, K.q());
        if (delta % dl != 0) throw ConsistencyError("oracle: torsion jump is not a multiple of the prime degree");
        const int k = delta / dl;
        if (!ks.empty() && k > ks.back()) throw ConsistencyError("oracle: torsion jumps grow");
        ks.push_back(k);
        prev = n;
      }
      if (!ks.empty()) {
        primes.push_back(ell);
        levels.push_back(std::move(ks));
      }
    }

  int nfactors = 0;
  for (const auto& ks : levels) nfactors = std::max(nfactors, ks.empty() ? 0 : ks.front());
  if (nfactors > rank) throw ConsistencyError("oracle: more invariant factors than the rank allows");

  ModuleStructure out;
  out.chain.assign(static_cast<std::size_t>(rank), R.one());
  for (std::size_t i = 0; i < primes.size(); ++i)
    for (int j = 1; j <= nfactors; ++j) {
      // Multiplicity in the j-th largest factor.
      int v = 0;
      for (int k : levels[i])
        if (k >= j) ++v;
      PolyA pw = R.pow(primes[i], static_cast<unsigned>(v));
      auto& slot = out.chain[static_cast<std::size_t>(rank - j)];
      slot = R.mul(slot, pw);
    }
  out.chi = R.one();
  for (const PolyA& c : out.chain) out.chi = R.mul(out.chi, c);
  if (PolyRing::deg(out.chi) != d)
    throw ConsistencyError("oracle: invariant factor degrees do not sum to the residue degree");
  return out;
}

}  // namespace eldiv

#endif  // ELDIV_ORACLE_HPP
