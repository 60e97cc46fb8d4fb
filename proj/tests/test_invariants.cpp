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

#include <catch2/catch_amalgamated.hpp>

#include "eldiv/invariants.hpp"
#include "eldiv/oracle.hpp"

using namespace eldiv;

namespace {

std::vector<DrinfeldModule> rank2_modules(const PolyRing& R) {
  std::vector<DrinfeldModule> out;
  if (R.q() == 3)
    out.push_back(DrinfeldModule(R, {R.from_text("1"), R.from_text("0,0,2")}));
  if (R.q() == 2)
    out.push_back(DrinfeldModule(R, {R.from_text("1"), R.from_text("0,1")}));
  out.push_back(DrinfeldModule(R, {R.one(), R.one()}));
  out.push_back(DrinfeldModule(R, {R.t(), R.one()}));
  return out;
}

}  // namespace

TEST_CASE("records match the brute-force module structure") {
  for (unsigned q : {2u, 3u}) {
    PolyRing R{Fq(q)};
    for (const DrinfeldModule& M : rank2_modules(R))
      for (int dp = 1; dp <= 3; ++dp)
        for (const PolyA& p : R.irreducibles_of_degree(dp)) {
          const auto Mp = reduce(M, p);
          if (!Mp.has_value()) continue;
          CAPTURE(q, R.to_text(p), R.to_text(M.psi_t().c[1]), R.to_text(M.psi_t().c[2]));
          const PrimeRecord rec = compute_record(*Mp);
          const ModuleStructure s = brute_module_structure(*Mp);
          REQUIRE(rec.d1 == s.chain[0]);
          REQUIRE(rec.d2 == s.chain[1]);
          REQUIRE(rec.chi == s.chi);
          REQUIRE(rec.d2 == brute_exponent(*Mp));
        }
  }
}

TEST_CASE("the recovered operator identity holds exactly") {
  for (unsigned q : {2u, 3u}) {
    PolyRing R{Fq(q)};
    for (const DrinfeldModule& M : rank2_modules(R))
      for (int dp = 1; dp <= 3; ++dp)
        for (const PolyA& p : R.irreducibles_of_degree(dp)) {
          const auto Mp = reduce(M, p);
          if (!Mp.has_value()) continue;
          const auto [a1, u] = frobenius_charpoly_rank2(*Mp);
          const int d = Mp->deg_prime();
          REQUIRE(PolyRing::deg(a1) <= d / 2);

          // tau^{2d} + psi_{a1} tau^d + psi_{u p} = 0.
          const SkewPoly lhs = skew_add(
              skew_add(skew_tau_power(Mp->field(), 2 * d),
                       skew_mul(Mp->psi(a1), skew_tau_power(Mp->field(), d))),
              Mp->psi(R.scale(u, p)));
          CAPTURE(q, R.to_text(p), R.to_text(a1));
          REQUIRE(skew_is_zero(lhs));

          const PolyA chi = euler_char(R, p, a1, u);
          REQUIRE(PolyRing::deg(chi) == d);
          REQUIRE(R.is_monic(chi));
        }
  }
}

TEST_CASE("frozen invariants at degree one primes") {
  PolyRing R{Fq(3)};

  // psi_T = T + tau + 2T^2 tau^2 at p = T+1: Frobenius satisfies
  // X^2 + 2X + (T+1), all torsion cyclic.
  {
    const DrinfeldModule M(R, {R.from_text("1"), R.from_text("0,0,2")});
    const PrimeRecord rec = compute_record(*reduce(M, R.from_text("1,1")));
    REQUIRE(rec.a1 == R.from_text("2"));
    REQUIRE(rec.u == Fq(3).elem(1));
    REQUIRE(rec.chi == R.from_text("1,1"));
    REQUIRE(rec.d1 == R.one());
    REQUIRE(rec.d2 == R.from_text("1,1"));
    REQUIRE(rec.height == 1);
  }

  // psi_T = T + T tau + tau^2 is supersingular at p = T: a1 = 0 and the
  // unit is forced to -1.
  {
    const DrinfeldModule S(R, {R.t(), R.one()});
    const PrimeRecord rec = compute_record(*reduce(S, R.t()));
    REQUIRE(rec.height == 2);
    REQUIRE(PolyRing::is_zero(rec.a1));
    REQUIRE(rec.u == Fq(3).elem(2));
    REQUIRE(rec.chi == R.from_text("2,1"));
    REQUIRE(rec.d1 == R.one());
    REQUIRE(rec.d2 == R.from_text("2,1"));
  }
}

TEST_CASE("complete splitting agrees with divisibility into the first divisor") {
  PolyRing R{Fq(3)};
  const DrinfeldModule M(R, {R.from_text("1"), R.from_text("0,0,2")});
  for (int dp = 2; dp <= 3; ++dp)
    for (const PolyA& p : R.irreducibles_of_degree(dp)) {
      const auto Mp = reduce(M, p);
      if (!Mp.has_value()) continue;
      const PrimeRecord rec = compute_record(*Mp);
      for (int dm = 1; dm <= 2; ++dm)
        for (const PolyA& m : R.monics_of_degree(dm)) {
          if (R.divides(p, m)) continue;
          CAPTURE(R.to_text(p), R.to_text(m));
          REQUIRE(splits_completely(*Mp, m) == R.divides(m, rec.d1));
        }
    }
}

TEST_CASE("invariant helpers reject bad arguments") {
  PolyRing R{Fq(3)};
  const DrinfeldModule C(R, {R.one()});
  const auto Cp = reduce(C, R.from_text("1,1"));
  REQUIRE_THROWS_AS(frobenius_charpoly_rank2(*Cp), std::invalid_argument);
  REQUIRE_THROWS_AS(compute_record(*Cp), std::invalid_argument);

  const DrinfeldModule M(R, {R.from_text("1"), R.from_text("0,0,2")});
  const auto Mp = reduce(M, R.from_text("1,1"));
  REQUIRE_THROWS_AS(splits_completely(*Mp, R.from_text("1,1")), std::invalid_argument);
  REQUIRE_THROWS_AS(splits_completely(*Mp, R.zero()), std::invalid_argument);
  REQUIRE(splits_completely(*Mp, R.one()));
}
