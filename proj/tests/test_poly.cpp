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

#include <random>
#include <set>

#include "eldiv/poly.hpp"

using eldiv::BigInt;
using eldiv::Fq;
using eldiv::PolyA;
using eldiv::PolyLess;
using eldiv::PolyRing;

namespace {

PolyA random_poly(const PolyRing& R, std::mt19937& rng, int max_deg) {
  PolyA f;
  const int d = static_cast<int>(rng() % static_cast<unsigned>(max_deg + 2)) - 1;
  for (int i = 0; i <= d; ++i)
    f.c.push_back(eldiv::FqElem{static_cast<std::uint16_t>(rng() % R.q())});
  PolyRing::trim(f);
  return f;
}

}  // namespace

TEST_CASE("text codec round trips and validates") {
  PolyRing R{Fq(3)};
  const PolyA f = R.from_text("1,2,1");
  REQUIRE(PolyRing::deg(f) == 2);
  REQUIRE(R.to_text(f) == "1,2,1");
  REQUIRE(R.from_text("0") == R.zero());
  REQUIRE(R.to_text(R.zero()) == "0");
  REQUIRE(R.from_text("1,0") == R.one());  // trailing zeros trimmed
  REQUIRE_THROWS_AS(R.from_text(""), std::invalid_argument);
  REQUIRE_THROWS_AS(R.from_text("1,,2"), std::invalid_argument);
  REQUIRE_THROWS_AS(R.from_text("3"), std::invalid_argument);
  REQUIRE_THROWS_AS(R.from_text("x"), std::invalid_argument);
  REQUIRE_THROWS_AS(R.from_text("1, 2"), std::invalid_argument);
}

TEST_CASE("basic arithmetic identities") {
  PolyRing R{Fq(3)};
  const PolyA a = R.from_text("1,1");  // 1 + T
  REQUIRE(R.to_text(R.mul(a, a)) == "1,2,1");
  PolyRing R2{Fq(2)};
  const PolyA b = R2.from_text("1,1");
  REQUIRE(R2.to_text(R2.mul(b, b)) == "1,0,1");

  REQUIRE(PolyRing::deg(R.zero()) == -1);
  REQUIRE(R.norm(R.zero()) == 0);
  REQUIRE(R.norm(R.one()) == 1);
  REQUIRE(R.norm(R.from_text("1,0,1")) == 9);
  REQUIRE(R.monic(R.from_text("2,0,2")) == R.from_text("1,0,1"));
  REQUIRE_THROWS_AS(R.monic(R.zero()), std::domain_error);
}

TEST_CASE("division with remainder reconstructs the dividend") {
  std::mt19937 rng(12345);
  for (unsigned q : {2u, 3u, 4u}) {
    PolyRing R{Fq(q)};
    for (int iter = 0; iter < 300; ++iter) {
      const PolyA a = random_poly(R, rng, 8);
      PolyA b = random_poly(R, rng, 5);
      if (PolyRing::is_zero(b)) b = R.t();
      const auto [s, r] = R.divmod(a, b);
      REQUIRE(R.add(R.mul(s, b), r) == a);
      REQUIRE(PolyRing::deg(r) < PolyRing::deg(b));
    }
  }
  PolyRing R{Fq(3)};
  REQUIRE_THROWS_AS(R.divmod(R.one(), R.zero()), std::domain_error);
}

TEST_CASE("gcd and lcm") {
  std::mt19937 rng(777);
  PolyRing R{Fq(3)};
  for (int iter = 0; iter < 200; ++iter) {
    PolyA g = random_poly(R, rng, 3);
    if (PolyRing::is_zero(g)) g = R.one();
    PolyA x = R.mul(g, random_poly(R, rng, 3));
    PolyA y = R.mul(g, random_poly(R, rng, 3));
    if (PolyRing::is_zero(x) && PolyRing::is_zero(y)) continue;
    const PolyA d = R.gcd(x, y);
    REQUIRE(R.is_monic(d));
    REQUIRE(R.divides(d, x));
    REQUIRE(R.divides(d, y));
    REQUIRE(R.divides(g, d));
    if (!PolyRing::is_zero(x) && !PolyRing::is_zero(y)) {
      const PolyA l = R.lcm(x, y);
      REQUIRE(R.is_monic(l));
      REQUIRE(R.divides(x, l));
      REQUIRE(R.divides(y, l));
      REQUIRE(R.mul(d, l) == R.monic(R.mul(x, y)));
    }
  }
  REQUIRE_THROWS_AS(R.gcd(R.zero(), R.zero()), std::domain_error);
  REQUIRE(R.gcd(R.zero(), R.from_text("0,2")) == R.t());
}

TEST_CASE("monic enumeration is complete and canonically ordered") {
  PolyRing R{Fq(3)};
  const auto deg1 = R.monics_of_degree(1);
  REQUIRE(deg1.size() == 3);
  REQUIRE(deg1[0] == R.from_text("0,1"));
  REQUIRE(deg1[1] == R.from_text("1,1"));
  REQUIRE(deg1[2] == R.from_text("2,1"));

  for (int n : {0, 1, 2, 3}) {
    const auto all = R.monics_of_degree(n);
    REQUIRE(all.size() == static_cast<std::size_t>(eldiv::ipow(BigInt(3), n).convert_to<long long>()));
    for (std::size_t i = 0; i + 1 < all.size(); ++i) REQUIRE(PolyLess{}(all[i], all[i + 1]));
    for (const auto& f : all) REQUIRE(R.is_monic(f));
  }
}

TEST_CASE("irreducibility test agrees with a root/divisor check at small degree") {
  PolyRing R{Fq(3)};
  // Independent check for degree 2: irreducible iff no root in F_3.
  for (const auto& f : R.monics_of_degree(2)) {
    bool has_root = false;
    for (unsigned a = 0; a < 3; ++a)
      if (R.field().is_zero(R.eval(f, R.field().elem(a)))) has_root = true;
    REQUIRE(R.is_irreducible(f) == !has_root);
  }
  REQUIRE(R.is_irreducible(R.from_text("1,0,1")));
  REQUIRE_FALSE(R.is_irreducible(R.one()));
  REQUIRE_FALSE(R.is_irreducible(R.zero()));

  PolyRing R2{Fq(2)};
  REQUIRE_FALSE(R2.is_irreducible(R2.from_text("1,0,1")));      // (1+T)^2
  REQUIRE(R2.is_irreducible(R2.from_text("1,1,0,0,1")));        // 1+T+T^4
  REQUIRE_FALSE(R2.is_irreducible(R2.from_text("1,0,1,0,1")));  // (1+T+T^2)^2
}

TEST_CASE("irreducible counts match the divisor-sum formula") {
  PolyRing R2{Fq(2)};
  REQUIRE(R2.irreducible_count(1) == 2);
  REQUIRE(R2.irreducible_count(2) == 1);
  REQUIRE(R2.irreducible_count(3) == 2);
  REQUIRE(R2.irreducible_count(4) == 3);
  REQUIRE(R2.irreducible_count(5) == 6);
  REQUIRE(R2.irreducible_count(10) == 99);

  PolyRing R3{Fq(3)};
  const long long expected3[] = {0, 3, 3, 8, 18, 48, 116, 312};
  for (int n = 1; n <= 7; ++n) {
    REQUIRE(R3.irreducible_count(n) == expected3[n]);
    if (n <= 5) {
      const auto irr = R3.irreducibles_of_degree(n);
      REQUIRE(irr.size() == static_cast<std::size_t>(expected3[n]));
      for (const auto& f : irr) REQUIRE(R3.is_irreducible(f));
      for (std::size_t i = 0; i + 1 < irr.size(); ++i) REQUIRE(PolyLess{}(irr[i], irr[i + 1]));
    }
  }
}

TEST_CASE("q-power twist substitutes T^q") {
  PolyRing R{Fq(3)};
  const PolyA f = R.from_text("1,1");  // 1 + T
  const PolyA f3 = R.qth_power_twist(f, 1);
  REQUIRE(f3 == R.from_text("1,0,0,1"));  // (1+T)^3 = 1 + T^3
  REQUIRE(f3 == R.pow(f, 3));
  REQUIRE(R.qth_power_twist(f, 0) == f);
  REQUIRE(R.qth_power_twist(f, 2) == R.pow(f, 9));
}

TEST_CASE("derivative and evaluation") {
  PolyRing R{Fq(3)};
  // d/dT (1 + T + 2T^2 + T^3) = 1 + 4T + 3T^2 = 1 + T.
  REQUIRE(R.derivative(R.from_text("1,1,2,1")) == R.from_text("1,1"));
  REQUIRE(R.field().is_zero(R.eval(R.from_text("1,2,1"), R.field().elem(2))));
  REQUIRE(PolyRing::is_zero(R.derivative(R.from_text("1,0,0,2"))));  // 1 + 2T^3
}
