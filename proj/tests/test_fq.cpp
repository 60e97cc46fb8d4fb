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

#include "eldiv/fq.hpp"

using eldiv::Fq;
using eldiv::FqElem;

TEST_CASE("field axioms hold exhaustively for small q") {
  for (unsigned q : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) {
    Fq F(q);
    CAPTURE(q);
    REQUIRE(F.q() == q);

    for (unsigned a = 0; a < q; ++a) {
      const FqElem x = F.elem(a);
      REQUIRE(F.add(x, F.zero()) == x);
      REQUIRE(F.mul(x, F.one()) == x);
      REQUIRE(F.add(x, F.neg(x)) == F.zero());
      if (a != 0) REQUIRE(F.mul(x, F.inv(x)) == F.one());
      // x^q = x: the q-power Frobenius is the identity on F_q.
      REQUIRE(F.pow(x, q) == x);
    }

    for (unsigned a = 0; a < q; ++a)
      for (unsigned b = 0; b < q; ++b) {
        const FqElem x = F.elem(a), y = F.elem(b);
        REQUIRE(F.add(x, y) == F.add(y, x));
        REQUIRE(F.mul(x, y) == F.mul(y, x));
        // (x + y)^p = x^p + y^p.
        REQUIRE(F.frobenius(F.add(x, y)) == F.add(F.frobenius(x), F.frobenius(y)));
      }

    for (unsigned a = 0; a < q; ++a)
      for (unsigned b = 0; b < q; ++b)
        for (unsigned c = 0; c < q; ++c) {
          const FqElem x = F.elem(a), y = F.elem(b), z = F.elem(c);
          REQUIRE(F.add(F.add(x, y), z) == F.add(x, F.add(y, z)));
          REQUIRE(F.mul(F.mul(x, y), z) == F.mul(x, F.mul(y, z)));
          REQUIRE(F.mul(x, F.add(y, z)) == F.add(F.mul(x, y), F.mul(x, z)));
        }

    // Characteristic p: the p-fold sum of 1 vanishes.
    FqElem s = F.zero();
    for (unsigned i = 0; i < F.p(); ++i) s = F.add(s, F.one());
    REQUIRE(s == F.zero());
  }
}

TEST_CASE("F_4 uses the modulus b^2 = b + 1") {
  Fq F(4);
  REQUIRE(F.p() == 2);
  REQUIRE(F.ext_degree() == 2);
  // Index 2 is the basis element b; b^2 = 1 + b has index 3.
  REQUIRE(F.mul(F.elem(2), F.elem(2)) == F.elem(3));
  REQUIRE(F.inv(F.elem(2)) == F.elem(3));
}

TEST_CASE("multiplicative group of F_9 has order 8") {
  Fq F(9);
  for (unsigned a = 1; a < 9; ++a) {
    REQUIRE(F.pow(F.elem(a), 8) == F.one());
    unsigned ord = 1;
    FqElem x = F.elem(a);
    while (x != F.one()) {
      x = F.mul(x, F.elem(a));
      ++ord;
    }
    REQUIRE(8 % ord == 0);
  }
}

TEST_CASE("constructor rejects non prime powers and out-of-range q") {
  REQUIRE_THROWS_AS(Fq(1), std::invalid_argument);
  REQUIRE_THROWS_AS(Fq(6), std::invalid_argument);
  REQUIRE_THROWS_AS(Fq(12), std::invalid_argument);
  REQUIRE_THROWS_AS(Fq(1000), std::invalid_argument);
}

TEST_CASE("zero has no inverse") {
  Fq F(3);
  REQUIRE_THROWS_AS(F.inv(F.zero()), std::domain_error);
  REQUIRE_THROWS_AS(F.elem(3), std::invalid_argument);
}
