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

#include <algorithm>
#include <string>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "eldiv/identities.hpp"

namespace {

using namespace eldiv;

const std::vector<std::string> kCheckNames = {
    "monic-count-geometric", "mobius-divisor-sum",  "mobius-inverse-norm",
    "mobius-phi-ratio",      "mobius-multiplicative", "phi-unit-count",
    "gl-count-bruteforce",   "irreducible-count-bound"};

TEST_CASE("identity suite passes for q = 2 and q = 3 at full depth") {
  for (unsigned q : {2u, 3u}) {
    const auto checks = run_identities(q, 4);
    REQUIRE(checks.size() == kCheckNames.size());
    for (std::size_t i = 0; i < checks.size(); ++i) {
      INFO("q=" << q << " check " << checks[i].name << ": "
                << checks[i].detail);
      CHECK(checks[i].name == kCheckNames[i]);
      CHECK(checks[i].passed);
    }
    CHECK(all_passed(checks));
  }
}

TEST_CASE("identity suite passes for q = 4 and q = 5 at reduced depth") {
  for (unsigned q : {4u, 5u}) {
    const auto checks = run_identities(q, 2);
    for (const auto& c : checks) {
      INFO("q=" << q << " check " << c.name << ": " << c.detail);
      CHECK(c.passed);
    }
    CHECK(all_passed(checks));
  }
}

TEST_CASE("corrupted mobius input is caught and the counterexample named") {
  IdentityHooks hooks;
  hooks.mobius = [](const PolyRing& R, const PolyA& a) {
    // wrong sign on every irreducible of degree exactly 2
    const int m = mobius(R, a);
    if (PolyRing::deg(a) == 2 && R.is_irreducible(a)) return -m;
    return m;
  };
  const auto checks = run_identities(3, 3, hooks);
  REQUIRE_FALSE(all_passed(checks));
  bool counterexample_named = false;
  for (const auto& c : checks) {
    if (c.passed) continue;
    // only the mobius-based summations can break from a corrupted mu
    CHECK(c.name.rfind("mobius-", 0) == 0);
    if (c.detail.find("=") != std::string::npos &&
        (c.detail.find("a=") != std::string::npos ||
         c.detail.find("d=") != std::string::npos))
      counterexample_named = true;
  }
  CHECK(counterexample_named);
}

TEST_CASE("constant corruption of mobius fails even the unit modulus") {
  IdentityHooks hooks;
  hooks.mobius = [](const PolyRing&, const PolyA&) { return 7; };
  const auto checks = run_identities(2, 2, hooks);
  REQUIRE_FALSE(all_passed(checks));
}

TEST_CASE("identity suite rejects unsupported parameters") {
  REQUIRE_THROWS_AS(run_identities(6, 4), std::invalid_argument);
  REQUIRE_THROWS_AS(run_identities(7, 4), std::invalid_argument);
  REQUIRE_THROWS_AS(run_identities(3, 0), std::invalid_argument);
}

}  // namespace
