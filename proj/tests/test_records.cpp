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
#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "eldiv/drinfeld.hpp"
#include "eldiv/invariants.hpp"
#include "eldiv/records.hpp"

namespace {

using namespace eldiv;

// q = 3, psi_T = T + tau + 2T^2 tau^2; T is its only bad prime.
RecordFile sample_file(const PolyRing& R, int max_deg) {
  const DrinfeldModule M(R, {R.from_text("1"), R.from_text("0,0,2")});
  RecordFile rf;
  rf.q = 3;
  rf.rank = 2;
  rf.psi = {"1", "0,0,2"};
  rf.config_hash = hash_hex(module_hash(rf.q, rf.rank, rf.psi));
  for (int x = 1; x <= max_deg; ++x)
    for (const PolyA& p : R.irreducibles_of_degree(x)) {
      auto Mp = reduce(M, p);
      if (!Mp)
        rf.bad_primes.push_back(p);
      else
        rf.records.push_back(compute_record(*Mp));
    }
  return rf;
}

TEST_CASE("record files round-trip through serialization") {
  const PolyRing R{Fq(3)};
  const RecordFile rf = sample_file(R, 2);
  REQUIRE(rf.records.size() == 5);  // 6 primes of degree <= 2, T is bad
  REQUIRE(rf.bad_primes.size() == 1);

  const std::string bytes = serialize_records(R, rf);
  const RecordFile back = parse_records(bytes);
  CHECK(back.q == rf.q);
  CHECK(back.rank == rf.rank);
  CHECK(back.psi == rf.psi);
  CHECK(back.config_hash == rf.config_hash);
  REQUIRE(back.records.size() == rf.records.size());
  REQUIRE(back.bad_primes.size() == rf.bad_primes.size());
  CHECK(serialize_records(R, back) == bytes);

  // writer emits one canonical byte stream regardless of input order
  RecordFile shuffled = rf;
  std::reverse(shuffled.records.begin(), shuffled.records.end());
  std::reverse(shuffled.bad_primes.begin(), shuffled.bad_primes.end());
  CHECK(serialize_records(R, shuffled) == bytes);
}

TEST_CASE("module hash separates configurations") {
  const auto h = module_hash(3, 2, {"1", "0,0,2"});
  CHECK(module_hash(2, 2, {"1", "0,0,2"}) != h);
  CHECK(module_hash(3, 2, {"1", "0,0,1"}) != h);
  CHECK(module_hash(3, 2, {"1"}) != h);
  const std::string hex = hash_hex(h);
  CHECK(hex.size() == 16);
  CHECK(hex.find_first_not_of("0123456789abcdef") == std::string::npos);
}

TEST_CASE("parser rejects malformed streams") {
  const PolyRing R{Fq(3)};
  const RecordFile rf = sample_file(R, 2);
  const std::string bytes = serialize_records(R, rf);

  CHECK_THROWS_AS(parse_records(""), std::runtime_error);
  CHECK_THROWS_AS(parse_records("not json\n"), std::runtime_error);

  SECTION("format tag is mandatory") {
    std::string tampered = bytes;
    const auto pos = tampered.find("eldiv-records-1");
    tampered.replace(pos, 15, "eldiv-records-9");
    CHECK_THROWS_AS(parse_records(tampered), std::runtime_error);
  }
  SECTION("config hash must match the module description") {
    std::string tampered = bytes;
    const auto pos = tampered.find(rf.config_hash);
    tampered.replace(pos, 4, "0000");
    CHECK_THROWS_AS(parse_records(tampered), std::runtime_error);
  }
  SECTION("duplicate primes are rejected") {
    std::istringstream in(bytes);
    std::string header, line;
    std::getline(in, header);
    std::getline(in, line);  // bad prime T
    CHECK_THROWS_WITH(parse_records(header + "\n" + line + "\n" + line + "\n"),
                      Catch::Matchers::ContainsSubstring("duplicate"));
  }
  SECTION("truncated trailing line is rejected") {
    const std::string cut = bytes.substr(0, bytes.size() - 10);
    CHECK_THROWS_AS(parse_records(cut), std::runtime_error);
  }
}

TEST_CASE("loading re-validates every record invariant") {
  const PolyRing R{Fq(3)};
  const RecordFile rf = sample_file(R, 3);

  SECTION("swapped divisors are caught") {
    RecordFile broken = rf;
    bool swapped = false;
    for (PrimeRecord& rec : broken.records)
      if (rec.d1 != rec.d2 && !PolyRing::is_unit(rec.d2)) {
        std::swap(rec.d1, rec.d2);
        swapped = true;
        break;
      }
    REQUIRE(swapped);
    CHECK_THROWS_AS(parse_records(serialize_records(R, broken)),
                    ConsistencyError);
  }
  SECTION("wrong unit is caught") {
    // When 1 + a1 = 0 the charpoly at 1 collapses to u*p and the monic
    // normalization hides the unit, so pick a record where it cannot.
    RecordFile broken = rf;
    PrimeRecord* rec = nullptr;
    for (PrimeRecord& r : broken.records)
      if (!PolyRing::is_zero(R.add(R.one(), r.a1))) {
        rec = &r;
        break;
      }
    REQUIRE(rec != nullptr);
    rec->u = FqElem{static_cast<std::uint16_t>(rec->u.v == 1 ? 2 : 1)};
    CHECK_THROWS_WITH(parse_records(serialize_records(R, broken)),
                      Catch::Matchers::ContainsSubstring(
                          "record for prime " + R.to_text(rec->p)));
  }
  SECTION("wrong height is caught") {
    RecordFile broken = rf;
    broken.records.front().height = 3;
    CHECK_THROWS_AS(parse_records(serialize_records(R, broken)),
                    ConsistencyError);
  }
  SECTION("ordinary record with supersingular height is caught") {
    RecordFile broken = rf;
    PrimeRecord* rec = nullptr;
    for (PrimeRecord& r : broken.records)
      if (!PolyRing::is_zero(r.a1)) {
        rec = &r;
        break;
      }
    REQUIRE(rec != nullptr);
    REQUIRE(rec->height == 1);
    rec->height = 2;
    CHECK_THROWS_WITH(parse_records(serialize_records(R, broken)),
                      Catch::Matchers::ContainsSubstring("height"));
  }
  SECTION("reducible bad-prime entry is caught") {
    RecordFile broken = rf;
    broken.bad_primes.push_back(R.from_text("1,2,1"));  // (T+1)^2
    CHECK_THROWS_AS(parse_records(serialize_records(R, broken)),
                    std::runtime_error);
  }
}

TEST_CASE("file save and load round-trip") {
  const PolyRing R{Fq(3)};
  const RecordFile rf = sample_file(R, 2);
  const auto path =
      (std::filesystem::temp_directory_path() / "eldiv_records_test.jsonl")
          .string();
  save_record_file(path, R, rf);
  const RecordFile back = load_record_file(path);
  CHECK(serialize_records(R, back) == serialize_records(R, rf));
  std::filesystem::remove(path);
  CHECK_THROWS_AS(load_record_file(path), std::runtime_error);
}

}  // namespace
