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

#include <filesystem>
#include <string>

#include <catch2/catch_amalgamated.hpp>

#include "eldiv/survey.hpp"

namespace {

using namespace eldiv;

const char* kZywinaConfig = R"(
# survey of psi_T = T + tau + 2 T^2 tau^2 over F_3
q = 3
rank = 2
g1 = 1
g2 = 0,0,2
deg_min = 1
deg_max = 3
targets = 1 0,1
cutoff = 2
workers = 2
out = zywina.jsonl
)";

SurveyConfig zywina_config() { return parse_survey_config(kZywinaConfig); }

TEST_CASE("config parsing reads the flat key=value format") {
  SurveyConfig cfg = zywina_config();
  CHECK(cfg.q == 3);
  CHECK(cfg.rank == 2);
  CHECK(cfg.coeffs == std::vector<std::string>{"1", "0,0,2"});
  CHECK(cfg.deg_min == 1);
  CHECK(cfg.deg_max == 3);
  CHECK(cfg.targets == std::vector<std::string>{"1", "0,1"});
  CHECK(cfg.cutoff == 2);
  CHECK(cfg.workers == 2);
  CHECK(cfg.out == "zywina.jsonl");
  // defaults survive when keys are absent
  CHECK(cfg.gamma == 1);
  CHECK(cfg.degree_model == "full-gl");
  CHECK(cfg.constant_field == "trivial");
  CHECK(cfg.work_ceiling == 100000000);
  CHECK_NOTHROW(validate_survey_config(cfg));
}

TEST_CASE("config parsing rejects malformed input") {
  CHECK_THROWS_WITH(parse_survey_config("q = 3\nbogus_key = 1\n"),
                    Catch::Matchers::ContainsSubstring("unknown key"));
  CHECK_THROWS_WITH(parse_survey_config("q = 3\nq = 2\n"),
                    Catch::Matchers::ContainsSubstring("repeated key"));
  CHECK_THROWS_WITH(parse_survey_config("q\n"),
                    Catch::Matchers::ContainsSubstring("key=value"));
  CHECK_THROWS_WITH(parse_survey_config("q = 3\nrank = 2\ng1 = 1\n"),
                    Catch::Matchers::ContainsSubstring("missing coefficient"));
  CHECK_THROWS_WITH(
      parse_survey_config("q = 3\nrank = 1\ng1 = 1\ng2 = 1\n"),
      Catch::Matchers::ContainsSubstring("exceed the rank"));
  CHECK_THROWS_WITH(parse_survey_config("deg_min = x\n"),
                    Catch::Matchers::ContainsSubstring("not an integer"));
}

TEST_CASE("config validation enforces the stated invariants") {
  const auto broken = [](const std::string& key, const std::string& value) {
    SurveyConfig cfg = zywina_config();
    if (key == "q") cfg.q = static_cast<unsigned>(std::stoul(value));
    if (key == "rank") cfg.rank = std::stoi(value);
    if (key == "deg_min") cfg.deg_min = std::stoi(value);
    if (key == "deg_max") cfg.deg_max = std::stoi(value);
    if (key == "workers") cfg.workers = std::stoi(value);
    if (key == "gamma") cfg.gamma = std::stoi(value);
    if (key == "work_ceiling") cfg.work_ceiling = std::stoll(value);
    if (key == "g2") cfg.coeffs.back() = value;
    if (key == "target") cfg.targets = {value};
    return cfg;
  };
  for (auto [key, value] : std::vector<std::pair<std::string, std::string>>{
           {"q", "6"},
           {"rank", "1"},
           {"deg_min", "0"},
           {"workers", "0"},
           {"gamma", "3"},
           {"work_ceiling", "9"},  // 3^3 = 27 > 9
           {"g2", "0"},
           {"target", "1,2"}}) {  // leading coefficient 2, not monic
    SurveyConfig cfg = broken(key, value);
    INFO("key " << key << " = " << value);
    CHECK_THROWS_AS(validate_survey_config(cfg), std::runtime_error);
  }
  SurveyConfig cfg = zywina_config();
  cfg.rank = 3;  // the charpoly pipeline is rank-2 only
  cfg.coeffs = {"1", "1", "1"};
  CHECK_THROWS_AS(validate_survey_config(cfg), std::runtime_error);
}

TEST_CASE("survey counts per degree match the irreducible census") {
  SurveyConfig cfg = zywina_config();
  const RecordFile rf = run_survey(cfg);
  const PolyRing R{Fq(3)};
  // T divides g2 = 2T^2, so T is the unique bad prime
  REQUIRE(rf.bad_primes.size() == 1);
  CHECK(R.to_text(rf.bad_primes.front()) == "0,1");
  std::map<int, long long> per_degree;
  for (const PrimeRecord& rec : rf.records) ++per_degree[rec.deg];
  CHECK(per_degree[1] == 2);  // 3 irreducibles minus the bad one
  CHECK(per_degree[2] == 3);
  CHECK(per_degree[3] == 8);
  CHECK(rf.config_hash == hash_hex(module_hash(3, 2, {"1", "0,0,2"})));
}

TEST_CASE("empty degree range gives an empty record file") {
  SurveyConfig cfg = zywina_config();
  cfg.deg_min = 4;
  cfg.deg_max = 3;
  const RecordFile rf = run_survey(cfg);
  CHECK(rf.records.empty());
  CHECK(rf.bad_primes.empty());
}

TEST_CASE("worker count does not change the output bytes") {
  const PolyRing R{Fq(3)};
  SurveyConfig one = zywina_config();
  one.workers = 1;
  SurveyConfig many = zywina_config();
  many.workers = 7;
  const std::string b1 = serialize_records(R, run_survey(one));
  const std::string b2 = serialize_records(R, run_survey(many));
  CHECK(b1 == b2);
  CHECK(b1 == serialize_records(R, run_survey(one)));  // rerun, same bytes
}

TEST_CASE("resume skips present primes and completes the range") {
  const PolyRing R{Fq(3)};
  const auto path =
      (std::filesystem::temp_directory_path() / "eldiv_survey_resume.jsonl")
          .string();
  SurveyConfig partial = zywina_config();
  partial.deg_max = 2;
  save_record_file(path, R, run_survey(partial));

  SurveyConfig full = zywina_config();
  const std::string direct = serialize_records(R, run_survey(full));
  const std::string resumed = serialize_records(R, run_survey(full, path));
  CHECK(resumed == direct);

  SECTION("a different module cannot resume from the file") {
    SurveyConfig other = zywina_config();
    other.coeffs = {"1", "0,0,1"};
    CHECK_THROWS_WITH(run_survey(other, path),
                      Catch::Matchers::ContainsSubstring("different config"));
  }
  std::filesystem::remove(path);
}

}  // namespace
