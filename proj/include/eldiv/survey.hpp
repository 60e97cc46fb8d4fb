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

#ifndef ELDIV_SURVEY_HPP
#define ELDIV_SURVEY_HPP

// Survey driver: enumerate the monic irreducibles degree by degree, reduce
// the module at each one, compute the per-prime record, and collect
// everything into a RecordFile.
//
// Parallelism never touches the output order.  The prime list is fixed up
// front in canonical order, workers pull indices from an atomic counter and
// write into their own slot, and the merged result is sorted before
// serialization; the bytes on disk depend only on the config.

#include <atomic>
#include <cctype>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "eldiv/analytic.hpp"
#include "eldiv/common.hpp"
#include "eldiv/drinfeld.hpp"
#include "eldiv/invariants.hpp"
#include "eldiv/records.hpp"

namespace eldiv {

struct SurveyConfig {
  unsigned q = 0;
  int rank = 0;
  std::vector<std::string> coeffs;  // g1..g_rank, coefficient text
  int deg_min = 1;
  int deg_max = 0;
  std::vector<std::string> targets;  // divisors/moduli the reports track
  int cutoff = 3;
  int gamma = 1;
  std::string degree_model = "full-gl";  // "full-gl" or "table"
  std::map<std::string, std::string> degree_table;
  std::string constant_field = "trivial";  // "trivial" or "table"
  std::map<std::string, int> constant_table;
  int workers = 1;
  long long work_ceiling = 100000000;  // bound on q^{deg_max}
  std::string out;                     // default output path
};

namespace detail {

inline std::string trim_ws(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

inline std::vector<std::string> split_tokens(const std::string& s) {
  std::istringstream is(s);
  std::vector<std::string> out;
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

inline long long parse_ll(const std::string& key, const std::string& v) {
  std::size_t pos = 0;
  long long n = 0;
  try {
    n = std::stoll(v, &pos);
  } catch (const std::exception&) {
    throw std::runtime_error("config key " + key + ": not an integer: " + v);
  }
  if (pos != v.size())
    throw std::runtime_error("config key " + key + ": not an integer: " + v);
  return n;
}

// "poly:value" pairs separated by whitespace.
inline std::map<std::string, std::string> parse_pair_list(
    const std::string& key, const std::string& v) {
  std::map<std::string, std::string> out;
  for (const std::string& tok : split_tokens(v)) {
    const std::size_t colon = tok.rfind(':');
    if (colon == std::string::npos || colon == 0 || colon + 1 == tok.size())
      throw std::runtime_error("config key " + key +
                               ": expected poly:value, got " + tok);
    out[tok.substr(0, colon)] = tok.substr(colon + 1);
  }
  return out;
}

}  // namespace detail

// Flat key=value format; '#' starts a comment, blank lines are skipped,
// unknown or repeated keys are errors.
inline SurveyConfig parse_survey_config(const std::string& text) {
  SurveyConfig cfg;
  std::map<int, std::string> g;
  std::set<std::string> seen;
  std::istringstream in(text);
  std::string line;
  long long lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = detail::trim_ws(line);
    if (line.empty()) continue;
    const std::size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw std::runtime_error("config line " + std::to_string(lineno) +
                               ": expected key=value");
    const std::string key = detail::trim_ws(line.substr(0, eq));
    const std::string value = detail::trim_ws(line.substr(eq + 1));
    if (key.empty() || value.empty())
      throw std::runtime_error("config line " + std::to_string(lineno) +
                               ": empty key or value");
    if (!seen.insert(key).second)
      throw std::runtime_error("config line " + std::to_string(lineno) +
                               ": repeated key " + key);
    if (key.size() >= 2 && key[0] == 'g' &&
        std::isdigit(static_cast<unsigned char>(key[1]))) {
      g[static_cast<int>(detail::parse_ll(key, key.substr(1)))] = value;
    } else if (key == "q") {
      cfg.q = static_cast<unsigned>(detail::parse_ll(key, value));
    } else if (key == "rank") {
      cfg.rank = static_cast<int>(detail::parse_ll(key, value));
    } else if (key == "deg_min") {
      cfg.deg_min = static_cast<int>(detail::parse_ll(key, value));
    } else if (key == "deg_max") {
      cfg.deg_max = static_cast<int>(detail::parse_ll(key, value));
    } else if (key == "targets") {
      cfg.targets = detail::split_tokens(value);
    } else if (key == "cutoff") {
      cfg.cutoff = static_cast<int>(detail::parse_ll(key, value));
    } else if (key == "gamma") {
      cfg.gamma = static_cast<int>(detail::parse_ll(key, value));
    } else if (key == "degree_model") {
      cfg.degree_model = value;
    } else if (key == "degree_table") {
      cfg.degree_table = detail::parse_pair_list(key, value);
    } else if (key == "constant_field") {
      cfg.constant_field = value;
    } else if (key == "constant_table") {
      for (const auto& [k, v] : detail::parse_pair_list(key, value))
        cfg.constant_table[k] =
            static_cast<int>(detail::parse_ll("constant_table." + k, v));
    } else if (key == "workers") {
      cfg.workers = static_cast<int>(detail::parse_ll(key, value));
    } else if (key == "work_ceiling") {
      cfg.work_ceiling = detail::parse_ll(key, value);
    } else if (key == "out") {
      cfg.out = value;
    } else {
      throw std::runtime_error("config line " + std::to_string(lineno) +
                               ": unknown key " + key);
    }
  }
  for (int i = 1; i <= cfg.rank; ++i) {
    const auto it = g.find(i);
    if (it == g.end())
      throw std::runtime_error("config: missing coefficient g" +
                               std::to_string(i));
    cfg.coeffs.push_back(it->second);
  }
  if (static_cast<int>(g.size()) != cfg.rank)
    throw std::runtime_error("config: coefficient keys exceed the rank");
  return cfg;
}

// Canonicalizes the polynomial texts and checks every stated invariant.
// Returns the ring so callers parse with the same field.
inline PolyRing validate_survey_config(SurveyConfig& cfg) {
  if (cfg.q != 2 && cfg.q != 3 && cfg.q != 4 && cfg.q != 5)
    throw std::runtime_error("config: q must be one of 2, 3, 4, 5");
  if (cfg.rank != 2)
    throw std::runtime_error(
        "config: rank must be 2 (the charpoly pipeline is rank-2 only)");
  if (cfg.deg_min < 1) throw std::runtime_error("config: deg_min must be >= 1");
  if (cfg.deg_max < 0) throw std::runtime_error("config: deg_max must be >= 0");
  if (cfg.work_ceiling < 1)
    throw std::runtime_error("config: work_ceiling must be >= 1");
  if (ipow(BigInt(cfg.q), static_cast<unsigned>(std::max(cfg.deg_max, 0))) >
      BigInt(cfg.work_ceiling))
    throw std::runtime_error("config: q^deg_max exceeds the work ceiling");
  if (cfg.workers < 1 || cfg.workers > 256)
    throw std::runtime_error("config: workers must be in [1, 256]");
  if (cfg.cutoff < 0) throw std::runtime_error("config: cutoff must be >= 0");
  if (cfg.gamma < 1 || cfg.gamma > cfg.rank)
    throw std::runtime_error("config: gamma must be in [1, rank]");
  if (cfg.degree_model != "full-gl" && cfg.degree_model != "table")
    throw std::runtime_error("config: degree_model must be full-gl or table");
  if (cfg.constant_field != "trivial" && cfg.constant_field != "table")
    throw std::runtime_error(
        "config: constant_field must be trivial or table");

  const Fq F(cfg.q);
  PolyRing R(F);
  for (std::string& c : cfg.coeffs) c = R.to_text(R.from_text(c));
  if (PolyRing::is_zero(R.from_text(cfg.coeffs.back())))
    throw std::runtime_error("config: the leading coefficient g" +
                             std::to_string(cfg.rank) + " must be nonzero");
  for (std::string& t : cfg.targets) {
    const PolyA d = R.from_text(t);
    if (PolyRing::is_zero(d) || R.monic(d) != d)
      throw std::runtime_error("config: target " + t + " must be monic");
    t = R.to_text(d);
  }
  return R;
}

inline DegreeModel degree_model_from(const SurveyConfig& cfg,
                                     const PolyRing& R) {
  if (cfg.degree_model == "full-gl")
    return DegreeModel::full_gl(cfg.rank, cfg.gamma);
  std::map<PolyA, BigInt, PolyLess> table;
  for (const auto& [poly, value] : cfg.degree_table)
    table[R.from_text(poly)] = BigInt(value);
  return DegreeModel::user_table(cfg.rank, cfg.gamma, std::move(table));
}

inline ConstantFieldModel constant_model_from(const SurveyConfig& cfg,
                                              const PolyRing& R) {
  if (cfg.constant_field == "trivial") return ConstantFieldModel::trivial();
  std::map<PolyA, int, PolyLess> table;
  for (const auto& [poly, value] : cfg.constant_table)
    table[R.from_text(poly)] = value;
  return ConstantFieldModel::user_table(std::move(table));
}

// Runs the sweep.  With resume_from nonempty, primes already present in
// that file are kept as-is and only the missing ones are computed; the
// stored config hash must match.
inline RecordFile run_survey(SurveyConfig cfg,
                             const std::string& resume_from = "") {
  const PolyRing R = validate_survey_config(cfg);
  std::vector<PolyA> gs;
  gs.reserve(cfg.coeffs.size());
  for (const std::string& c : cfg.coeffs) gs.push_back(R.from_text(c));
  const DrinfeldModule M(R, gs);

  RecordFile rf;
  rf.q = cfg.q;
  rf.rank = cfg.rank;
  rf.psi = cfg.coeffs;
  rf.config_hash = hash_hex(module_hash(cfg.q, cfg.rank, cfg.coeffs));

  std::set<PolyA, PolyLess> done;
  if (!resume_from.empty()) {
    RecordFile prev = load_record_file(resume_from);
    if (prev.config_hash != rf.config_hash)
      throw std::runtime_error(
          "resume: existing records were produced by a different config");
    for (const PrimeRecord& rec : prev.records) done.insert(rec.p);
    for (const PolyA& p : prev.bad_primes) done.insert(p);
    rf.records = std::move(prev.records);
    rf.bad_primes = std::move(prev.bad_primes);
  }

  std::vector<PolyA> pending;
  for (int x = cfg.deg_min; x <= cfg.deg_max; ++x)
    for (PolyA& p : R.irreducibles_of_degree(x))
      if (!done.count(p)) pending.push_back(std::move(p));

  struct Slot {
    std::optional<PrimeRecord> record;
    bool bad = false;
    std::string error;
  };
  std::vector<Slot> slots(pending.size());
  std::atomic<std::size_t> next{0};
  const int workers =
      std::max(1, std::min<int>(cfg.workers,
                                static_cast<int>(pending.size() ? pending.size()
                                                                : 1)));
  const auto work = [&]() {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= pending.size()) return;
      const PolyA& p = pending[i];
      try {
        std::optional<ReducedModule> Mp = reduce(M, p);
        if (!Mp) {
          slots[i].bad = true;
        } else {
          slots[i].record = compute_record(*Mp);
        }
      } catch (const std::exception& e) {
        slots[i].error =
            "prime " + R.to_text(p) + ": " + e.what();
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) pool.emplace_back(work);
  for (std::thread& t : pool) t.join();

  for (std::size_t i = 0; i < slots.size(); ++i) {
    if (!slots[i].error.empty()) throw ConsistencyError(slots[i].error);
    if (slots[i].bad)
      rf.bad_primes.push_back(pending[i]);
    else
      rf.records.push_back(std::move(*slots[i].record));
  }
  sort_records(rf.records);
  sort_primes(rf.bad_primes);
  return rf;
}

}  // namespace eldiv

#endif  // ELDIV_SURVEY_HPP
