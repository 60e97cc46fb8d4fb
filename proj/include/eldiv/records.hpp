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

#ifndef ELDIV_RECORDS_HPP
#define ELDIV_RECORDS_HPP

// JSON-lines persistence for survey output.
//
// Line 1 is a header object {config_hash, format, psi, q, rank}; the psi
// entry lists the tau-coefficients g_1..g_r in text form.  Then come the
// bad primes ({bad, deg, p}) and the per-prime records ({a1, chi, d1, d2,
// deg, height, p, u}), each group sorted by (deg, p) in canonical
// coefficient order.  nlohmann::json serializes object keys sorted, so a
// given RecordFile has exactly one byte representation: determinism is a
// property of the writer, not of whoever filled the struct.
//
// Loading re-validates every record's internal invariants, so a truncated
// or hand-edited file is rejected rather than silently skewing reports.

#include <cstdint>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "eldiv/common.hpp"
#include "eldiv/invariants.hpp"
#include "eldiv/poly.hpp"

namespace eldiv {

inline constexpr const char* kRecordFormat = "eldiv-records-1";

struct RecordFile {
  unsigned q = 0;
  int rank = 0;
  std::vector<std::string> psi;  // g_1..g_r as coefficient text
  std::string config_hash;       // 16 lowercase hex digits
  std::vector<PrimeRecord> records;
  std::vector<PolyA> bad_primes;
};

// FNV-1a (64-bit) over the canonical module description.  Two surveys may
// be merged exactly when these agree.
inline std::uint64_t module_hash(unsigned q, int rank,
                                 const std::vector<std::string>& coeffs) {
  std::ostringstream os;
  os << "q=" << q << ";r=" << rank;
  for (const std::string& c : coeffs) os << ";" << c;
  std::uint64_t h = 14695981039346656037ull;
  for (const char ch : os.str()) {
    h ^= static_cast<unsigned char>(ch);
    h *= 1099511628211ull;
  }
  return h;
}

inline std::string hash_hex(std::uint64_t h) {
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = digits[h & 0xf];
    h >>= 4;
  }
  return out;
}

inline void sort_records(std::vector<PrimeRecord>& recs) {
  std::sort(recs.begin(), recs.end(),
            [](const PrimeRecord& x, const PrimeRecord& y) {
              if (x.deg != y.deg) return x.deg < y.deg;
              return PolyLess{}(x.p, y.p);
            });
}

inline void sort_primes(std::vector<PolyA>& ps) {
  std::sort(ps.begin(), ps.end(), [](const PolyA& x, const PolyA& y) {
    if (PolyRing::deg(x) != PolyRing::deg(y))
      return PolyRing::deg(x) < PolyRing::deg(y);
    return PolyLess{}(x, y);
  });
}

// Internal consistency of one persisted record.  Throws ConsistencyError
// naming the prime; does not recompute the torsion structure (that is the
// oracle's job), only everything derivable from (p, a1, u, d1, d2).
inline void validate_record(const PolyRing& R, int rank,
                            const PrimeRecord& rec) {
  const auto bad = [&R, &rec](const std::string& what) {
    throw ConsistencyError("record for prime " + R.to_text(rec.p) + ": " +
                           what);
  };
  if (rec.deg < 1 || PolyRing::deg(rec.p) != rec.deg)
    bad("stored degree disagrees with p");
  if (R.monic(rec.p) != rec.p || !R.is_irreducible(rec.p))
    bad("p is not monic irreducible");
  if (rec.height < 1 || rec.height > rank) bad("height out of range");
  if (rec.u.v == 0 || rec.u.v >= R.q()) bad("u is not a unit");
  if (2 * PolyRing::deg(rec.a1) > rec.deg) bad("a1 exceeds the degree bound");
  // height 2 means a1 vanishes mod p, which the degree bound sharpens to
  // a1 = 0; conversely a1 = 0 forces the supersingular height
  if ((rec.height == 2) != PolyRing::is_zero(rec.a1))
    bad("height disagrees with the trace");
  const PolyA up = R.scale(rec.u, rec.p);
  const PolyA chi = R.monic(R.add(R.add(R.one(), rec.a1), up));
  if (chi != rec.chi || PolyRing::deg(rec.chi) != rec.deg)
    bad("chi does not match monic(1 + a1 + u p)");
  if (R.monic(rec.d1) != rec.d1 || R.monic(rec.d2) != rec.d2)
    bad("divisors are not monic");
  if (R.mul(rec.d1, rec.d2) != rec.chi) bad("d1 d2 != chi");
  if (!R.divides(rec.d1, rec.d2)) bad("d1 does not divide d2");
  if (!R.divides(R.mul(rec.d1, rec.d1), rec.chi))
    bad("d1^2 does not divide chi");
  if (!PolyRing::is_unit(R.gcd(rec.d1, rec.p))) bad("d1 shares a factor with p");
  if (!R.divides(rec.d1, R.sub(R.one(), up))) bad("d1 does not divide 1 - u p");
}

inline std::string serialize_records(const PolyRing& R, const RecordFile& rf) {
  using nlohmann::json;
  RecordFile sorted = rf;
  sort_records(sorted.records);
  sort_primes(sorted.bad_primes);
  std::ostringstream os;
  os << json{{"config_hash", sorted.config_hash},
             {"format", kRecordFormat},
             {"psi", sorted.psi},
             {"q", sorted.q},
             {"rank", sorted.rank}}
            .dump()
     << "\n";
  for (const PolyA& p : sorted.bad_primes)
    os << json{{"bad", true}, {"deg", PolyRing::deg(p)}, {"p", R.to_text(p)}}
              .dump()
       << "\n";
  for (const PrimeRecord& rec : sorted.records)
    os << json{{"a1", R.to_text(rec.a1)},
               {"chi", R.to_text(rec.chi)},
               {"d1", R.to_text(rec.d1)},
               {"d2", R.to_text(rec.d2)},
               {"deg", rec.deg},
               {"height", rec.height},
               {"p", R.to_text(rec.p)},
               {"u", rec.u.v}}
              .dump()
       << "\n";
  return os.str();
}

// Parses and fully validates a record stream.  Throws std::runtime_error
// on malformed input and ConsistencyError on records that fail their
// internal invariants.
inline RecordFile parse_records(const std::string& content) {
  using nlohmann::json;
  std::istringstream in(content);
  std::string line;
  long long lineno = 0;
  const auto syntax = [&lineno](const std::string& what) {
    throw std::runtime_error("records line " + std::to_string(lineno) + ": " +
                             what);
  };

  RecordFile rf;
  if (!std::getline(in, line)) throw std::runtime_error("records: empty file");
  ++lineno;
  json header;
  try {
    header = json::parse(line);
  } catch (const json::exception& e) {
    syntax(e.what());
  }
  if (!header.contains("format") || header["format"] != kRecordFormat)
    syntax("missing or unsupported format tag");
  rf.q = header.at("q").get<unsigned>();
  rf.rank = header.at("rank").get<int>();
  rf.psi = header.at("psi").get<std::vector<std::string>>();
  rf.config_hash = header.at("config_hash").get<std::string>();
  if (rf.q != 2 && rf.q != 3 && rf.q != 4 && rf.q != 5)
    syntax("unsupported q");
  if (rf.rank != 2) syntax("only rank 2 record files are supported");
  if (static_cast<int>(rf.psi.size()) != rf.rank)
    syntax("psi coefficient count disagrees with rank");
  if (rf.config_hash != hash_hex(module_hash(rf.q, rf.rank, rf.psi)))
    syntax("config hash does not match the module description");

  const Fq F(rf.q);
  const PolyRing R(F);
  std::vector<PolyA> seen;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    json j;
    try {
      j = json::parse(line);
    } catch (const json::exception& e) {
      syntax(e.what());
    }
    try {
      if (j.contains("bad")) {
        const PolyA p = R.from_text(j.at("p").get<std::string>());
        if (PolyRing::deg(p) != j.at("deg").get<int>() ||
            R.monic(p) != p || !R.is_irreducible(p))
          syntax("bad-prime entry is not a monic irreducible of its degree");
        seen.push_back(p);
        rf.bad_primes.push_back(p);
        continue;
      }
      PrimeRecord rec;
      rec.p = R.from_text(j.at("p").get<std::string>());
      rec.deg = j.at("deg").get<int>();
      rec.height = j.at("height").get<int>();
      rec.a1 = R.from_text(j.at("a1").get<std::string>());
      rec.u = FqElem{j.at("u").get<std::uint16_t>()};
      rec.chi = R.from_text(j.at("chi").get<std::string>());
      rec.d1 = R.from_text(j.at("d1").get<std::string>());
      rec.d2 = R.from_text(j.at("d2").get<std::string>());
      validate_record(R, rf.rank, rec);
      seen.push_back(rec.p);
      rf.records.push_back(std::move(rec));
    } catch (const json::exception& e) {
      syntax(e.what());
    }
  }

  std::vector<PolyA> dedup = seen;
  sort_primes(dedup);
  for (std::size_t i = 1; i < dedup.size(); ++i)
    if (dedup[i] == dedup[i - 1])
      throw std::runtime_error("records: duplicate prime " +
                               R.to_text(dedup[i]));
  sort_records(rf.records);
  sort_primes(rf.bad_primes);
  return rf;
}

inline void save_record_file(const std::string& path, const PolyRing& R,
                             const RecordFile& rf) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << serialize_records(R, rf);
  if (!out) throw std::runtime_error("write failed: " + path);
}

inline RecordFile load_record_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_records(buf.str());
}

}  // namespace eldiv

#endif  // ELDIV_RECORDS_HPP
