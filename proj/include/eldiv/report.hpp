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

#ifndef ELDIV_REPORT_HPP
#define ELDIV_REPORT_HPP

// Report builders over a loaded RecordFile: per-degree density of a fixed
// first divisor, exponent (second divisor) statistics, and complete-split
// counts for a tracked modulus, each next to its analytic main term.
//
// Degree-dependent truncations: the density main term needs
// cutoff * rank <= x and the exponent main term 2 * cutoff <= x, so both
// builders clamp the configured cutoff per degree and record what was used.
//
// Rendering is split off into ReportTable (title, columns, rows, notes)
// with CSV and plain-text writers; both are deterministic functions of the
// report, so report bytes inherit the determinism of the records.

#include <algorithm>
#include <functional>
#include <iomanip>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "eldiv/analytic.hpp"
#include "eldiv/records.hpp"

namespace eldiv {

struct DensityRow {
  int x = 0;
  long long good = 0;   // good primes of degree x
  long long count = 0;  // of them, those with d1 equal to the target
  int cutoff_used = 0;
  BigRat main;
  std::optional<BigRat> ratio;  // count/main when the main term is nonzero
};

struct DensityReport {
  PolyA d;
  int cutoff = 0;
  std::vector<DensityRow> rows;
  int avg_lo = 0, avg_hi = 0;  // degree window of the weighted average
  BigRat weighted_average;     // mean of x*count/q^x over the window
  TruncatedValue delta;        // series target at the configured cutoff
  std::optional<TruncatedValue> zywina;  // product form, generic model only
};

struct ExponentRow {
  int x = 0;
  long long good = 0;
  int shift = 0;              // f_shift(x)
  long long small_count = 0;  // primes with deg d2 <= x - shift
  BigRat small_fraction;
  BigRat avg_ratio;   // (mean of |d2|) / q^x
  BigRat main_ratio;  // analytic average / q^x
  BigRat tail;
  int cutoff_used = 0;
};

struct ExponentReport {
  std::vector<ExponentRow> rows;
};

struct SplittingRow {
  int x = 0;
  long long eligible = 0;  // good primes of degree x not dividing m
  long long count = 0;     // of them, those with m | d1
  BigRat main;
};

struct SplittingReport {
  PolyA m;
  std::vector<SplittingRow> rows;
  std::vector<PolyA> excluded;  // surveyed primes dividing m
  std::optional<int> inferred_c;
  BigInt division_deg;  // [K(psi[m]) : K] under the degree model
};

namespace detail {

// Degree span [lo, hi] covered by the file, records and bad primes both.
inline bool record_span(const RecordFile& rf, int& lo, int& hi) {
  bool any = false;
  for (const PrimeRecord& rec : rf.records) {
    if (!any || rec.deg < lo) lo = rec.deg;
    if (!any || rec.deg > hi) hi = rec.deg;
    any = true;
  }
  for (const PolyA& p : rf.bad_primes) {
    const int d = PolyRing::deg(p);
    if (!any || d < lo) lo = d;
    if (!any || d > hi) hi = d;
    any = true;
  }
  return any;
}

}  // namespace detail

inline DensityReport report_density(const PolyRing& R, const RecordFile& rf,
                                    const PolyA& d, const DegreeModel& dm,
                                    const ConstantFieldModel& cm, int cutoff,
                                    int avg_window = 3) {
  if (PolyRing::is_zero(d) || R.monic(d) != d)
    throw std::invalid_argument("report_density: d must be monic");
  if (avg_window < 1)
    throw std::invalid_argument("report_density: avg_window must be >= 1");
  DensityReport rep;
  rep.d = d;
  rep.cutoff = cutoff;
  rep.delta = truncated_delta(R, d, dm, cutoff);
  if (dm.mode == DegreeMode::FullGL && dm.r == 2 && dm.gamma == 1)
    rep.zywina = zywina_product(R, d, cutoff);

  int lo = 0, hi = 0;
  if (!detail::record_span(rf, lo, hi)) return rep;
  const BigInt q(R.q());
  for (int x = lo; x <= hi; ++x) {
    DensityRow row;
    row.x = x;
    for (const PrimeRecord& rec : rf.records) {
      if (rec.deg != x) continue;
      ++row.good;
      if (rec.d1 == d) ++row.count;
    }
    row.cutoff_used = std::min(cutoff, x / dm.r);
    row.main = density_main_term(R, x, d, dm, cm, row.cutoff_used);
    if (row.main != 0) row.ratio = BigRat(row.count) / row.main;
    rep.rows.push_back(std::move(row));
  }

  rep.avg_hi = hi;
  rep.avg_lo = std::max(lo, hi - avg_window + 1);
  BigRat sum = 0;
  for (const DensityRow& row : rep.rows)
    if (row.x >= rep.avg_lo)
      sum += BigRat(BigInt(row.count) * row.x,
                    ipow(q, static_cast<unsigned>(row.x)));
  rep.weighted_average = sum / BigRat(rep.avg_hi - rep.avg_lo + 1);
  return rep;
}

inline ExponentReport report_exponent(
    const PolyRing& R, const RecordFile& rf, const DegreeModel& dm,
    const ConstantFieldModel& cm, int cutoff,
    const std::function<int(int)>& f_shift = {}) {
  const auto shift = f_shift ? f_shift : [](int x) { return x / 3; };
  ExponentReport rep;
  int lo = 0, hi = 0;
  if (!detail::record_span(rf, lo, hi)) return rep;
  const BigInt q(R.q());
  for (int x = lo; x <= hi; ++x) {
    ExponentRow row;
    row.x = x;
    row.shift = shift(x);
    BigInt norm_sum = 0;
    for (const PrimeRecord& rec : rf.records) {
      if (rec.deg != x) continue;
      ++row.good;
      if (PolyRing::deg(rec.d2) <= x - row.shift) ++row.small_count;
      norm_sum += ipow(q, static_cast<unsigned>(PolyRing::deg(rec.d2)));
    }
    const BigInt qx = ipow(q, static_cast<unsigned>(x));
    if (row.good > 0) {
      row.small_fraction = BigRat(row.small_count, row.good);
      row.avg_ratio = BigRat(norm_sum, BigInt(row.good) * qx);
    }
    row.cutoff_used = std::min(cutoff, x / 2);
    row.main_ratio =
        average_exponent_main_term(R, x, dm, cm, row.cutoff_used) / BigRat(qx);
    row.tail = average_exponent_tail(R.q(), dm, row.cutoff_used);
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

inline SplittingReport report_splitting(const PolyRing& R,
                                        const RecordFile& rf, const PolyA& m,
                                        const DegreeModel& dm,
                                        const ConstantFieldModel& cm) {
  if (PolyRing::is_zero(m) || R.monic(m) != m)
    throw std::invalid_argument("report_splitting: m must be monic");
  SplittingReport rep;
  rep.m = m;
  rep.division_deg = division_degree(R, dm, m);

  int lo = 0, hi = 0;
  if (!detail::record_span(rf, lo, hi)) return rep;
  std::map<int, long long> counts;
  for (int x = lo; x <= hi; ++x) {
    SplittingRow row;
    row.x = x;
    for (const PrimeRecord& rec : rf.records) {
      if (rec.deg != x) continue;
      if (!PolyRing::is_unit(m) && R.divides(rec.p, m)) {
        rep.excluded.push_back(rec.p);
        continue;
      }
      ++row.eligible;
      if (R.divides(m, rec.d1)) ++row.count;
    }
    counts[row.x] = row.count;
    rep.rows.push_back(std::move(row));
  }
  if (counts.size() >= 4)
    rep.inferred_c = infer_constant_degrees(counts);

  const BigInt q(R.q());
  for (SplittingRow& row : rep.rows) {
    int c;
    if (rep.inferred_c)
      c = row.x % *rep.inferred_c == 0 ? *rep.inferred_c : 0;
    else
      c = constant_degree_at(cm, m, row.x);
    row.main = BigRat(BigInt(c) * ipow(q, static_cast<unsigned>(row.x)),
                      BigInt(row.x) * rep.division_deg);
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Rendering.

struct ReportTable {
  std::string title;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> notes;
};

namespace detail {

inline std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (const char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

inline std::string rat_cell(const BigRat& r) { return decimal_string(r, 12); }

inline std::string rat_note(const BigRat& r) {
  return decimal_string(r, 12) + " (= " + exact_string(r) + ")";
}

}  // namespace detail

inline std::string to_csv(const ReportTable& t) {
  std::ostringstream os;
  for (std::size_t i = 0; i < t.columns.size(); ++i)
    os << (i ? "," : "") << detail::csv_escape(t.columns[i]);
  os << "\n";
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i)
      os << (i ? "," : "") << detail::csv_escape(row[i]);
    os << "\n";
  }
  return os.str();
}

inline std::string to_report_text(const ReportTable& t) {
  std::vector<std::size_t> width(t.columns.size());
  for (std::size_t i = 0; i < t.columns.size(); ++i)
    width[i] = t.columns[i].size();
  for (const auto& row : t.rows)
    for (std::size_t i = 0; i < row.size() && i < width.size(); ++i)
      width[i] = std::max(width[i], row[i].size());
  std::ostringstream os;
  os << t.title << "\n";
  const auto line = [&os, &width](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i)
      os << (i ? "  " : "") << std::setw(static_cast<int>(width[i]))
         << std::right << cells[i];
    os << "\n";
  };
  line(t.columns);
  for (const auto& row : t.rows) line(row);
  for (const std::string& n : t.notes) os << "note: " << n << "\n";
  return os.str();
}

inline ReportTable render_density(const PolyRing& R, const DensityReport& rep) {
  ReportTable t;
  t.title = "density of first divisor d = " + R.to_text(rep.d);
  t.columns = {"x", "good_primes", "count", "cutoff", "main_term", "ratio"};
  for (const DensityRow& row : rep.rows)
    t.rows.push_back({std::to_string(row.x), std::to_string(row.good),
                      std::to_string(row.count),
                      std::to_string(row.cutoff_used),
                      detail::rat_cell(row.main),
                      row.ratio ? detail::rat_cell(*row.ratio) : "-"});
  t.notes.push_back("weighted average of x*count/q^x over degrees " +
                    std::to_string(rep.avg_lo) + ".." +
                    std::to_string(rep.avg_hi) + ": " +
                    detail::rat_note(rep.weighted_average));
  t.notes.push_back("series value at cutoff " + std::to_string(rep.cutoff) +
                    ": " + detail::rat_note(rep.delta.value) + ", tail " +
                    detail::rat_note(rep.delta.tail));
  if (rep.zywina)
    t.notes.push_back("product form at the same cutoff: " +
                      detail::rat_note(rep.zywina->value) + ", tail " +
                      detail::rat_note(rep.zywina->tail));
  return t;
}

inline ReportTable render_exponent(const ExponentReport& rep) {
  ReportTable t;
  t.title = "second-divisor (exponent) statistics";
  t.columns = {"x",        "good_primes",    "shift",       "small_count",
               "fraction", "avg_d2_over_qx", "main_over_qx", "tail",
               "cutoff"};
  for (const ExponentRow& row : rep.rows)
    t.rows.push_back(
        {std::to_string(row.x), std::to_string(row.good),
         std::to_string(row.shift), std::to_string(row.small_count),
         detail::rat_cell(row.small_fraction), detail::rat_cell(row.avg_ratio),
         detail::rat_cell(row.main_ratio), detail::rat_cell(row.tail),
         std::to_string(row.cutoff_used)});
  t.notes.push_back(
      "fraction counts primes whose second divisor has degree <= x - shift");
  return t;
}

inline ReportTable render_splitting(const PolyRing& R,
                                    const SplittingReport& rep) {
  ReportTable t;
  t.title = "complete splitting in the division field of m = " +
            R.to_text(rep.m);
  t.columns = {"x", "eligible", "count", "main_term"};
  for (const SplittingRow& row : rep.rows)
    t.rows.push_back({std::to_string(row.x), std::to_string(row.eligible),
                      std::to_string(row.count),
                      detail::rat_cell(row.main)});
  {
    std::ostringstream os;
    os << "division field degree under the model: " << rep.division_deg;
    t.notes.push_back(os.str());
  }
  t.notes.push_back(
      rep.inferred_c
          ? "inferred constant-field degree: " + std::to_string(*rep.inferred_c)
          : "inferred constant-field degree: none (not enough data)");
  if (!rep.excluded.empty()) {
    std::string s = "excluded primes dividing m:";
    for (const PolyA& p : rep.excluded) s += " " + R.to_text(p);
    t.notes.push_back(s);
  }
  return t;
}

}  // namespace eldiv

#endif  // ELDIV_REPORT_HPP
