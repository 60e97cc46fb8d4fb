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

#ifndef ELDIV_ANALYTIC_HPP
#define ELDIV_ANALYTIC_HPP

// Exact-rational main terms for the statistics of elementary divisors over a
// prime survey: truncated Moebius series for split densities, Euler products,
// and the average size of the large divisor. Every truncation comes with an
// explicit tail bound so reports can show value +- tail instead of a bare
// approximation.
//
// Division field degrees are modeled, not computed: the generic expectation
// is the full matrix group, [K(psi[a]):K] = #GL_r(A/a), and a user table
// covers exceptional moduli when the caller knows better. gamma is the rank
// of the endomorphism ring and enters only through the tail exponent r^2 /
// gamma; it stays 1 unless the module has extra endomorphisms.

#include <map>
#include <optional>

#include "eldiv/factor.hpp"
#include "eldiv/rational.hpp"

namespace eldiv {

enum class DegreeMode { FullGL, UserTable };

struct DegreeModel {
  DegreeMode mode = DegreeMode::FullGL;
  int r = 2;
  int gamma = 1;
  std::map<PolyA, BigInt, PolyLess> table;

  static DegreeModel full_gl(int r, int gamma = 1) {
    check(r, gamma);
    return DegreeModel{DegreeMode::FullGL, r, gamma, {}};
  }
  static DegreeModel user_table(int r, int gamma, std::map<PolyA, BigInt, PolyLess> table) {
    check(r, gamma);
    return DegreeModel{DegreeMode::UserTable, r, gamma, std::move(table)};
  }

 private:
  static void check(int r, int gamma) {
    if (r < 1) throw std::invalid_argument("DegreeModel: rank must be >= 1");
    if (gamma < 1 || gamma > r)
      throw std::invalid_argument("DegreeModel: gamma must lie in [1, rank]");
  }
};

// [K(psi[a]) : K] under the model.
inline BigInt division_degree(const PolyRing& R, const DegreeModel& model, const PolyA& a) {
  if (model.mode == DegreeMode::FullGL) return count_gl(R, model.r, a);
  const auto it = model.table.find(a);
  if (it == model.table.end())
    throw std::invalid_argument("division_degree: modulus missing from user table");
  return it->second;
}

enum class ConstantFieldMode { Trivial, Empirical, UserTable };

struct ConstantFieldModel {
  ConstantFieldMode mode = ConstantFieldMode::Trivial;
  std::map<PolyA, int, PolyLess> table;

  static ConstantFieldModel trivial() { return {}; }
  static ConstantFieldModel user_table(std::map<PolyA, int, PolyLess> t) {
    return ConstantFieldModel{ConstantFieldMode::UserTable, std::move(t)};
  }
  static ConstantFieldModel empirical(std::map<PolyA, int, PolyLess> t) {
    return ConstantFieldModel{ConstantFieldMode::Empirical, std::move(t)};
  }
};

// c_m: degree of the constant field inside the m-division field.
inline int constant_degree(const ConstantFieldModel& model, const PolyA& m) {
  if (model.mode == ConstantFieldMode::Trivial) return 1;
  const auto it = model.table.find(m);
  if (it == model.table.end())
    throw std::invalid_argument("constant_degree: modulus missing from table");
  if (it->second < 1) throw std::invalid_argument("constant_degree: degrees are >= 1");
  return it->second;
}

// c_m(x): c_m when c_m | x, else 0; primes of degree x can only split
// completely in constant extensions whose degree divides x.
inline int constant_degree_at(const ConstantFieldModel& model, const PolyA& m, int x) {
  const int c = constant_degree(model, m);
  return x % c == 0 ? c : 0;
}

// Number of monic polynomials of degree at most y.
inline BigInt monic_count_upto(unsigned q, int y) {
  if (y < 0) return 0;
  return (ipow(BigInt(q), static_cast<unsigned>(y) + 1) - 1) / (BigInt(q) - 1);
}

// Exact value of sum_{a != 0, deg a > y} |a|^{-alpha} over all of A:
// each degree t contributes (q-1) q^t numerators, and the geometric series
// collapses to (q-1) / (w^y (w - 1)) with w = q^{alpha-1}.
inline BigRat norm_power_tail(unsigned q, int y, int alpha) {
  if (alpha < 2) throw std::invalid_argument("norm_power_tail: alpha must be >= 2");
  if (y < 0) throw std::invalid_argument("norm_power_tail: y must be >= 0");
  const BigInt w = ipow(BigInt(q), static_cast<unsigned>(alpha - 1));
  return BigRat(BigInt(q) - 1, ipow(w, static_cast<unsigned>(y)) * (w - 1));
}

struct TruncatedValue {
  BigRat value;
  BigRat tail;
};

namespace detail {

// Tail of the Moebius series past the cutoff, using the degree lower bound
// |md|^{r^2/gamma} up to a constant: q^{-(beta-1)(cutoff+1)} * q/(1-q^{1-beta})
// with beta = r^2/gamma, which must be an integer >= 2 for exact arithmetic.
inline BigRat mobius_series_tail(unsigned q, const DegreeModel& model, int cutoff) {
  if ((model.r * model.r) % model.gamma != 0)
    throw std::invalid_argument("series tail: r^2/gamma must be an integer");
  const int beta = model.r * model.r / model.gamma;
  if (beta < 2) throw std::invalid_argument("series tail: r^2/gamma must be >= 2");
  const BigInt w = ipow(BigInt(q), static_cast<unsigned>(beta - 1));  // q^{beta-1}
  // q^{-(beta-1)(cutoff+1)} * q * q^{beta-1} / (q^{beta-1} - 1).
  return BigRat(BigInt(q) * w, ipow(w, static_cast<unsigned>(cutoff) + 1) * (w - 1));
}

}  // namespace detail

// Truncation of sum_m mu(m) / [K(psi[md]):K] over monic m with deg <= cutoff:
// the density of primes whose first elementary divisor is exactly d.
inline TruncatedValue truncated_delta(const PolyRing& R, const PolyA& d, const DegreeModel& model,
                                      int cutoff) {
  if (!R.is_monic(d)) throw std::invalid_argument("truncated_delta: d must be monic");
  if (cutoff < 0) throw std::invalid_argument("truncated_delta: cutoff must be >= 0");
  BigRat s = 0;
  for (int y = 0; y <= cutoff; ++y)
    for (const PolyA& m : R.monics_of_degree(y)) {
      const int mu = mobius(R, m);
      if (mu == 0) continue;
      s += BigRat(mu) / BigRat(division_degree(R, model, R.mul(m, d)));
    }
  return {s, detail::mobius_series_tail(R.q(), model, cutoff)};
}

// prod_{deg ell <= cutoff} (1 - 1/#GL_2(A/(ell d))) over monic primes ell,
// with the remaining factors bounded through sum 2 |ell d|^{-4}.
inline TruncatedValue zywina_product(const PolyRing& R, const PolyA& d, int cutoff) {
  if (!R.is_monic(d)) throw std::invalid_argument("zywina_product: d must be monic");
  if (cutoff < 0) throw std::invalid_argument("zywina_product: cutoff must be >= 0");
  BigRat v = 1;
  for (int y = 1; y <= cutoff; ++y)
    for (const PolyA& ell : R.irreducibles_of_degree(y))
      v *= 1 - BigRat(1, count_gl(R, 2, R.mul(ell, d)));
  const BigInt q3 = ipow(BigInt(R.q()), 3);
  const BigInt nd4 = ipow(R.norm(d), 4);
  const BigRat tail = BigRat(2 * q3, nd4 * ipow(q3, static_cast<unsigned>(cutoff) + 1) * (q3 - 1));
  return {v, tail};
}

// sum_{ab = m, monic} mu(a)/|b|, in closed form (-1)^omega phi(rad m)/|m|.
inline BigRat mobius_norm_convolution(const PolyRing& R, const PolyA& m) {
  if (!R.is_monic(m)) throw std::invalid_argument("mobius_norm_convolution: m must be monic");
  const int w = omega(R, m);
  const BigInt sign = w % 2 == 0 ? 1 : -1;
  return BigRat(sign * euler_phi(R, radical(R, m)), R.norm(m));
}

// Expected count of degree-x primes whose first divisor is a multiple of d:
// (q^x/x) sum_{deg m <= cutoff} mu(m) c_{md}(x) / [K(psi[md]):K].
inline BigRat density_main_term(const PolyRing& R, int x, const PolyA& d, const DegreeModel& dm,
                                const ConstantFieldModel& cm, int cutoff) {
  if (x < 1) throw std::invalid_argument("density_main_term: x must be >= 1");
  if (cutoff < 0 || cutoff * dm.r > x)
    throw std::invalid_argument("density_main_term: cutoff must satisfy cutoff * r <= x");
  if (!R.is_monic(d)) throw std::invalid_argument("density_main_term: d must be monic");
  BigRat s = 0;
  for (int y = 0; y <= cutoff; ++y)
    for (const PolyA& m : R.monics_of_degree(y)) {
      const int mu = mobius(R, m);
      if (mu == 0) continue;
      const PolyA md = R.mul(m, d);
      const int c = constant_degree_at(cm, md, x);
      if (c == 0) continue;
      s += BigRat(mu * c) / BigRat(division_degree(R, dm, md));
    }
  return BigRat(ipow(BigInt(R.q()), static_cast<unsigned>(x)), x) * s;
}

// Expected average of |d2| over degree-x primes:
// q^x sum_{deg m <= cutoff} c_m(x)/[K(psi[m]):K] * sum_{ab=m} mu(a)/|b|.
inline BigRat average_exponent_main_term(const PolyRing& R, int x, const DegreeModel& dm,
                                         const ConstantFieldModel& cm, int cutoff) {
  if (x < 1) throw std::invalid_argument("average_exponent_main_term: x must be >= 1");
  if (cutoff < 0 || 2 * cutoff > x)
    throw std::invalid_argument("average_exponent_main_term: cutoff must satisfy 2 * cutoff <= x");
  BigRat s = 0;
  for (int y = 0; y <= cutoff; ++y)
    for (const PolyA& m : R.monics_of_degree(y)) {
      const int c = constant_degree_at(cm, m, x);
      if (c == 0) continue;
      s += BigRat(c) / BigRat(division_degree(R, dm, m)) * mobius_norm_convolution(R, m);
    }
  return BigRat(ipow(BigInt(R.q()), static_cast<unsigned>(x))) * s;
}

// Tail bound for the exponent series truncation.  Each term past the
// cutoff is at most 1/[K(psi[m]):K] in absolute value (the Moebius-norm
// convolution has |value| <= 1 and constant degrees contribute 0 or c with
// the same c = 1 convention as the density tail), so the density series
// bound applies verbatim.
inline BigRat average_exponent_tail(unsigned q, const DegreeModel& model, int cutoff) {
  return detail::mobius_series_tail(q, model, cutoff);
}

// Smallest c >= 1 with the counts vanishing exactly at the degrees c does
// not divide; nothing when every count is zero or no period fits.
//
// Degrees before the first positive count carry no period information:
// expected counts grow like q^x/x, so at small x a zero is the likely
// outcome whether or not c divides x.  A genuine forbidden congruence
// class keeps producing zeros at arbitrarily large degrees, so matching
// the pattern from the first observed event onward loses nothing.
inline std::optional<int> infer_constant_degrees(const std::map<int, long long>& counts) {
  if (counts.size() < 4)
    throw std::invalid_argument("infer_constant_degrees: need at least 4 consecutive degrees");
  const int x0 = counts.begin()->first, x1 = counts.rbegin()->first;
  if (x1 - x0 + 1 != static_cast<int>(counts.size()))
    throw std::invalid_argument("infer_constant_degrees: degrees must be consecutive");
  int first_positive = x1 + 1;
  for (const auto& [x, n] : counts) {
    if (n < 0) throw std::invalid_argument("infer_constant_degrees: negative count");
    if (n > 0 && x < first_positive) first_positive = x;
  }
  if (first_positive > x1) return std::nullopt;
  for (int c = 1; c <= x1; ++c) {
    bool ok = true;
    for (const auto& [x, n] : counts)
      if (x >= first_positive && (n > 0) != (x % c == 0)) {
        ok = false;
        break;
      }
    if (ok) return c;
  }
  return std::nullopt;
}

}  // namespace eldiv

#endif  // ELDIV_ANALYTIC_HPP
