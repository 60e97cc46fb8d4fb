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

#ifndef ELDIV_RATIONAL_HPP
#define ELDIV_RATIONAL_HPP

// Exact arbitrary-precision integers and rationals. All analytic quantities
// in this library (truncated series, Euler products, tail bounds) are exact
// rationals; floating point only ever appears when rendering output.

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace eldiv {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

inline BigInt ipow(const BigInt& base, unsigned e) {
  BigInt r = 1, b = base;
  for (; e != 0; e >>= 1) {
    if (e & 1u) r *= b;
    if (e > 1) b *= b;
  }
  return r;
}

inline std::string exact_string(const BigRat& r) {
  const BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

// Fixed-point decimal rendering, `places` digits after the point, rounding
// half away from zero. Deterministic: used for report output.
inline std::string decimal_string(const BigRat& r, int places = 12) {
  BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  const bool neg = num < 0;
  if (neg) num = -num;
  const BigInt scale = ipow(BigInt(10), static_cast<unsigned>(places));
  BigInt t = num * scale;
  BigInt digits = t / den;
  const BigInt rem = t % den;
  if (2 * rem >= den) ++digits;
  std::string s = digits.str();
  const std::size_t p = static_cast<std::size_t>(places);
  if (s.size() <= p) s.insert(0, p + 1 - s.size(), '0');
  s.insert(s.size() - p, ".");
  if (neg && digits != 0) s.insert(0, "-");
  return s;
}

}  // namespace eldiv

#endif  // ELDIV_RATIONAL_HPP
