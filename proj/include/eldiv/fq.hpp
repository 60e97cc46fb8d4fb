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

#ifndef ELDIV_FQ_HPP
#define ELDIV_FQ_HPP

// The coefficient field F_q, q = p^e a prime power. Elements are stored as
// indices in [0, q). For prime q the index is the canonical residue mod p.
// For e > 1 the base-p digits of the index are the coordinates of the
// element in the power basis 1, b, ..., b^{e-1}, where b is a root of a
// fixed modulus: the least monic irreducible of degree e over F_p in the
// enumeration order used throughout this library.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "eldiv/common.hpp"

namespace eldiv {

struct FqElem {
  std::uint16_t v = 0;
  friend constexpr bool operator==(FqElem a, FqElem b) { return a.v == b.v; }
  friend constexpr bool operator!=(FqElem a, FqElem b) { return a.v != b.v; }
  friend constexpr bool operator<(FqElem a, FqElem b) { return a.v < b.v; }
};

class Fq {
 public:
  explicit Fq(unsigned q) : q_(q) {
    if (q < 2 || q > 512) throw std::invalid_argument("Fq: q out of range [2, 512]");
    unsigned p = smallest_prime_factor(q);
    unsigned m = q, e = 0;
    while (m % p == 0) { m /= p; ++e; }
    if (m != 1) throw std::invalid_argument("Fq: q is not a prime power");
    p_ = p;
    e_ = e;
    if (e_ > 1) mod_ = least_irreducible_mod_p(p_, e_);
  }

  unsigned q() const { return q_; }
  unsigned p() const { return p_; }
  unsigned ext_degree() const { return e_; }

  FqElem zero() const { return FqElem{0}; }
  FqElem one() const { return FqElem{1}; }
  FqElem elem(unsigned v) const {
    if (v >= q_) throw std::invalid_argument("Fq::elem: index out of range");
    return FqElem{static_cast<std::uint16_t>(v)};
  }

  bool is_zero(FqElem a) const { return a.v == 0; }

  FqElem add(FqElem a, FqElem b) const {
    if (e_ == 1) return FqElem{static_cast<std::uint16_t>((a.v + b.v) % p_)};
    unsigned r = 0, w = 1;
    unsigned x = a.v, y = b.v;
    for (unsigned i = 0; i < e_; ++i) {
      r += ((x % p_ + y % p_) % p_) * w;
      x /= p_; y /= p_; w *= p_;
    }
    return FqElem{static_cast<std::uint16_t>(r)};
  }

  FqElem neg(FqElem a) const {
    if (e_ == 1) return FqElem{static_cast<std::uint16_t>((p_ - a.v) % p_)};
    unsigned r = 0, w = 1, x = a.v;
    for (unsigned i = 0; i < e_; ++i) {
      r += ((p_ - x % p_) % p_) * w;
      x /= p_; w *= p_;
    }
    return FqElem{static_cast<std::uint16_t>(r)};
  }

  FqElem sub(FqElem a, FqElem b) const { return add(a, neg(b)); }

  FqElem mul(FqElem a, FqElem b) const {
    if (e_ == 1) return FqElem{static_cast<std::uint16_t>((a.v * b.v) % p_)};
    // Schoolbook product of digit vectors, reduced by the monic modulus.
    unsigned da[9], db[9];
    unsigned prod[17] = {0};
    digits(a.v, da);
    digits(b.v, db);
    for (unsigned i = 0; i < e_; ++i)
      for (unsigned j = 0; j < e_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
    for (unsigned i = 2 * e_ - 2; i >= e_; --i) {
      const unsigned c = prod[i];
      if (c == 0) continue;
      prod[i] = 0;
      for (unsigned j = 0; j < e_; ++j)
        prod[i - e_ + j] = (prod[i - e_ + j] + (p_ - 1) * c % p_ * mod_[j]) % p_;
    }
    unsigned r = 0, w = 1;
    for (unsigned i = 0; i < e_; ++i) { r += prod[i] * w; w *= p_; }
    return FqElem{static_cast<std::uint16_t>(r)};
  }

  FqElem pow(FqElem a, std::uint64_t k) const {
    FqElem r = one(), b = a;
    for (; k != 0; k >>= 1) {
      if (k & 1u) r = mul(r, b);
      b = mul(b, b);
    }
    return r;
  }

  FqElem inv(FqElem a) const {
    if (a.v == 0) throw std::domain_error("Fq::inv: zero has no inverse");
    return pow(a, q_ - 2);
  }

  FqElem div(FqElem a, FqElem b) const { return mul(a, inv(b)); }

  // x -> x^p, the absolute Frobenius. x -> x^q is the identity on F_q.
  FqElem frobenius(FqElem a) const { return pow(a, p_); }

 private:
  void digits(unsigned v, unsigned out[9]) const {
    for (unsigned i = 0; i < e_; ++i) { out[i] = v % p_; v /= p_; }
  }

  static unsigned smallest_prime_factor(unsigned n) {
    for (unsigned d = 2; d * d <= n; ++d)
      if (n % d == 0) return d;
    return n;
  }

  // Least monic irreducible of degree e over F_p: low coefficients scanned
  // as a base-p counter with the degree-(e-1) digit most significant.
  static std::vector<unsigned> least_irreducible_mod_p(unsigned p, unsigned e) {
    std::vector<unsigned> f(e + 1, 0);
    f[e] = 1;
    unsigned long long total = 1;
    for (unsigned i = 0; i < e; ++i) total *= p;
    for (unsigned long long idx = 0; idx < total; ++idx) {
      unsigned long long v = idx;
      for (unsigned i = 0; i < e; ++i) { f[i] = static_cast<unsigned>(v % p); v /= p; }
      if (irreducible_mod_p(f, p)) return f;
    }
    throw std::logic_error("Fq: no irreducible modulus found");
  }

  // Trial division by every monic polynomial of degree in [1, e/2].
  static bool irreducible_mod_p(const std::vector<unsigned>& f, unsigned p) {
    const unsigned e = static_cast<unsigned>(f.size()) - 1;
    for (unsigned d = 1; 2 * d <= e; ++d) {
      unsigned long long total = 1;
      for (unsigned i = 0; i < d; ++i) total *= p;
      std::vector<unsigned> g(d + 1);
      g[d] = 1;
      for (unsigned long long idx = 0; idx < total; ++idx) {
        unsigned long long v = idx;
        for (unsigned i = 0; i < d; ++i) { g[i] = static_cast<unsigned>(v % p); v /= p; }
        if (divides_mod_p(g, f, p)) return false;
      }
    }
    return true;
  }

  static bool divides_mod_p(const std::vector<unsigned>& g, std::vector<unsigned> r, unsigned p) {
    const int dg = static_cast<int>(g.size()) - 1;
    int dr = static_cast<int>(r.size()) - 1;
    while (dr >= 0 && r[dr] == 0) --dr;
    while (dr >= dg) {
      const unsigned c = r[dr];  // g monic
      if (c != 0)
        for (int j = 0; j <= dg; ++j)
          r[dr - dg + j] = (r[dr - dg + j] + (p - c) * g[j]) % p;
      while (dr >= 0 && r[dr] == 0) --dr;
    }
    return dr < 0;
  }

  unsigned q_ = 0, p_ = 0, e_ = 0;
  std::vector<unsigned> mod_;  // monic modulus digits, size e+1, only for e > 1
};

inline std::string to_string(FqElem a) { return std::to_string(a.v); }

}  // namespace eldiv

#endif  // ELDIV_FQ_HPP
