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

#ifndef ELDIV_POLY_HPP
#define ELDIV_POLY_HPP

// The ring A = F_q[T]. PolyA is a plain coefficient vector (constant term
// first, no trailing zeros, empty = zero polynomial); all arithmetic goes
// through a PolyRing context that carries the coefficient field.
//
// Text encoding: comma-separated coefficient indices, constant term first,
// e.g. "1,2,1" = 1 + 2T + T^2 over q = 3. The zero polynomial is "0".
//
// Canonical order (PolyLess): by degree, then by coefficient vectors
// compared from the top coefficient down. Within one degree this is the
// base-q counter order on the low coefficients, which is also the order all
// enumeration functions produce.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "eldiv/fq.hpp"
#include "eldiv/rational.hpp"

namespace eldiv {

struct PolyA {
  std::vector<FqElem> c;  // c[i] = coefficient of T^i
  friend bool operator==(const PolyA& a, const PolyA& b) { return a.c == b.c; }
  friend bool operator!=(const PolyA& a, const PolyA& b) { return !(a == b); }
};

struct PolyLess {
  bool operator()(const PolyA& a, const PolyA& b) const {
    if (a.c.size() != b.c.size()) return a.c.size() < b.c.size();
    for (std::size_t i = a.c.size(); i-- > 0;)
      if (a.c[i].v != b.c[i].v) return a.c[i].v < b.c[i].v;
    return false;
  }
};

class PolyRing {
 public:
  explicit PolyRing(Fq f) : F_(std::move(f)) {}

  const Fq& field() const { return F_; }
  unsigned q() const { return F_.q(); }

  PolyA zero() const { return PolyA{}; }
  PolyA one() const { return PolyA{{F_.one()}}; }
  PolyA t() const { return PolyA{{F_.zero(), F_.one()}}; }
  PolyA constant(FqElem a) const {
    if (F_.is_zero(a)) return PolyA{};
    return PolyA{{a}};
  }

  static int deg(const PolyA& a) { return static_cast<int>(a.c.size()) - 1; }  // deg 0 = -1
  static bool is_zero(const PolyA& a) { return a.c.empty(); }
  static bool is_unit(const PolyA& a) { return a.c.size() == 1; }

  FqElem lead(const PolyA& a) const {
    if (is_zero(a)) throw std::domain_error("PolyRing::lead: zero polynomial");
    return a.c.back();
  }

  bool is_monic(const PolyA& a) const { return !is_zero(a) && a.c.back() == F_.one(); }

  // |a| = q^{deg a}, |0| = 0.
  BigInt norm(const PolyA& a) const {
    if (is_zero(a)) return BigInt(0);
    return ipow(BigInt(F_.q()), static_cast<unsigned>(deg(a)));
  }

  PolyA monic(const PolyA& a) const {
    if (is_zero(a)) throw std::domain_error("PolyRing::monic: zero polynomial");
    if (is_monic(a)) return a;
    const FqElem s = F_.inv(a.c.back());
    PolyA r = a;
    for (auto& x : r.c) x = F_.mul(x, s);
    return r;
  }

  PolyA add(const PolyA& a, const PolyA& b) const {
    PolyA r;
    r.c.resize(std::max(a.c.size(), b.c.size()), F_.zero());
    for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] = a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] = F_.add(r.c[i], b.c[i]);
    trim(r);
    return r;
  }

  PolyA neg(const PolyA& a) const {
    PolyA r = a;
    for (auto& x : r.c) x = F_.neg(x);
    return r;
  }

  PolyA sub(const PolyA& a, const PolyA& b) const { return add(a, neg(b)); }

  PolyA mul(const PolyA& a, const PolyA& b) const {
    if (is_zero(a) || is_zero(b)) return PolyA{};
    PolyA r;
    r.c.assign(a.c.size() + b.c.size() - 1, F_.zero());
    for (std::size_t i = 0; i < a.c.size(); ++i) {
      if (F_.is_zero(a.c[i])) continue;
      for (std::size_t j = 0; j < b.c.size(); ++j)
        r.c[i + j] = F_.add(r.c[i + j], F_.mul(a.c[i], b.c[j]));
    }
    trim(r);
    return r;
  }

  PolyA scale(FqElem s, const PolyA& a) const {
    if (F_.is_zero(s)) return PolyA{};
    PolyA r = a;
    for (auto& x : r.c) x = F_.mul(s, x);
    return r;
  }

  // a = s*b + r with deg r < deg b.
  std::pair<PolyA, PolyA> divmod(const PolyA& a, const PolyA& b) const {
    if (is_zero(b)) throw std::domain_error("PolyRing::divmod: division by zero");
    PolyA r = a, s;
    const int db = deg(b);
    if (deg(a) >= db) s.c.assign(static_cast<std::size_t>(deg(a) - db) + 1, F_.zero());
    const FqElem binv = F_.inv(b.c.back());
    while (deg(r) >= db) {
      const int k = deg(r) - db;
      const FqElem c = F_.mul(r.c.back(), binv);
      s.c[static_cast<std::size_t>(k)] = c;
      for (int j = 0; j <= db; ++j) {
        auto& rc = r.c[static_cast<std::size_t>(k + j)];
        rc = F_.sub(rc, F_.mul(c, b.c[static_cast<std::size_t>(j)]));
      }
      trim(r);
    }
    trim(s);
    return {s, r};
  }

  PolyA quo(const PolyA& a, const PolyA& b) const { return divmod(a, b).first; }
  PolyA rem(const PolyA& a, const PolyA& b) const { return divmod(a, b).second; }

  bool divides(const PolyA& b, const PolyA& a) const {  // b | a
    if (is_zero(b)) return is_zero(a);
    return is_zero(rem(a, b));
  }

  // Monic generator of (a, b); both zero is an error.
  PolyA gcd(const PolyA& a, const PolyA& b) const {
    if (is_zero(a) && is_zero(b)) throw std::domain_error("PolyRing::gcd: gcd(0, 0)");
    PolyA x = a, y = b;
    while (!is_zero(y)) {
      PolyA r = rem(x, y);
      x = std::move(y);
      y = std::move(r);
    }
    return monic(x);
  }

  // Monic lcm; zero if either argument is zero.
  PolyA lcm(const PolyA& a, const PolyA& b) const {
    if (is_zero(a) || is_zero(b)) return PolyA{};
    return monic(quo(mul(a, b), gcd(a, b)));
  }

  PolyA pow(const PolyA& a, unsigned k) const {
    PolyA r = one(), b = a;
    for (; k != 0; k >>= 1) {
      if (k & 1u) r = mul(r, b);
      if (k > 1) b = mul(b, b);
    }
    return r;
  }

  PolyA derivative(const PolyA& a) const {
    PolyA r;
    if (a.c.size() < 2) return r;
    r.c.resize(a.c.size() - 1);
    for (std::size_t i = 1; i < a.c.size(); ++i) {
      FqElem m = F_.zero();
      // i * c_i computed as an e-fold sum in the prime field's image.
      for (unsigned k = 0; k < i % F_.p(); ++k) m = F_.add(m, a.c[i]);
      r.c[i - 1] = m;
    }
    trim(r);
    return r;
  }

  FqElem eval(const PolyA& a, FqElem x) const {
    FqElem r = F_.zero();
    for (std::size_t i = a.c.size(); i-- > 0;) r = F_.add(F_.mul(r, x), a.c[i]);
    return r;
  }

  // a(T)^{q^j}: coefficients are Frobenius-fixed, so this is a(T^{q^j}).
  PolyA qth_power_twist(const PolyA& a, unsigned j) const {
    if (j == 0 || is_zero(a)) return a;
    std::uint64_t step = 1;
    for (unsigned i = 0; i < j; ++i) step *= F_.q();
    PolyA r;
    r.c.assign(static_cast<std::size_t>(deg(a)) * step + 1, F_.zero());
    for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i * step] = a.c[i];
    return r;
  }

  PolyA mulmod(const PolyA& a, const PolyA& b, const PolyA& m) const { return rem(mul(a, b), m); }

  PolyA powmod(const PolyA& a, const BigInt& k, const PolyA& m) const {
    if (k < 0) throw std::invalid_argument("PolyRing::powmod: negative exponent");
    PolyA r = rem(one(), m), b = rem(a, m);
    for (BigInt e = k; e != 0; e >>= 1) {
      if (boost::multiprecision::bit_test(e, 0)) r = mulmod(r, b, m);
      if (e > 1) b = mulmod(b, b, m);
    }
    return r;
  }

  // --- text codec ---

  std::string to_text(const PolyA& a) const {
    if (is_zero(a)) return "0";
    std::string s;
    for (std::size_t i = 0; i < a.c.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(a.c[i].v);
    }
    return s;
  }

  PolyA from_text(const std::string& text) const {
    if (text.empty()) throw std::invalid_argument("PolyA: empty text");
    PolyA r;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t comma = text.find(',', pos);
      if (comma == std::string::npos) comma = text.size();
      const std::string tok = text.substr(pos, comma - pos);
      if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
        throw std::invalid_argument("PolyA: bad coefficient '" + tok + "'");
      const unsigned long v = std::stoul(tok);
      if (v >= F_.q()) throw std::invalid_argument("PolyA: coefficient " + tok + " not below q");
      r.c.push_back(FqElem{static_cast<std::uint16_t>(v)});
      pos = comma + 1;
      if (comma == text.size()) break;
    }
    trim(r);
    return r;
  }

  // --- enumeration ---

  // All monic polynomials of degree n, in canonical order. The low n
  // coefficients run through a base-q counter, top digit most significant.
  std::vector<PolyA> monics_of_degree(int n) const {
    if (n < 0) throw std::invalid_argument("monics_of_degree: negative degree");
    std::uint64_t total = 1;
    for (int i = 0; i < n; ++i) total *= F_.q();
    std::vector<PolyA> out;
    out.reserve(total);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      PolyA f;
      f.c.resize(static_cast<std::size_t>(n) + 1, F_.zero());
      std::uint64_t v = idx;
      for (int i = 0; i < n; ++i) {
        f.c[static_cast<std::size_t>(i)] = FqElem{static_cast<std::uint16_t>(v % F_.q())};
        v /= F_.q();
      }
      f.c[static_cast<std::size_t>(n)] = F_.one();
      out.push_back(std::move(f));
    }
    return out;
  }

  // Deterministic irreducibility test: f of degree n >= 1 is irreducible
  // iff T^{q^n} = T (mod f) and gcd(T^{q^{n/t}} - T, f) = 1 for every prime
  // t | n.
  bool is_irreducible(const PolyA& f) const {
    const int n = deg(f);
    if (n < 1) return false;
    if (n == 1) return true;
    std::vector<PolyA> frob(static_cast<std::size_t>(n) + 1);  // frob[i] = T^{q^i} mod f
    frob[0] = rem(t(), f);
    for (int i = 1; i <= n; ++i)
      frob[static_cast<std::size_t>(i)] = powmod(frob[static_cast<std::size_t>(i - 1)], BigInt(F_.q()), f);
    if (frob[static_cast<std::size_t>(n)] != rem(t(), f)) return false;
    for (int tt = 2; tt <= n; ++tt) {
      if (n % tt != 0) continue;
      bool tprime = true;
      for (int d = 2; d * d <= tt; ++d)
        if (tt % d == 0) { tprime = false; break; }
      if (!tprime) continue;
      const PolyA diff = sub(frob[static_cast<std::size_t>(n / tt)], rem(t(), f));
      if (is_zero(diff)) return false;
      if (deg(gcd(diff, f)) > 0) return false;
    }
    return true;
  }

  std::vector<PolyA> irreducibles_of_degree(int n) const {
    std::vector<PolyA> out;
    if (n < 1) return out;
    for (auto& f : monics_of_degree(n))
      if (is_irreducible(f)) out.push_back(std::move(f));
    return out;
  }

  // Number of monic irreducibles of degree n: (1/n) sum_{d | n} mu(d) q^{n/d}.
  BigInt irreducible_count(int n) const {
    if (n < 1) throw std::invalid_argument("irreducible_count: degree must be >= 1");
    BigInt s = 0;
    for (int d = 1; d <= n; ++d) {
      if (n % d != 0) continue;
      const int m = int_mobius(d);
      if (m == 0) continue;
      s += m * ipow(BigInt(F_.q()), static_cast<unsigned>(n / d));
    }
    return s / n;
  }

  static void trim(PolyA& a) {
    while (!a.c.empty() && a.c.back().v == 0) a.c.pop_back();
  }

 private:
  static int int_mobius(int n) {
    int m = 1;
    for (int d = 2; d * d <= n; ++d) {
      if (n % d != 0) continue;
      n /= d;
      if (n % d == 0) return 0;
      m = -m;
    }
    if (n > 1) m = -m;
    return m;
  }

  Fq F_;
};

}  // namespace eldiv

#endif  // ELDIV_POLY_HPP
