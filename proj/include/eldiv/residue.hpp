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

#ifndef ELDIV_RESIDUE_HPP
#define ELDIV_RESIDUE_HPP

// Residue fields F_p = A/pA for monic irreducible p. Elements are fixed-size
// coefficient arrays (degree < deg p, zero padded), so residue arithmetic
// never allocates. The q-power Frobenius and its iterates are applied through
// a basis-image table precomputed at construction.
//
// A ResidueField is cheap to copy (shared immutable state) and instances
// constructed from equal (q, p) are interchangeable.

#include <array>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <vector>

#include "eldiv/poly.hpp"

namespace eldiv {

inline constexpr int kMaxResidueDeg = 16;

struct ResElem {
  std::array<std::uint16_t, kMaxResidueDeg> c{};
  friend bool operator==(const ResElem&, const ResElem&) = default;
};

class ResidueField {
 public:
  ResidueField(const PolyRing& R, const PolyA& p) {
    if (!R.is_monic(p) || !R.is_irreducible(p))
      throw std::invalid_argument("ResidueField: modulus must be monic irreducible");
    if (PolyRing::deg(p) > kMaxResidueDeg)
      throw std::invalid_argument("ResidueField: modulus degree too large");
    auto impl = std::make_shared<Impl>(Impl{R, p, PolyRing::deg(p), R.q(), {}});
    // frob[j*d + k] = (T^k)^{q^j} mod p. Row 0 is the identity basis; each
    // later row applies the q-power map (itself row 1 as a matrix) once more.
    const int d = impl->d;
    impl->frob.resize(static_cast<std::size_t>(d) * static_cast<std::size_t>(d));
    std::vector<ResElem> row1(static_cast<std::size_t>(d));
    for (int k = 0; k < d; ++k) {
      PolyA tk;
      tk.c.assign(static_cast<std::size_t>(k) + 1, R.field().zero());
      tk.c.back() = R.field().one();
      row1[static_cast<std::size_t>(k)] = pack(*impl, R.powmod(tk, BigInt(R.q()), p));
      ResElem id{};
      id.c[static_cast<std::size_t>(k)] = R.field().one().v;
      impl->frob[static_cast<std::size_t>(k)] = id;
    }
    for (int j = 1; j < d; ++j)
      for (int k = 0; k < d; ++k) {
        const ResElem& prev = impl->frob[static_cast<std::size_t>((j - 1) * d + k)];
        ResElem out{};
        for (int i = 0; i < d; ++i) {
          const FqElem ci{prev.c[static_cast<std::size_t>(i)]};
          if (R.field().is_zero(ci)) continue;
          const ResElem& img = row1[static_cast<std::size_t>(i)];
          for (int t = 0; t < d; ++t)
            out.c[static_cast<std::size_t>(t)] =
                R.field().add(FqElem{out.c[static_cast<std::size_t>(t)]},
                              R.field().mul(ci, FqElem{img.c[static_cast<std::size_t>(t)]})).v;
        }
        impl->frob[static_cast<std::size_t>(j * d + k)] = out;
      }
    impl_ = std::move(impl);
  }

  const PolyRing& ring() const { return impl_->R; }
  const Fq& field() const { return impl_->R.field(); }
  const PolyA& modulus() const { return impl_->p; }
  int d() const { return impl_->d; }
  unsigned q() const { return impl_->q; }

  std::uint64_t size() const {
    std::uint64_t s = 1;
    for (int i = 0; i < impl_->d; ++i) s *= impl_->q;
    return s;
  }

  bool same_field(const ResidueField& other) const {
    return impl_ == other.impl_ || (impl_->q == other.impl_->q && impl_->p == other.impl_->p);
  }

  ResElem zero() const { return ResElem{}; }
  ResElem one() const {
    ResElem r{};
    r.c[0] = field().one().v;
    return r;
  }

  bool is_zero(const ResElem& a) const { return a == ResElem{}; }

  ResElem from_poly(const PolyA& f) const { return pack(*impl_, ring().rem(f, modulus())); }
  ResElem t_elem() const { return from_poly(ring().t()); }

  PolyA to_poly(const ResElem& a) const {
    PolyA f;
    f.c.resize(static_cast<std::size_t>(impl_->d));
    for (int i = 0; i < impl_->d; ++i) f.c[static_cast<std::size_t>(i)] = FqElem{a.c[static_cast<std::size_t>(i)]};
    PolyRing::trim(f);
    return f;
  }

  ResElem element(std::uint64_t idx) const {
    ResElem r{};
    for (int i = 0; i < impl_->d; ++i) {
      r.c[static_cast<std::size_t>(i)] = static_cast<std::uint16_t>(idx % impl_->q);
      idx /= impl_->q;
    }
    if (idx != 0) throw std::invalid_argument("ResidueField::element: index out of range");
    return r;
  }

  std::uint64_t index_of(const ResElem& a) const {
    std::uint64_t idx = 0, w = 1;
    for (int i = 0; i < impl_->d; ++i) {
      idx += w * a.c[static_cast<std::size_t>(i)];
      w *= impl_->q;
    }
    return idx;
  }

  ResElem add(const ResElem& a, const ResElem& b) const {
    const Fq& F = field();
    ResElem r{};
    for (int i = 0; i < impl_->d; ++i)
      r.c[static_cast<std::size_t>(i)] =
          F.add(FqElem{a.c[static_cast<std::size_t>(i)]}, FqElem{b.c[static_cast<std::size_t>(i)]}).v;
    return r;
  }

  ResElem neg(const ResElem& a) const {
    const Fq& F = field();
    ResElem r{};
    for (int i = 0; i < impl_->d; ++i)
      r.c[static_cast<std::size_t>(i)] = F.neg(FqElem{a.c[static_cast<std::size_t>(i)]}).v;
    return r;
  }

  ResElem sub(const ResElem& a, const ResElem& b) const { return add(a, neg(b)); }

  ResElem mul(const ResElem& a, const ResElem& b) const {
    const Fq& F = field();
    const int d = impl_->d;
    std::array<FqElem, 2 * kMaxResidueDeg> acc{};
    for (int i = 0; i < d; ++i) {
      const FqElem ai{a.c[static_cast<std::size_t>(i)]};
      if (F.is_zero(ai)) continue;
      for (int j = 0; j < d; ++j)
        acc[static_cast<std::size_t>(i + j)] =
            F.add(acc[static_cast<std::size_t>(i + j)], F.mul(ai, FqElem{b.c[static_cast<std::size_t>(j)]}));
    }
    // Reduce by the monic modulus.
    for (int i = 2 * d - 2; i >= d; --i) {
      const FqElem ci = acc[static_cast<std::size_t>(i)];
      if (F.is_zero(ci)) continue;
      acc[static_cast<std::size_t>(i)] = F.zero();
      for (int k = 0; k < d; ++k)
        acc[static_cast<std::size_t>(i - d + k)] =
            F.sub(acc[static_cast<std::size_t>(i - d + k)],
                  F.mul(ci, impl_->p.c[static_cast<std::size_t>(k)]));
    }
    ResElem r{};
    for (int i = 0; i < d; ++i) r.c[static_cast<std::size_t>(i)] = acc[static_cast<std::size_t>(i)].v;
    return r;
  }

  ResElem scale(FqElem s, const ResElem& a) const {
    const Fq& F = field();
    ResElem r{};
    for (int i = 0; i < impl_->d; ++i)
      r.c[static_cast<std::size_t>(i)] = F.mul(s, FqElem{a.c[static_cast<std::size_t>(i)]}).v;
    return r;
  }

  ResElem pow(const ResElem& a, BigInt k) const {
    if (k < 0) throw std::invalid_argument("ResidueField::pow: negative exponent");
    ResElem r = one(), b = a;
    for (; k != 0; k >>= 1) {
      if (boost::multiprecision::bit_test(k, 0)) r = mul(r, b);
      if (k > 1) b = mul(b, b);
    }
    return r;
  }

  ResElem inv(const ResElem& a) const {
    if (is_zero(a)) throw std::domain_error("ResidueField::inv: zero has no inverse");
    const PolyRing& R = ring();
    PolyA r0 = modulus(), r1 = to_poly(a);
    PolyA s0 = R.zero(), s1 = R.one();
    while (!PolyRing::is_zero(r1)) {
      const auto [qq, rr] = R.divmod(r0, r1);
      r0 = r1;
      r1 = rr;
      PolyA snew = R.sub(s0, R.mul(qq, s1));
      s0 = s1;
      s1 = std::move(snew);
    }
    // r0 is a unit (modulus irreducible, a nonzero): s0 * a = r0 mod p.
    return from_poly(R.scale(R.field().inv(r0.c[0]), s0));
  }

  // x^{q^j}; j is reduced mod d since the q^d power is the identity.
  ResElem frobenius_pow(const ResElem& a, unsigned j) const {
    const int d = impl_->d;
    j %= static_cast<unsigned>(d);
    if (j == 0) return a;
    const Fq& F = field();
    ResElem out{};
    for (int k = 0; k < d; ++k) {
      const FqElem ak{a.c[static_cast<std::size_t>(k)]};
      if (F.is_zero(ak)) continue;
      const ResElem& img = impl_->frob[static_cast<std::size_t>(static_cast<int>(j) * d + k)];
      for (int t = 0; t < d; ++t)
        out.c[static_cast<std::size_t>(t)] =
            F.add(FqElem{out.c[static_cast<std::size_t>(t)]},
                  F.mul(ak, FqElem{img.c[static_cast<std::size_t>(t)]})).v;
    }
    return out;
  }

  ResElem frobenius(const ResElem& a) const { return frobenius_pow(a, 1); }

 private:
  struct Impl {
    PolyRing R;
    PolyA p;
    int d;
    unsigned q;
    std::vector<ResElem> frob;
  };

  static ResElem pack(const Impl& impl, const PolyA& reduced) {
    ResElem r{};
    for (std::size_t i = 0; i < reduced.c.size(); ++i) r.c[i] = reduced.c[i].v;
    (void)impl;
    return r;
  }

  std::shared_ptr<const Impl> impl_;
};

}  // namespace eldiv

#endif  // ELDIV_RESIDUE_HPP
