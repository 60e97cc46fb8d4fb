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

#ifndef ELDIV_DRINFELD_HPP
#define ELDIV_DRINFELD_HPP

// Drinfeld modules over F_q(T) with everywhere-integral coefficients: a ring
// map a -> psi_a from A = F_q[T] into twisted polynomials, determined by
//   psi_T = T + g_1 tau + ... + g_r tau^r,      g_i in A, g_r != 0.
// psi_a for general a follows by Horner's rule since psi is a ring map.
//
// Reduction at a monic irreducible p maps the coefficients into A/p; the
// result keeps rank r exactly when p does not divide g_r.

#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "eldiv/common.hpp"
#include "eldiv/poly.hpp"
#include "eldiv/residue.hpp"
#include "eldiv/skew.hpp"

namespace eldiv {

// Twisted polynomial with coefficients still in A, tau a = a^q tau.
struct SkewPolyA {
  std::vector<PolyA> c;  // c[i] = coefficient of tau^i, no trailing zeros
  friend bool operator==(const SkewPolyA&, const SkewPolyA&) = default;
};

inline int deg_tau(const SkewPolyA& f) { return static_cast<int>(f.c.size()) - 1; }
inline bool skewa_is_zero(const SkewPolyA& f) { return f.c.empty(); }

inline void skewa_trim(SkewPolyA& f) {
  while (!f.c.empty() && PolyRing::is_zero(f.c.back())) f.c.pop_back();
}

inline SkewPolyA skewa_add(const PolyRing& R, const SkewPolyA& a, const SkewPolyA& b) {
  SkewPolyA r;
  r.c.resize(std::max(a.c.size(), b.c.size()), R.zero());
  for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] = a.c[i];
  for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] = R.add(r.c[i], b.c[i]);
  skewa_trim(r);
  return r;
}

// (fg)_k = sum_{i+j=k} f_i * (g_j)^{q^i}.
inline SkewPolyA skewa_mul(const PolyRing& R, const SkewPolyA& f, const SkewPolyA& g) {
  if (skewa_is_zero(f) || skewa_is_zero(g)) return {};
  SkewPolyA r;
  r.c.assign(f.c.size() + g.c.size() - 1, R.zero());
  for (std::size_t i = 0; i < f.c.size(); ++i) {
    if (PolyRing::is_zero(f.c[i])) continue;
    for (std::size_t j = 0; j < g.c.size(); ++j) {
      if (PolyRing::is_zero(g.c[j])) continue;
      r.c[i + j] = R.add(r.c[i + j], R.mul(f.c[i], R.qth_power_twist(g.c[j], static_cast<unsigned>(i))));
    }
  }
  skewa_trim(r);
  return r;
}

class DrinfeldModule {
 public:
  // g holds the tau-coefficients g_1 .. g_r of psi_T; the tau^0 part is T.
  DrinfeldModule(const PolyRing& R, std::vector<PolyA> g) : R_(R) {
    if (g.empty()) throw std::invalid_argument("DrinfeldModule: rank must be >= 1");
    if (PolyRing::is_zero(g.back()))
      throw std::invalid_argument("DrinfeldModule: leading coefficient must be nonzero");
    psi_t_.c.reserve(g.size() + 1);
    psi_t_.c.push_back(R_.t());
    for (auto& gi : g) psi_t_.c.push_back(std::move(gi));
  }

  const PolyRing& ring() const { return R_; }
  int rank() const { return deg_tau(psi_t_); }
  const SkewPolyA& psi_t() const { return psi_t_; }

  // Image of a under the ring map; deg_tau psi(a) = rank * deg a.
  SkewPolyA psi(const PolyA& a) const {
    SkewPolyA acc;
    for (int k = PolyRing::deg(a); k >= 0; --k) {
      acc = skewa_mul(R_, acc, psi_t_);
      const FqElem ck = a.c[static_cast<std::size_t>(k)];
      if (!R_.field().is_zero(ck)) {
        if (acc.c.empty()) acc.c.push_back(R_.zero());
        acc.c[0] = R_.add(acc.c[0], R_.constant(ck));
      }
    }
    return acc;
  }

 private:
  PolyRing R_;
  SkewPolyA psi_t_;
};

// A Drinfeld module with coefficients reduced at a good prime. Construct via
// reduce(). psi() memoizes per instance without locking, so give each thread
// its own copy when sharing work.
class ReducedModule {
 public:
  const ResidueField& field() const { return K_; }
  const PolyA& prime() const { return K_.modulus(); }
  int deg_prime() const { return K_.d(); }
  int rank() const { return static_cast<int>(psi_t_.size()) - 1; }

  // Height of the reduction: psi(p) = W tau^{h deg p} with W(0) != 0.
  int height() const { return height_; }

  const SkewPoly& psi(const PolyA& a) const {
    auto it = cache_.find(a);
    if (it != cache_.end()) return it->second;
    SkewPoly acc = skew_zero(K_);
    const SkewPoly psit = skew_from_coeffs(K_, psi_t_);
    for (int k = PolyRing::deg(a); k >= 0; --k) {
      acc = skew_mul(acc, psit);
      const FqElem ck = a.c[static_cast<std::size_t>(k)];
      if (!K_.field().is_zero(ck))
        acc = skew_add(acc, skew_const(K_, K_.scale(ck, K_.one())));
    }
    return cache_.emplace(a, std::move(acc)).first->second;
  }

  friend std::optional<ReducedModule> reduce(const DrinfeldModule& M, const PolyA& p);

 private:
  explicit ReducedModule(ResidueField K) : K_(std::move(K)), height_(0) {}

  ResidueField K_;
  std::vector<ResElem> psi_t_;  // reductions of T, g_1, ..., g_r
  int height_;
  mutable std::map<PolyA, SkewPoly, PolyLess> cache_;
};

// Reduce M at the monic irreducible p. Returns nothing when the rank drops,
// i.e. when p divides the leading coefficient of psi_T.
inline std::optional<ReducedModule> reduce(const DrinfeldModule& M, const PolyA& p) {
  ResidueField K(M.ring(), p);
  const SkewPolyA& psit = M.psi_t();
  if (K.is_zero(K.from_poly(psit.c.back()))) return std::nullopt;
  ReducedModule out(std::move(K));
  out.psi_t_.reserve(psit.c.size());
  for (const PolyA& gi : psit.c) out.psi_t_.push_back(out.K_.from_poly(gi));

  // The reduction of psi_p kills the tau-coefficients below some h*deg p with
  // 1 <= h <= rank; anything else indicates a broken multiplication table.
  const SkewPoly& pp = out.psi(p);
  const int d = out.deg_prime(), r = out.rank();
  int i0 = 0;
  while (i0 <= deg_tau(pp) && out.K_.is_zero(pp.c[static_cast<std::size_t>(i0)])) ++i0;
  if (i0 < 1 || i0 > deg_tau(pp) || i0 % d != 0 || i0 / d < 1 || i0 / d > r)
    throw ConsistencyError("reduce: image of the characteristic has no valid height");
  out.height_ = i0 / d;
  return out;
}

}  // namespace eldiv

#endif  // ELDIV_DRINFELD_HPP
