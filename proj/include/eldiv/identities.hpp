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

#ifndef ELDIV_IDENTITIES_HPP
#define ELDIV_IDENTITIES_HPP

// Self-check suite for the arithmetic layer: exact identities of the
// Moebius function, Euler phi, monic counts, #GL_r, and the irreducible
// census over F_q[T].  Every check pits a closed formula against a dumb
// enumeration and reports the first counterexample verbatim, so a failure
// names the offending polynomial rather than just a suite.
//
// All rational comparisons are exact (big-rational); nothing here is
// allowed a tolerance.

#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "eldiv/factor.hpp"
#include "eldiv/poly.hpp"
#include "eldiv/rational.hpp"

namespace eldiv {

struct IdentityCheck {
  std::string name;
  bool passed = true;
  std::string detail;  // counterexample on failure, coverage summary on pass
};

// Hook points let tests inject a deliberately wrong function and confirm
// the suite catches it.  Empty hooks mean "use the library implementation".
struct IdentityHooks {
  std::function<int(const PolyRing&, const PolyA&)> mobius;
};

namespace detail {

// Every nonzero polynomial (all leading units, not only monic) of degree
// <= max_deg, in a fixed canonical order.
inline std::vector<PolyA> nonzero_polys_upto(const PolyRing& R, int max_deg) {
  std::vector<PolyA> out;
  const unsigned q = R.q();
  unsigned long long total = 1;
  for (int i = 0; i <= max_deg; ++i) total *= q;
  for (unsigned long long idx = 1; idx < total; ++idx) {
    PolyA a;
    unsigned long long rest = idx;
    a.c.reserve(static_cast<std::size_t>(max_deg) + 1);
    for (int i = 0; i <= max_deg; ++i) {
      a.c.push_back(FqElem{static_cast<std::uint16_t>(rest % q)});
      rest /= q;
    }
    PolyRing::trim(a);
    out.push_back(std::move(a));
  }
  return out;
}

// Residue class representative of A/aA from a base-q index (deg < deg a).
inline PolyA residue_of_index(const PolyRing& R, int dega,
                              unsigned long long idx) {
  PolyA r;
  const unsigned q = R.q();
  r.c.reserve(static_cast<std::size_t>(dega));
  for (int i = 0; i < dega; ++i) {
    r.c.push_back(FqElem{static_cast<std::uint16_t>(idx % q)});
    idx /= q;
  }
  PolyRing::trim(r);
  return r;
}

inline bool is_unit_residue(const PolyRing& R, const PolyA& r,
                            const PolyA& a) {
  return PolyRing::is_unit(R.gcd(r, a));
}

// Determinant of a small matrix of residues, reduced mod a at the end.
inline PolyA matrix_det(const PolyRing& R, const std::vector<PolyA>& m,
                        int r, const PolyA& a) {
  PolyA det;
  if (r == 1) {
    det = m[0];
  } else if (r == 2) {
    det = R.sub(R.mul(m[0], m[3]), R.mul(m[1], m[2]));
  } else {  // r == 3, cofactor expansion along the first row
    const PolyA c0 = R.sub(R.mul(m[4], m[8]), R.mul(m[5], m[7]));
    const PolyA c1 = R.sub(R.mul(m[3], m[8]), R.mul(m[5], m[6]));
    const PolyA c2 = R.sub(R.mul(m[3], m[7]), R.mul(m[4], m[6]));
    det = R.add(R.sub(R.mul(m[0], c0), R.mul(m[1], c1)), R.mul(m[2], c2));
  }
  return R.rem(det, a);
}

}  // namespace detail

// Runs the whole identity suite over F_q[T] with enumeration bounds scaled
// from max_deg.  Returns one entry per check; a failed entry carries the
// first counterexample found.
inline std::vector<IdentityCheck> run_identities(unsigned q, int max_deg,
                                                 const IdentityHooks& hooks =
                                                     IdentityHooks{}) {
  if (q != 2 && q != 3 && q != 4 && q != 5)
    throw std::invalid_argument("run_identities: q must be one of 2, 3, 4, 5");
  if (max_deg < 1)
    throw std::invalid_argument("run_identities: max_deg must be >= 1");

  const Fq F(q);
  const PolyRing R(F);
  std::function<int(const PolyRing&, const PolyA&)> mu = hooks.mobius;
  if (!mu)
    mu = [](const PolyRing& ring, const PolyA& a) { return mobius(ring, a); };

  std::vector<IdentityCheck> out;
  const auto fail = [&out](const std::string& name, std::ostringstream& msg) {
    out.push_back(IdentityCheck{name, false, msg.str()});
  };
  const auto pass = [&out](const std::string& name, const std::string& note) {
    out.push_back(IdentityCheck{name, true, note});
  };

  // --- monic-count-geometric -------------------------------------------
  // #{monic a : 0 <= deg a <= y} = (q^{y+1} - 1)/(q - 1), by enumeration.
  {
    const std::string name = "monic-count-geometric";
    bool ok = true;
    for (int y = 0; ok && y <= max_deg + 2; ++y) {
      BigInt count = 0;
      for (int k = 0; k <= y; ++k)
        count += static_cast<long long>(R.monics_of_degree(k).size());
      const BigInt expected = (ipow(BigInt(q), y + 1) - 1) / (q - 1);
      if (count != expected) {
        std::ostringstream msg;
        msg << "y=" << y << ": enumerated " << count << ", formula gives "
            << expected;
        fail(name, msg);
        ok = false;
      }
    }
    if (ok) {
      std::ostringstream note;
      note << "degrees 0.." << max_deg + 2 << " match the geometric sum";
      pass(name, note.str());
    }
  }

  // --- mobius-divisor-sum ----------------------------------------------
  // Over ALL divisors d (unit multiples included), sum mu(d) is q - 1 for
  // unit a and 0 otherwise.
  {
    const std::string name = "mobius-divisor-sum";
    const auto all = detail::nonzero_polys_upto(R, max_deg);
    bool ok = true;
    long long checked = 0;
    for (const PolyA& a : all) {
      long long sum = 0;
      for (const PolyA& d : all) {
        if (PolyRing::deg(d) > PolyRing::deg(a)) continue;
        if (R.divides(d, a)) sum += mu(R, d);
      }
      const long long expected = PolyRing::is_unit(a) ? q - 1 : 0;
      ++checked;
      if (sum != expected) {
        std::ostringstream msg;
        msg << "a=" << R.to_text(a) << ": divisor sum of mu is " << sum
            << ", expected " << expected;
        fail(name, msg);
        ok = false;
        break;
      }
    }
    if (ok) {
      std::ostringstream note;
      note << checked << " polynomials, full divisor sets";
      pass(name, note.str());
    }
  }

  // --- mobius-inverse-norm ---------------------------------------------
  // 1/|d| = (q-1)^{-2} * sum over nonzero pairs (a, b) with ab | d of
  // mu(a)/|b|, exactly as rationals.
  {
    const std::string name = "mobius-inverse-norm";
    const auto all = detail::nonzero_polys_upto(R, max_deg);
    bool ok = true;
    long long checked = 0;
    for (const PolyA& d : all) {
      const int degd = PolyRing::deg(d);
      BigRat sum = 0;
      for (const PolyA& a : all) {
        if (PolyRing::deg(a) > degd) continue;
        const int mua = mu(R, a);
        if (mua == 0) continue;
        for (const PolyA& b : all) {
          if (PolyRing::deg(a) + PolyRing::deg(b) > degd) continue;
          if (R.divides(R.mul(a, b), d))
            sum += BigRat(BigInt(mua), R.norm(b));
        }
      }
      sum /= BigRat(BigInt(q - 1) * BigInt(q - 1));
      const BigRat lhs(BigInt(1), R.norm(d));
      ++checked;
      if (sum != lhs) {
        std::ostringstream msg;
        msg << "d=" << R.to_text(d) << ": pair sum gives " << exact_string(sum)
            << ", expected " << exact_string(lhs);
        fail(name, msg);
        ok = false;
        break;
      }
    }
    if (ok) {
      std::ostringstream note;
      note << checked << " moduli, all nonzero divisor pairs";
      pass(name, note.str());
    }
  }

  // --- mobius-phi-ratio --------------------------------------------------
  // Over monic factorizations d = m*n: sum mu(m)/|n| equals
  // (-1)^{omega(d)} * phi(rad d)/|d|, exactly.
  {
    const std::string name = "mobius-phi-ratio";
    bool ok = true;
    long long checked = 0;
    for (int degd = 0; ok && degd <= max_deg + 1; ++degd) {
      for (const PolyA& d : R.monics_of_degree(degd)) {
        BigRat sum = 0;
        for (int degm = 0; degm <= degd; ++degm) {
          for (const PolyA& m : R.monics_of_degree(degm)) {
            if (!R.divides(m, d)) continue;
            const PolyA n = R.quo(d, m);
            sum += BigRat(BigInt(mu(R, m)), R.norm(n));
          }
        }
        const int sign = omega(R, d) % 2 == 0 ? 1 : -1;
        const BigRat rhs =
            BigRat(sign * euler_phi(R, radical(R, d)), R.norm(d));
        ++checked;
        if (sum != rhs) {
          std::ostringstream msg;
          msg << "d=" << R.to_text(d) << ": monic split sum gives "
              << exact_string(sum) << ", expected " << exact_string(rhs);
          fail(name, msg);
          ok = false;
          break;
        }
      }
    }
    if (ok) {
      std::ostringstream note;
      note << checked << " monic moduli up to degree " << max_deg + 1;
      pass(name, note.str());
    }
  }

  // --- mobius-multiplicative ---------------------------------------------
  // mu(ab) = mu(a)mu(b) for coprime monic a, b; mu ignores unit factors.
  {
    const std::string name = "mobius-multiplicative";
    bool ok = true;
    long long checked = 0;
    for (int da = 0; ok && da <= max_deg; ++da) {
      for (int db = 0; ok && da + db <= max_deg; ++db) {
        for (const PolyA& a : R.monics_of_degree(da)) {
          for (const PolyA& b : R.monics_of_degree(db)) {
            if (!PolyRing::is_unit(R.gcd(a, b))) continue;
            ++checked;
            if (mu(R, R.mul(a, b)) != mu(R, a) * mu(R, b)) {
              std::ostringstream msg;
              msg << "a=" << R.to_text(a) << ", b=" << R.to_text(b)
                  << ": mu(ab)=" << mu(R, R.mul(a, b)) << " but mu(a)mu(b)="
                  << mu(R, a) * mu(R, b);
              fail(name, msg);
              ok = false;
              break;
            }
          }
          if (!ok) break;
        }
      }
    }
    if (ok) {
      for (int da = 1; ok && da <= max_deg; ++da) {
        for (const PolyA& a : R.monics_of_degree(da)) {
          for (unsigned u = 2; u < q; ++u) {
            const PolyA ua = R.scale(FqElem{static_cast<std::uint16_t>(u)}, a);
            if (mu(R, ua) != mu(R, a)) {
              std::ostringstream msg;
              msg << "a=" << R.to_text(a) << ", unit " << u
                  << ": mu changed under unit scaling";
              fail(name, msg);
              ok = false;
              break;
            }
          }
          if (!ok) break;
        }
      }
    }
    if (ok) {
      std::ostringstream note;
      note << checked << " coprime monic pairs, plus unit scaling";
      pass(name, note.str());
    }
  }

  // --- phi-unit-count ------------------------------------------------------
  // phi(a) = #{residues r mod a : gcd(r, a) = 1}, counted directly.
  {
    const std::string name = "phi-unit-count";
    bool ok = true;
    long long checked = 0;
    const int bound = std::min(3, max_deg);
    for (int dega = 1; ok && dega <= bound; ++dega) {
      unsigned long long residues = 1;
      for (int i = 0; i < dega; ++i) residues *= q;
      for (const PolyA& a : R.monics_of_degree(dega)) {
        BigInt units = 0;
        for (unsigned long long idx = 0; idx < residues; ++idx) {
          const PolyA r = detail::residue_of_index(R, dega, idx);
          if (!PolyRing::is_zero(r) && detail::is_unit_residue(R, r, a))
            ++units;
        }
        ++checked;
        if (units != euler_phi(R, a)) {
          std::ostringstream msg;
          msg << "a=" << R.to_text(a) << ": counted " << units
              << " units, phi gives " << euler_phi(R, a);
          fail(name, msg);
          ok = false;
          break;
        }
      }
    }
    if (ok) {
      std::ostringstream note;
      note << checked << " moduli up to degree " << bound;
      pass(name, note.str());
    }
  }

  // --- gl-count-bruteforce -------------------------------------------------
  // count_gl(r, a) = #{r x r matrices over A/aA with unit determinant},
  // counted by full matrix enumeration while |a|^{r^2} <= 10^5.  The 1x1
  // case is the unit group, so it is checked against phi (itself grounded
  // by phi-unit-count) instead of re-enumerating scalars.
  {
    const std::string name = "gl-count-bruteforce";
    bool ok = true;
    long long checked = 0;
    for (int dega = 1; ok && dega <= max_deg; ++dega) {
      for (const PolyA& a : R.monics_of_degree(dega)) {
        ++checked;
        if (count_gl(R, 1, a) != euler_phi(R, a)) {
          std::ostringstream msg;
          msg << "r=1, a=" << R.to_text(a)
              << ": count_gl disagrees with the unit count "
              << euler_phi(R, a);
          fail(name, msg);
          ok = false;
          break;
        }
      }
    }
    for (int r = 2; ok && r <= 3; ++r) {
      for (int dega = 1; ok; ++dega) {
        // matrices = q^{dega * r^2}; stop once past the work cap
        long double matf = 1.0L;
        for (int i = 0; i < dega * r * r; ++i) matf *= q;
        if (matf > 100000.0L) break;
        const unsigned long long matrices =
            static_cast<unsigned long long>(matf + 0.5L);
        unsigned long long residues = 1;
        for (int i = 0; i < dega; ++i) residues *= q;
        for (const PolyA& a : R.monics_of_degree(dega)) {
          std::vector<PolyA> reps;
          reps.reserve(residues);
          for (unsigned long long idx = 0; idx < residues; ++idx)
            reps.push_back(detail::residue_of_index(R, dega, idx));
          BigInt invertible = 0;
          std::vector<PolyA> entry(static_cast<std::size_t>(r) * r);
          for (unsigned long long m = 0; m < matrices; ++m) {
            unsigned long long rest = m;
            for (int s = 0; s < r * r; ++s) {
              entry[static_cast<std::size_t>(s)] = reps[rest % residues];
              rest /= residues;
            }
            const PolyA det = detail::matrix_det(R, entry, r, a);
            if (!PolyRing::is_zero(det) &&
                detail::is_unit_residue(R, det, a))
              ++invertible;
          }
          ++checked;
          if (invertible != count_gl(R, r, a)) {
            std::ostringstream msg;
            msg << "r=" << r << ", a=" << R.to_text(a) << ": brute count "
                << invertible << ", formula " << count_gl(R, r, a);
            fail(name, msg);
            ok = false;
            break;
          }
        }
      }
    }
    if (ok) {
      std::ostringstream note;
      note << checked << " (rank, modulus) pairs within the matrix-count cap";
      pass(name, note.str());
    }
  }

  // --- irreducible-count-bound ----------------------------------------------
  // The enumerated irreducible census matches the necklace formula and
  // stays within 3*q^{x/2}/x of q^x/x: (count*x - q^x)^2 <= 9*q^x, exactly.
  {
    const std::string name = "irreducible-count-bound";
    bool ok = true;
    const int bound = std::min(10, max_deg + 6);
    for (int x = 1; ok && x <= bound; ++x) {
      unsigned long long total = 1;
      for (int i = 0; i < x; ++i) total *= q;
      BigInt count = 0;
      for (unsigned long long idx = 0; idx < total; ++idx) {
        PolyA f = detail::residue_of_index(R, x, idx);
        f.c.resize(static_cast<std::size_t>(x) + 1, F.zero());
        f.c.back() = F.one();
        if (R.is_irreducible(f)) ++count;
      }
      if (count != R.irreducible_count(x)) {
        std::ostringstream msg;
        msg << "x=" << x << ": enumerated " << count
            << " irreducibles, necklace formula gives "
            << R.irreducible_count(x);
        fail(name, msg);
        ok = false;
        break;
      }
      const BigInt qx = ipow(BigInt(q), x);
      const BigInt dev = count * x - qx;
      if (dev * dev > 9 * qx) {
        std::ostringstream msg;
        msg << "x=" << x << ": census " << count
            << " misses q^x/x by more than 3*q^{x/2}/x";
        fail(name, msg);
        ok = false;
      }
    }
    if (ok) {
      std::ostringstream note;
      note << "degrees 1.." << bound << " against the necklace formula";
      pass(name, note.str());
    }
  }

  return out;
}

inline bool all_passed(const std::vector<IdentityCheck>& checks) {
  for (const IdentityCheck& c : checks)
    if (!c.passed) return false;
  return true;
}

}  // namespace eldiv

#endif  // ELDIV_IDENTITIES_HPP
