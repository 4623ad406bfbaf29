#pragma once

// Laurent polynomials in the base variable v with arbitrary-precision integer
// coefficients. These are the raw material for the coefficient field Q(v).

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

#include "qaff/util.hpp"

namespace qaff {

using Int = mpz_class;
using Rat = mpq_class;

Int int_gcd(const Int& a, const Int& b);

// mpq_class(a, b) does not canonicalize; route constructions through this.
inline Rat make_rat(long num, long den) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

class VPoly {
 public:
  // (exponent, coefficient), ascending exponents, no zero coefficients.
  using Term = std::pair<int, Int>;

  VPoly() = default;
  explicit VPoly(const Int& c) {
    if (c != 0) terms_.push_back({0, c});
  }
  static VPoly monomial(const Int& c, int exp) {
    VPoly p;
    if (c != 0) p.terms_.push_back({exp, c});
    return p;
  }

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const { return terms_.size() == 1 && terms_[0].first == 0 && terms_[0].second == 1; }
  const std::vector<Term>& terms() const { return terms_; }

  int min_exp() const;  // requires nonzero
  int max_exp() const;  // requires nonzero
  const Int& leading_coeff() const;   // coefficient of max_exp
  const Int& trailing_coeff() const;  // coefficient of min_exp
  Int coeff(int exp) const;

  VPoly operator-() const;
  VPoly operator+(const VPoly& o) const;
  VPoly operator-(const VPoly& o) const;
  VPoly operator*(const VPoly& o) const;
  bool operator==(const VPoly& o) const { return terms_ == o.terms_; }

  VPoly shifted(int k) const;              // * v^k
  VPoly scaled(const Int& c) const;        // * c
  VPoly substituted_v_neg() const;         // v -> v^{-1}

  Int content() const;                     // gcd of coefficients, sign of leading coeff
  VPoly primitive_part() const;

  // Exact division; aborts via internal-fault if not divisible.
  VPoly divexact(const VPoly& d) const;

  // Evaluation at an exact rational point v = x (x != 0).
  Rat eval(const Rat& x) const;

  std::string str() const;  // human-readable, for reports

  // Sorted-term constructor for internal use; terms must be normalized.
  static VPoly from_terms(std::vector<Term> t) {
    VPoly p;
    p.terms_ = std::move(t);
    return p;
  }

 private:
  std::vector<Term> terms_;
};

// gcd over Z[v] up to sign, computed on primitive parts with a primitive PRS.
// Both inputs may be Laurent; the common v-power is split off first.
VPoly vpoly_gcd(const VPoly& a, const VPoly& b);

}  // namespace qaff
