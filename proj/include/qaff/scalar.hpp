#pragma once

// Exact arithmetic in Q(v), v = q^{1/2}, optionally extended by the formal
// quadratic element alpha with alpha^2 = v + v^{-1}. Every coefficient in the
// artifact is a FieldElement.

#include <optional>
#include <string>

#include "qaff/vpoly.hpp"

namespace qaff {

// A normalized quotient of Laurent polynomials in v. Canonical form:
// denominator is an ordinary polynomial with nonzero constant term, positive
// leading coefficient, primitive together with the numerator, and
// gcd(num, den) = 1.
class VFrac {
 public:
  VFrac() : num_(), den_(VPoly(Int(1))) {}
  VFrac(VPoly num, VPoly den);
  explicit VFrac(const Int& c) : num_(VPoly(c)), den_(VPoly(Int(1))) {}

  static VFrac of_rational(const Rat& r) {
    return VFrac(VPoly(Int(r.get_num())), VPoly(Int(r.get_den())));
  }

  const VPoly& num() const { return num_; }
  const VPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }

  VFrac operator-() const;
  VFrac operator+(const VFrac& o) const;
  VFrac operator-(const VFrac& o) const;
  VFrac operator*(const VFrac& o) const;
  VFrac operator/(const VFrac& o) const;
  bool operator==(const VFrac& o) const { return num_ == o.num_ && den_ == o.den_; }

  VFrac substituted_v_neg() const { return VFrac(num_.substituted_v_neg(), den_.substituted_v_neg()); }

  Rat eval(const Rat& x) const;

  std::string str() const;

 private:
  struct raw_tag {};
  VFrac(raw_tag, VPoly num, VPoly den) : num_(std::move(num)), den_(std::move(den)) {}
  // Content/sign/shift normalization only; the caller guarantees
  // gcd(num, den) = 1 up to content.
  static VFrac coprime_parts(VPoly num, VPoly den);

  VPoly num_, den_;  // canonical
};

class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(int c) : rat_(VFrac(Int(c))) {}
  explicit FieldElement(const Int& c) : rat_(VFrac(c)) {}
  explicit FieldElement(VFrac rat) : rat_(std::move(rat)) {}
  FieldElement(VFrac rat, VFrac alp) : rat_(std::move(rat)), alp_(std::move(alp)) {}

  static FieldElement v_power(int k) { return FieldElement(VFrac(VPoly::monomial(1, k), VPoly(Int(1)))); }
  static FieldElement q_power(int k) { return v_power(2 * k); }
  static FieldElement alpha() { return FieldElement(VFrac(), VFrac(Int(1))); }
  static FieldElement of_rational(const Rat& r) { return FieldElement(VFrac::of_rational(r)); }

  const VFrac& rat_part() const { return rat_; }
  const VFrac& alpha_part() const { return alp_; }
  bool is_zero() const { return rat_.is_zero() && alp_.is_zero(); }
  bool is_one() const { return rat_.is_one() && alp_.is_zero(); }
  bool has_alpha() const { return !alp_.is_zero(); }

  FieldElement operator-() const { return {-rat_, -alp_}; }
  FieldElement operator+(const FieldElement& o) const { return {rat_ + o.rat_, alp_ + o.alp_}; }
  FieldElement operator-(const FieldElement& o) const { return {rat_ - o.rat_, alp_ - o.alp_}; }
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
  FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
  FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }
  FieldElement& operator/=(const FieldElement& o) { return *this = *this / o; }
  bool operator==(const FieldElement& o) const { return rat_ == o.rat_ && alp_ == o.alp_; }

  FieldElement inverse() const;
  FieldElement pow(int k) const;

  // v -> v^{-1} (the bar involution on the coefficient field; alpha is fixed
  // since alpha^2 = v + v^{-1} is bar-invariant).
  FieldElement substituted_v_neg() const { return {rat_.substituted_v_neg(), alp_.substituted_v_neg()}; }

  // Exact evaluation at v = x. Elements with a nonzero alpha part need an
  // explicit branch value for alpha.
  Rat specialize(const Rat& x, const std::optional<Rat>& alpha_branch = std::nullopt) const;

  std::string str() const;

 private:
  VFrac rat_, alp_;  // value = rat + alpha * alp
};

inline FieldElement operator*(int c, const FieldElement& x) { return FieldElement(c) * x; }

// [m]_i = (q_i^m - q_i^{-m})/(q_i - q_i^{-1}) with q_i = v^{norm_ii},
// norm_ii = (alpha_i|alpha_i). Evaluated as the symmetric exponent sum, so no
// division occurs.
FieldElement quantum_integer(int m, int norm_ii);

// [m]_i! = prod_{k=1}^m [k]_i — the divided-power denominator.
FieldElement quantum_factorial(int m, int norm_ii);

}  // namespace qaff
