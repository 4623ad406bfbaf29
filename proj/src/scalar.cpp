#include "qaff/scalar.hpp"

namespace qaff {

VFrac::VFrac(VPoly num, VPoly den) {
  if (den.is_zero()) fail(errc::division_by_zero, "zero denominator in Q(v)");
  if (num.is_zero()) {
    num_ = VPoly();
    den_ = VPoly(Int(1));
    return;
  }
  if (den.terms().size() > 1 && num.terms().size() > 1) {
    VPoly h = vpoly_gcd(num, den);
    if (!h.is_one()) {
      num = num.divexact(h);
      den = den.divexact(h);
    }
  }
  *this = coprime_parts(std::move(num), std::move(den));
}

VFrac VFrac::coprime_parts(VPoly num, VPoly den) {
  if (num.is_zero()) return VFrac();
  // Make the denominator ordinary with nonzero constant term; the numerator
  // absorbs the v-shift. Then strip the shared integer content and fix signs.
  int shift = den.min_exp();
  den = den.shifted(-shift);
  num = num.shifted(-shift);

  Int cn = num.content(), cd = den.content();
  Int g = int_gcd(cn, cd);
  if (cd < 0) g = -g;  // positive leading coefficient for the denominator
  if (g != 1) {
    num = num.divexact(VPoly(g));
    den = den.divexact(VPoly(g));
  } else if (den.leading_coeff() < 0) {
    num = -num;
    den = -den;
  }
  return VFrac(raw_tag{}, std::move(num), std::move(den));
}

VFrac VFrac::operator-() const {
  VFrac r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

VFrac VFrac::operator+(const VFrac& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  if (den_.is_one() && o.den_.is_one()) {
    VPoly n = num_ + o.num_;
    if (n.is_zero()) return VFrac();
    return coprime_parts(std::move(n), VPoly(Int(1)));
  }
  // cancel the shared denominator factor first; with d = gcd(den1, den2)
  // the sum num1*(den2/d) + num2*(den1/d) over den1*(den2/d) can only share
  // factors of d with its denominator.
  VPoly d = vpoly_gcd(den_, o.den_);
  VPoly d2r = d.is_one() ? o.den_ : o.den_.divexact(d);
  VPoly n = num_ * d2r + o.num_ * (d.is_one() ? den_ : den_.divexact(d));
  if (n.is_zero()) return VFrac();
  VPoly den = den_ * d2r;
  if (!d.is_one()) {
    VPoly h = vpoly_gcd(n, d);
    if (!h.is_one()) {
      n = n.divexact(h);
      den = den.divexact(h);
    }
  }
  return coprime_parts(std::move(n), std::move(den));
}

VFrac VFrac::operator-(const VFrac& o) const { return *this + (-o); }

VFrac VFrac::operator*(const VFrac& o) const {
  if (is_zero() || o.is_zero()) return VFrac();
  // cross-cancel before multiplying so the final parts stay coprime
  VPoly a = num_, b = o.num_, da = den_, db = o.den_;
  if (!db.is_one() && a.terms().size() > 1) {
    VPoly g = vpoly_gcd(a, db);
    if (!g.is_one()) {
      a = a.divexact(g);
      db = db.divexact(g);
    }
  }
  if (!da.is_one() && b.terms().size() > 1) {
    VPoly g = vpoly_gcd(b, da);
    if (!g.is_one()) {
      b = b.divexact(g);
      da = da.divexact(g);
    }
  }
  return coprime_parts(a * b, da * db);
}

VFrac VFrac::operator/(const VFrac& o) const {
  if (o.is_zero()) fail(errc::division_by_zero, "division by zero in Q(v)");
  if (is_zero()) return VFrac();
  VFrac inv = coprime_parts(o.den_, o.num_);
  return *this * inv;
}

Rat VFrac::eval(const Rat& x) const {
  Rat d = den_.eval(x);
  if (d == 0) fail(errc::pole_at_sample, "denominator vanishes at sample point");
  Rat r = num_.eval(x) / d;
  r.canonicalize();
  return r;
}

std::string VFrac::str() const {
  if (den_.is_one()) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

namespace {
// alpha^2 = v + v^{-1}
const VFrac& alpha_sq() {
  static const VFrac a2 = VFrac(VPoly::monomial(1, 1) + VPoly::monomial(1, -1), VPoly(Int(1)));
  return a2;
}
}  // namespace

FieldElement FieldElement::operator*(const FieldElement& o) const {
  // (a + alpha b)(c + alpha d) = ac + (v+v^{-1}) bd + alpha (ad + bc)
  VFrac r = rat_ * o.rat_;
  if (!alp_.is_zero() && !o.alp_.is_zero()) r = r + alpha_sq() * (alp_ * o.alp_);
  VFrac a = rat_ * o.alp_ + alp_ * o.rat_;
  return {std::move(r), std::move(a)};
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) fail(errc::division_by_zero, "inverse of zero");
  if (alp_.is_zero()) return FieldElement(VFrac(Int(1)) / rat_);
  // 1/(a + alpha b) = (a - alpha b)/(a^2 - (v+v^{-1}) b^2)
  VFrac norm = rat_ * rat_ - alpha_sq() * (alp_ * alp_);
  if (norm.is_zero()) fail(errc::internal_fault, "alpha norm vanished; v+1/v is not a square in Q(v)");
  return {rat_ / norm, -(alp_ / norm)};
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
  if (o.alpha_part().is_zero()) {
    if (o.rat_part().is_zero()) fail(errc::division_by_zero, "division by zero");
    return {rat_ / o.rat_part(), alp_ / o.rat_part()};
  }
  return *this * o.inverse();
}

FieldElement FieldElement::pow(int k) const {
  if (k == 0) return FieldElement(1);
  FieldElement base = k > 0 ? *this : inverse();
  FieldElement acc(1);
  for (int i = std::abs(k); i > 0; --i) acc = acc * base;
  return acc;
}

Rat FieldElement::specialize(const Rat& x, const std::optional<Rat>& alpha_branch) const {
  if (x == 0) fail(errc::pole_at_sample, "specialize at v=0");
  Rat r = rat_.eval(x);
  if (!alp_.is_zero()) {
    if (!alpha_branch) fail(errc::alpha_branch_missing, "element has an alpha part");
    r += *alpha_branch * alp_.eval(x);
    r.canonicalize();
  }
  return r;
}

std::string FieldElement::str() const {
  if (alp_.is_zero()) return rat_.str();
  std::string s = rat_.is_zero() ? "" : rat_.str() + " + ";
  return s + "a*[" + alp_.str() + "]";
}

FieldElement quantum_integer(int m, int norm_ii) {
  if (m < 0) fail(errc::internal_fault, "quantum_integer needs m >= 0");
  // [m]_i = sum_{k=0}^{m-1} q_i^{m-1-2k}, q_i = v^{norm_ii}
  VPoly p;
  for (int k = 0; k < m; ++k) p = p + VPoly::monomial(1, norm_ii * (m - 1 - 2 * k));
  return FieldElement(VFrac(p, VPoly(Int(1))));
}

FieldElement quantum_factorial(int m, int norm_ii) {
  FieldElement acc(1);
  for (int k = 1; k <= m; ++k) acc = acc * quantum_integer(k, norm_ii);
  return acc;
}

}  // namespace qaff
