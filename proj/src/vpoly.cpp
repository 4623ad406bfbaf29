#include "qaff/vpoly.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace qaff {

Int int_gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

int VPoly::min_exp() const {
  if (terms_.empty()) fail(errc::internal_fault, "min_exp of zero polynomial");
  return terms_.front().first;
}

int VPoly::max_exp() const {
  if (terms_.empty()) fail(errc::internal_fault, "max_exp of zero polynomial");
  return terms_.back().first;
}

const Int& VPoly::leading_coeff() const {
  if (terms_.empty()) fail(errc::internal_fault, "leading_coeff of zero polynomial");
  return terms_.back().second;
}

const Int& VPoly::trailing_coeff() const {
  if (terms_.empty()) fail(errc::internal_fault, "trailing_coeff of zero polynomial");
  return terms_.front().second;
}

Int VPoly::coeff(int exp) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), exp,
                             [](const Term& t, int e) { return t.first < e; });
  if (it != terms_.end() && it->first == exp) return it->second;
  return 0;
}

VPoly VPoly::operator-() const {
  std::vector<Term> t = terms_;
  for (auto& [e, c] : t) c = -c;
  return from_terms(std::move(t));
}

VPoly VPoly::operator+(const VPoly& o) const {
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin(), b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && a->first < b->first)) {
      out.push_back(*a++);
    } else if (a == terms_.end() || b->first < a->first) {
      out.push_back(*b++);
    } else {
      Int c = a->second + b->second;
      if (c != 0) out.push_back({a->first, std::move(c)});
      ++a;
      ++b;
    }
  }
  return from_terms(std::move(out));
}

VPoly VPoly::operator-(const VPoly& o) const { return *this + (-o); }

VPoly VPoly::operator*(const VPoly& o) const {
  if (terms_.empty() || o.terms_.empty()) return {};
  if (is_one()) return o;
  if (o.is_one()) return *this;
  std::map<int, Int> acc;
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : o.terms_) acc[ea + eb] += ca * cb;
  std::vector<Term> out;
  out.reserve(acc.size());
  for (auto& [e, c] : acc)
    if (c != 0) out.push_back({e, std::move(c)});
  return from_terms(std::move(out));
}

VPoly VPoly::shifted(int k) const {
  std::vector<Term> t = terms_;
  for (auto& [e, c] : t) e += k;
  return from_terms(std::move(t));
}

VPoly VPoly::scaled(const Int& s) const {
  if (s == 0) return {};
  std::vector<Term> t = terms_;
  for (auto& [e, c] : t) c *= s;
  return from_terms(std::move(t));
}

VPoly VPoly::substituted_v_neg() const {
  std::vector<Term> t;
  t.reserve(terms_.size());
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) t.push_back({-it->first, it->second});
  return from_terms(std::move(t));
}

Int VPoly::content() const {
  Int g = 0;
  for (const auto& [e, c] : terms_) g = int_gcd(g, c);
  if (!terms_.empty() && leading_coeff() < 0) g = -g;
  return g;
}

VPoly VPoly::primitive_part() const {
  if (terms_.empty()) return {};
  Int g = content();
  std::vector<Term> t = terms_;
  for (auto& [e, c] : t) c /= g;
  return from_terms(std::move(t));
}

VPoly VPoly::divexact(const VPoly& d) const {
  if (d.is_zero()) fail(errc::division_by_zero, "divexact by zero polynomial");
  if (is_zero()) return {};
  if (d.is_one()) return *this;
  // Shift into ordinary polynomials, long-divide from the top.
  VPoly num = shifted(-min_exp());
  VPoly den = d.shifted(-d.min_exp());
  std::map<int, Int> quot;
  while (!num.is_zero()) {
    int e = num.max_exp() - den.max_exp();
    Int c = num.leading_coeff() / den.leading_coeff();
    if (e < 0 || c * den.leading_coeff() != num.leading_coeff())
      fail(errc::internal_fault, "divexact: not divisible");
    quot[e] = c;
    num = num - den * monomial(c, e);
  }
  std::vector<Term> out(quot.begin(), quot.end());
  return from_terms(std::move(out)).shifted(min_exp() - d.min_exp());
}

Rat VPoly::eval(const Rat& x) const {
  if (x == 0) fail(errc::pole_at_sample, "evaluation of Laurent polynomial at v=0");
  // Horner on the ordinary part, then one power of x for the shift.
  Rat acc = 0;
  int prev = 0;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!first) {
      for (int k = 0; k < prev - it->first; ++k) acc *= x;
    }
    acc += it->second;
    prev = it->first;
    first = false;
  }
  if (terms_.empty()) return 0;
  Rat shift = 1;
  int e = min_exp();
  Rat base = e >= 0 ? x : Rat(x.get_den(), x.get_num());
  for (int k = 0; k < std::abs(e); ++k) shift *= base;
  acc *= shift;
  acc.canonicalize();
  return acc;
}

std::string VPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    if (!first) os << (c > 0 ? " + " : " - ");
    else if (c < 0) os << "-";
    Int a = abs(c);
    if (a != 1 || e == 0) os << a.get_str();
    if (e != 0) {
      if (a != 1) os << "*";
      os << "v";
      if (e != 1) os << "^" << e;
    }
    first = false;
  }
  return os.str();
}

namespace {

// Pseudo-remainder of ordinary polynomials: lc(b)^(da-db+1) * a mod b.
VPoly prem(VPoly a, const VPoly& b) {
  int db = b.max_exp();
  while (!a.is_zero() && a.max_exp() >= db) {
    int e = a.max_exp() - db;
    Int ca = a.leading_coeff();
    a = a.scaled(b.leading_coeff()) - b * VPoly::monomial(ca, e);
  }
  return a;
}

}  // namespace

VPoly vpoly_gcd(const VPoly& a, const VPoly& b) {
  if (a.is_zero()) return b.is_zero() ? VPoly() : b.primitive_part();
  if (b.is_zero()) return a.primitive_part();
  VPoly x = a.shifted(-a.min_exp()).primitive_part();
  VPoly y = b.shifted(-b.min_exp()).primitive_part();
  if (x.max_exp() < y.max_exp()) std::swap(x, y);
  while (!y.is_zero()) {
    VPoly r = prem(x, y);
    x = y;
    y = r.is_zero() ? VPoly() : r.primitive_part();
  }
  return x;
}

}  // namespace qaff
