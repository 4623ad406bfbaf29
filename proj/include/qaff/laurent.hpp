#pragma once

// Laurent polynomials in the spectral variable z over an arbitrary
// coefficient ring. Exponents may be half-integers (stored doubled, see
// util.hpp), which the series module relies on.

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qaff/util.hpp"

namespace qaff {

inline bool scalar_is_zero(const mpq_class& x) { return x == 0; }

template <class S>
bool scalar_is_zero(const S& x) {
  return x.is_zero();
}

template <class S>
class LaurentPoly {
 public:
  using Term = std::pair<Half, S>;  // exponent stored as 2*value

  LaurentPoly() = default;
  LaurentPoly(int c) {
    if (c != 0) terms_.push_back({0, S(c)});
  }
  explicit LaurentPoly(S c) {
    if (!scalar_is_zero(c)) terms_.push_back({0, std::move(c)});
  }
  static LaurentPoly monomial(S c, Half exp2) {
    LaurentPoly p;
    if (!scalar_is_zero(c)) p.terms_.push_back({exp2, std::move(c)});
    return p;
  }
  static LaurentPoly z(int power = 1) { return monomial(S(1), whole(power)); }

  bool is_zero() const { return terms_.empty(); }
  const std::vector<Term>& terms() const { return terms_; }
  Half min_exp2() const { return terms_.front().first; }
  Half max_exp2() const { return terms_.back().first; }

  S coeff(Half exp2) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), exp2,
                               [](const Term& t, Half e) { return t.first < e; });
    if (it != terms_.end() && it->first == exp2) return it->second;
    return S();
  }

  LaurentPoly operator-() const {
    auto t = terms_;
    for (auto& [e, c] : t) c = -c;
    return from_terms(std::move(t));
  }

  LaurentPoly operator+(const LaurentPoly& o) const {
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    auto a = terms_.begin();
    auto b = o.terms_.begin();
    while (a != terms_.end() || b != o.terms_.end()) {
      if (b == o.terms_.end() || (a != terms_.end() && a->first < b->first)) out.push_back(*a++);
      else if (a == terms_.end() || b->first < a->first) out.push_back(*b++);
      else {
        S c = a->second + b->second;
        if (!scalar_is_zero(c)) out.push_back({a->first, std::move(c)});
        ++a, ++b;
      }
    }
    return from_terms(std::move(out));
  }

  LaurentPoly operator-(const LaurentPoly& o) const { return *this + (-o); }
  LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
  LaurentPoly& operator-=(const LaurentPoly& o) { return *this = *this - o; }

  LaurentPoly operator*(const LaurentPoly& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::map<Half, S> acc;
    for (const auto& [ea, ca] : terms_)
      for (const auto& [eb, cb] : o.terms_) {
        auto [it, fresh] = acc.try_emplace(ea + eb, S());
        it->second += ca * cb;
      }
    std::vector<Term> out;
    for (auto& [e, c] : acc)
      if (!scalar_is_zero(c)) out.push_back({e, std::move(c)});
    return from_terms(std::move(out));
  }

  LaurentPoly scaled(const S& s) const {
    if (scalar_is_zero(s)) return {};
    auto t = terms_;
    for (auto& [e, c] : t) c = c * s;
    LaurentPoly p = from_terms(std::move(t));
    p.prune();
    return p;
  }

  LaurentPoly shifted(Half exp2) const {
    auto t = terms_;
    for (auto& [e, c] : t) e += exp2;
    return from_terms(std::move(t));
  }

  // z -> z^{-1}
  LaurentPoly inverted_var() const {
    std::vector<Term> t;
    t.reserve(terms_.size());
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) t.push_back({-it->first, it->second});
    return from_terms(std::move(t));
  }

  // Substitute z -> c * z^k (k = +-1).
  LaurentPoly substituted(const S& c, int k) const {
    LaurentPoly r;
    for (const auto& [e, co] : terms_) {
      if (e % 2 != 0) fail(errc::internal_fault, "monomial substitution needs integer exponents");
      S factor = co * pow_scalar(c, e / 2);
      r = r + monomial(std::move(factor), k * e);
    }
    return r;
  }

  bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }

  template <class F>
  auto map(F&& f) const {
    using T = decltype(f(std::declval<const S&>()));
    LaurentPoly<T> out;
    std::vector<typename LaurentPoly<T>::Term> ts;
    for (const auto& [e, c] : terms_) {
      T v = f(c);
      if (!scalar_is_zero(v)) ts.push_back({e, std::move(v)});
    }
    return LaurentPoly<T>::from_terms(std::move(ts));
  }

  std::string str(const char* var = "z") const {
    if (terms_.empty()) return "0";
    std::string s;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      if (!s.empty()) s += " + ";
      s += "(" + it->second.str() + ")";
      if (it->first != 0) {
        s += std::string("*") + var + "^";
        if (it->first % 2 == 0) s += std::to_string(it->first / 2);
        else s += "(" + std::to_string(it->first) + "/2)";
      }
    }
    return s;
  }

  static LaurentPoly from_terms(std::vector<Term> t) {
    LaurentPoly p;
    p.terms_ = std::move(t);
    return p;
  }

  bool is_zero_elem() const { return is_zero(); }

 private:
  static S pow_scalar(const S& c, int k) {
    if (k == 0) return S(1);
    S base = k > 0 ? c : S(1) / c;
    S acc(1);
    for (int i = std::abs(k); i > 0; --i) acc = acc * base;
    return acc;
  }

  void prune() {
    terms_.erase(std::remove_if(terms_.begin(), terms_.end(),
                                [](const Term& t) { return scalar_is_zero(t.second); }),
                 terms_.end());
  }

  std::vector<Term> terms_;
};

template <class S>
bool scalar_is_zero(const LaurentPoly<S>& p) {
  return p.is_zero();
}

}  // namespace qaff
