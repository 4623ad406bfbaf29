#include "qaff/series.hpp"

#include <sstream>

namespace qaff {

FormalSeries::FormalSeries(ZPolyF coeffs, Half lo2, Half hi2, Direction dir)
    : coeffs_(std::move(coeffs)), lo2_(lo2), hi2_(hi2), dir_(dir) {
  if (lo2 > hi2) fail(errc::internal_fault, "empty series window");
  for (const auto& [e, c] : coeffs_.terms())
    if (e < lo2 || e > hi2) fail(errc::internal_fault, "series coefficient outside window");
}

FormalSeries FormalSeries::constant(const FieldElement& c, Half window2, Direction dir) {
  Half lo = dir == Direction::asc ? 0 : -window2;
  Half hi = dir == Direction::asc ? window2 : 0;
  return {ZPolyF(c), lo, hi, dir};
}

FieldElement FormalSeries::at(Half exp2) const {
  if (exp2 >= lo2_ && exp2 <= hi2_) return coeffs_.coeff(exp2);
  bool zero_side = dir_ == Direction::asc ? exp2 < lo2_ : exp2 > hi2_;
  if (zero_side) return FieldElement(0);
  fail(errc::internal_fault, "coefficient beyond truncation window");
}

FormalSeries FormalSeries::operator+(const FormalSeries& o) const {
  if (dir_ != o.dir_) fail(errc::direction_mismatch, "adding series of opposite directions");
  Half lo, hi;
  if (dir_ == Direction::asc) {
    lo = std::min(lo2_, o.lo2_);
    hi = std::min(hi2_, o.hi2_);
  } else {
    lo = std::max(lo2_, o.lo2_);
    hi = std::max(hi2_, o.hi2_);
  }
  if (lo > hi) fail(errc::internal_fault, "window intersection empty in add");
  ZPolyF sum = coeffs_ + o.coeffs_;
  std::vector<ZPolyF::Term> kept;
  for (const auto& [e, c] : sum.terms())
    if (e >= lo && e <= hi) kept.push_back({e, c});
  return {ZPolyF::from_terms(std::move(kept)), lo, hi, dir_};
}

FormalSeries FormalSeries::operator-(const FormalSeries& o) const { return *this + (-o); }

FormalSeries FormalSeries::operator*(const FormalSeries& o) const {
  if (dir_ != o.dir_)
    fail(errc::direction_mismatch, "multiplying series of opposite directions");
  Half lo, hi;
  if (dir_ == Direction::asc) {
    lo = lo2_ + o.lo2_;
    hi = std::min(hi2_ + o.lo2_, o.hi2_ + lo2_);
  } else {
    hi = hi2_ + o.hi2_;
    lo = std::max(lo2_ + o.hi2_, o.lo2_ + hi2_);
  }
  if (lo > hi) fail(errc::internal_fault, "window intersection empty in mul");
  ZPolyF prod = coeffs_ * o.coeffs_;
  std::vector<ZPolyF::Term> kept;
  for (const auto& [e, c] : prod.terms())
    if (e >= lo && e <= hi) kept.push_back({e, c});
  return {ZPolyF::from_terms(std::move(kept)), lo, hi, dir_};
}

bool FormalSeries::operator==(const FormalSeries& o) const {
  return dir_ == o.dir_ && lo2_ == o.lo2_ && hi2_ == o.hi2_ && coeffs_ == o.coeffs_;
}

FormalSeries FormalSeries::reciprocal() const {
  // Peel off the extreme known-side monomial, then invert by the standard
  // convolution recurrence. Exponents walk in half-unit steps.
  if (coeffs_.is_zero()) fail(errc::division_by_zero, "reciprocal of zero series");
  const bool asc = dir_ == Direction::asc;
  const Half lead = asc ? coeffs_.min_exp2() : coeffs_.max_exp2();
  const FieldElement c0 = coeffs_.coeff(lead);
  const int len = asc ? hi2_ - lead : lead - lo2_;
  const int step = asc ? 1 : -1;

  std::vector<FieldElement> a(len + 1), b(len + 1);
  for (int k = 0; k <= len; ++k) a[k] = coeffs_.coeff(lead + step * k) / c0;
  b[0] = FieldElement(1);
  for (int k = 1; k <= len; ++k) {
    FieldElement acc;
    for (int j = 1; j <= k; ++j)
      if (!a[j].is_zero() && !b[k - j].is_zero()) acc += a[j] * b[k - j];
    b[k] = -acc;
  }

  std::vector<ZPolyF::Term> ts;
  for (int k = 0; k <= len; ++k) {
    FieldElement c = b[k] / c0;
    if (!c.is_zero()) ts.push_back({-lead + step * k, c});
  }
  std::sort(ts.begin(), ts.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  Half nlo = asc ? -lead : -lead - len;
  return {ZPolyF::from_terms(std::move(ts)), nlo, nlo + len, dir_};
}

bool FormalSeries::is_one_in_window() const {
  for (const auto& [e, c] : coeffs_.terms()) {
    if (e == 0 && c.is_one()) continue;
    return false;
  }
  return coeffs_.coeff(0).is_one() || (lo2_ > 0 || hi2_ < 0);
}

std::string FormalSeries::str() const {
  std::ostringstream os;
  os << (dir_ == Direction::asc ? "asc" : "desc") << "[" << lo2_ << "/2," << hi2_ << "/2] ";
  os << coeffs_.str();
  return os.str();
}

FormalSeries assemble_mixed_desc(const FormalSeries& asc_part, const FormalSeries& desc_part,
                                 Half keep_hi2) {
  if (asc_part.dir() != Direction::asc || desc_part.dir() != Direction::desc)
    fail(errc::direction_mismatch, "assemble_mixed_desc wants one series of each direction");
  ZPolyF conv = asc_part.coeffs() * desc_part.coeffs();
  Half lo = desc_part.lo2() + asc_part.lo2();
  std::vector<ZPolyF::Term> kept;
  for (const auto& [e, c] : conv.terms())
    if (e >= lo && e <= keep_hi2) kept.push_back({e, c});
  return {ZPolyF::from_terms(std::move(kept)), lo, keep_hi2, Direction::desc};
}

namespace {

// (p; p)_m = prod_{j=1..m} (1 - p^j)
std::vector<FieldElement> pochhammer_base_factorials(const FieldElement& p, int order) {
  std::vector<FieldElement> f(order + 1);
  f[0] = FieldElement(1);
  FieldElement pk(1);
  for (int m = 1; m <= order; ++m) {
    pk = pk * p;
    f[m] = f[m - 1] * (FieldElement(1) - pk);
  }
  return f;
}

FormalSeries series_from_coeffs(const std::vector<FieldElement>& a, int zexp) {
  std::vector<ZPolyF::Term> ts;
  int order = static_cast<int>(a.size()) - 1;
  for (int m = 0; m <= order; ++m)
    if (!a[m].is_zero()) ts.push_back({whole(zexp * m), a[m]});
  std::sort(ts.begin(), ts.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  Direction dir = zexp >= 0 ? Direction::asc : Direction::desc;
  Half lo = zexp >= 0 ? 0 : whole(-order);
  Half hi = zexp >= 0 ? whole(order) : 0;
  return {ZPolyF::from_terms(std::move(ts)), lo, hi, dir};
}

void validate_spec(const PochhammerSpec& spec, int order) {
  if (order < 0) fail(errc::config_error, "negative series order");
  if (spec.zexp == 0 && !spec.coeff.is_zero())
    fail(errc::config_error, "constant Pochhammer argument is outside the series model");
  if (spec.zexp < -1 || spec.zexp > 1) fail(errc::config_error, "Pochhammer z-exponent must be -1, 0, 1");
}

}  // namespace

FormalSeries pochhammer_series(const PochhammerSpec& spec, int order) {
  validate_spec(spec, order);
  if (spec.coeff.is_zero())
    return FormalSeries::one(whole(order), spec.zexp >= 0 ? Direction::asc : Direction::desc);
  auto fact = pochhammer_base_factorials(spec.base, order);
  // (a; p) = sum_m (-a)^m p^{m(m-1)/2} / (p;p)_m
  std::vector<FieldElement> a(order + 1);
  a[0] = FieldElement(1);
  FieldElement cm(1), pm(1);  // (-c)^m, p^{m(m-1)/2} via p^{m-1} steps
  FieldElement ppow(1);
  for (int m = 1; m <= order; ++m) {
    cm = cm * (-spec.coeff);
    if (m >= 2) ppow = ppow * spec.base;  // p^{m-1}
    pm = pm * ppow;
    a[m] = cm * pm / fact[m];
  }
  return series_from_coeffs(a, spec.zexp);
}

FormalSeries pochhammer_inv_series(const PochhammerSpec& spec, int order) {
  validate_spec(spec, order);
  if (spec.coeff.is_zero())
    return FormalSeries::one(whole(order), spec.zexp >= 0 ? Direction::asc : Direction::desc);
  auto fact = pochhammer_base_factorials(spec.base, order);
  // 1/(a; p) = sum_m a^m / (p;p)_m
  std::vector<FieldElement> a(order + 1);
  a[0] = FieldElement(1);
  FieldElement cm(1);
  for (int m = 1; m <= order; ++m) {
    cm = cm * spec.coeff;
    a[m] = cm / fact[m];
  }
  return series_from_coeffs(a, spec.zexp);
}

FormalSeries pochhammer_series_oracle(const PochhammerSpec& spec, int order) {
  validate_spec(spec, order);
  if (spec.coeff.is_zero())
    return FormalSeries::one(whole(order), spec.zexp >= 0 ? Direction::asc : Direction::desc);
  // functional equation f(z) = (1 - cz) f(pz):
  // a_m (1 - p^m) = -c p^{m-1} a_{m-1}
  std::vector<FieldElement> a(order + 1);
  a[0] = FieldElement(1);
  FieldElement pm1(1);  // p^{m-1}
  FieldElement pm(1);   // p^m
  for (int m = 1; m <= order; ++m) {
    pm = pm * spec.base;
    a[m] = -spec.coeff * pm1 * a[m - 1] / (FieldElement(1) - pm);
    pm1 = pm1 * spec.base;
  }
  return series_from_coeffs(a, spec.zexp);
}

FormalSeries pochhammer_inv_series_oracle(const PochhammerSpec& spec, int order) {
  return pochhammer_series_oracle(spec, order).reciprocal();
}

std::vector<PochFactor> rho_factors(const FieldElement& xi) {
  FieldElement q2inv = FieldElement::q_power(-1);
  q2inv = q2inv * q2inv;  // q^{-2}
  FieldElement p = xi * xi;
  FieldElement one(1);
  return {
      {{one, -1, p}, +1},          // (z^{-1}; xi^2)
      {{q2inv * xi, +1, p}, +1},   // (q^{-2} xi z; xi^2)
      {{xi, +1, p}, +1},           // (xi z; xi^2)
      {{q2inv * xi * xi, +1, p}, +1},  // (q^{-2} xi^2 z; xi^2)
      {{one, +1, p}, -1},          // (z; xi^2)
      {{q2inv * xi * xi, +1, p}, -1},  // (q^{-2} xi^2 z; xi^2)
      {{xi, -1, p}, -1},           // (xi z^{-1}; xi^2)
      {{q2inv * xi, -1, p}, -1},   // (q^{-2} xi z^{-1}; xi^2)
  };
}

std::vector<PochFactor> f_factors(const FieldElement& xi) {
  FieldElement q2inv = FieldElement::q_power(-2);
  FieldElement p = xi * xi;
  return {
      {{xi, -1, p}, +1},            // (xi z^{-1}; xi^2)
      {{q2inv, -1, p}, +1},         // (q^{-2} z^{-1}; xi^2)
      {{xi * xi, -1, p}, -1},       // (xi^2 z^{-1}; xi^2)
      {{q2inv * xi, -1, p}, -1},    // (q^{-2} xi z^{-1}; xi^2)
  };
}

namespace {

FormalSeries product_of(const std::vector<PochFactor>& factors, int zexp_filter, int order,
                        bool oracle_route) {
  Direction dir = zexp_filter >= 0 ? Direction::asc : Direction::desc;
  FormalSeries acc = FormalSeries::one(whole(order), dir);
  // the oracle route multiplies in reverse order and divides by convolution
  std::vector<PochFactor> list = factors;
  if (oracle_route) std::reverse(list.begin(), list.end());
  for (const auto& f : list) {
    if (f.spec.zexp != zexp_filter) continue;
    FormalSeries s;
    if (!oracle_route)
      s = f.power > 0 ? pochhammer_series(f.spec, order) : pochhammer_inv_series(f.spec, order);
    else
      s = f.power > 0 ? pochhammer_series_oracle(f.spec, order)
                      : pochhammer_inv_series_oracle(f.spec, order);
    acc = acc * s;
  }
  return acc;
}

}  // namespace

RhoParts rho_parts(const FieldElement& xi, int order, bool oracle_route) {
  auto fs = rho_factors(xi);
  return {product_of(fs, +1, order, oracle_route), product_of(fs, -1, order, oracle_route), 1};
}

FormalSeries rho_series(const FieldElement& xi, int order, bool oracle_route) {
  RhoParts parts = rho_parts(xi, order, oracle_route);
  FormalSeries mixed = assemble_mixed_desc(parts.asc_part, parts.desc_part, 0);
  return mixed.shifted(whole(parts.z_prefactor));
}

FormalSeries f_series(const FieldElement& xi, int order, bool oracle_route) {
  return product_of(f_factors(xi), -1, order, oracle_route);
}

FormalSeries g_series(const FieldElement& xi, int order) {
  return rho_series(xi, order) * f_series(xi, order);
}

FGPair f_g_series(const CartanData& data, int order) {
  FieldElement xi = derive_xi(data).xi;
  return {f_series(xi, order), g_series(xi, order)};
}

FormalSeries expand_rational(const ZPolyF& num, const ZPolyF& den, Direction dir, int order) {
  if (den.is_zero()) fail(errc::division_by_zero, "rational expansion with zero denominator");
  Half dlo = den.min_exp2(), dhi = den.max_exp2();
  Half span = whole(order);
  FormalSeries d(den, dir == Direction::asc ? dlo : dlo - span,
                 dir == Direction::asc ? dhi + span : dhi, dir);
  FormalSeries rec = d.reciprocal();
  if (num.is_zero()) return FormalSeries(ZPolyF(), rec.lo2(), rec.hi2(), dir);
  // the numerator is a polynomial: widen its window so only the denominator
  // truncation limits the product
  Half pad = whole(2 * order) + std::abs(dlo) + std::abs(dhi) + std::abs(num.min_exp2()) +
             std::abs(num.max_exp2()) + 4;
  FormalSeries n(num, dir == Direction::asc ? num.min_exp2() : num.min_exp2() - pad,
                 dir == Direction::asc ? num.max_exp2() + pad : num.max_exp2(), dir);
  return n * rec;
}

DoubleSwapReport double_swap_check(const CartanData& data, int order,
                                   std::optional<int> mutate_factor) {
  DoubleSwapReport rep;
  FieldElement xi = derive_xi(data).xi;

  // factor multiset of rho(z) rho(1/z): rho(z) factors plus the z -> 1/z
  // flips; the z * z^{-1} prefactors cancel.
  std::vector<PochFactor> sigma = rho_factors(xi);
  {
    std::vector<PochFactor> flipped = sigma;
    for (auto& f : flipped) f.spec.zexp = -f.spec.zexp;
    sigma.insert(sigma.end(), flipped.begin(), flipped.end());
  }
  if (mutate_factor) {
    if (*mutate_factor < 0 || *mutate_factor >= static_cast<int>(sigma.size()))
      fail(errc::config_error, "mutation index out of range");
    sigma[*mutate_factor].spec.coeff = -sigma[*mutate_factor].spec.coeff;
  }

  FormalSeries asc_prod = product_of(sigma, +1, order, false);
  FormalSeries desc_prod = product_of(sigma, -1, order, false);
  rep.asc_product_is_one = asc_prod.is_one_in_window();
  rep.desc_product_is_one = desc_prod.is_one_in_window();

  UnitarityResult uni = unitarity_scalar(data);
  rep.lambda_is_one = uni.is_one;

  // (P Rbar(z) P) Rbar(1/z) as a matrix of desc expansions. All entries share
  // the window [-(order+2), 0], so plain polynomial convolution truncated to
  // [-order, 0] is exact there.
  RMatrix r = build_rbar(data, xi);
  const int N2 = data.N * data.N;
  MatZ prpp(N2, N2);
  r.numer.for_each([&](int i, int j, const ZPolyF& p) {
    int i1 = i / data.N, i2 = i % data.N, j1 = j / data.N, j2 = j % data.N;
    prpp.set(i2 * data.N + i1, j2 * data.N + j1, p);
  });

  auto truncate_desc = [](const ZPolyF& p, Half lo) {
    std::vector<ZPolyF::Term> kept;
    for (const auto& [e, c] : p.terms())
      if (e >= lo && e <= 0) kept.push_back({e, c});
    return ZPolyF::from_terms(std::move(kept));
  };
  auto expand_mat = [&](const MatZ& numer, const ZPolyF& den) {
    return numer.map([&](const ZPolyF& p) {
      return expand_rational(p, den, Direction::desc, order + 2).coeffs();
    });
  };
  MatZ s1 = expand_mat(prpp, r.denom);
  MatZ numer_inv = r.numer.map([](const ZPolyF& p) { return p.inverted_var(); });
  MatZ s2 = expand_mat(numer_inv, r.denom.inverted_var());
  MatZ prod = (s1 * s2).map([&](const ZPolyF& p) { return truncate_desc(p, whole(-order)); });
  MatZ expect(N2, N2);
  for (int i = 0; i < N2; ++i) expect.set(i, i, ZPolyF(1));
  MatZ resmat = prod - expect;

  int residual_entries = resmat.nnz();
  std::ostringstream detail;
  resmat.for_each([&](int i, int j, const ZPolyF& p) {
    if (detail.tellp() < 200) detail << "(" << i << "," << j << "): " << p.str() << "; ";
  });
  rep.matrix_residual_entries = residual_entries;
  rep.zero = rep.asc_product_is_one && rep.desc_product_is_one && rep.lambda_is_one &&
             residual_entries == 0;
  rep.detail = detail.str();
  return rep;
}

ZPolyF delta_contract(const TwoVarPoly& cofactor, const FieldElement& shift) {
  if (!cofactor.separable) fail(errc::non_separable, "delta contraction needs separable terms");
  ZPolyF out;
  for (const auto& [e1, e2, c] : cofactor.terms) {
    if (e2 % 2 != 0) fail(errc::internal_fault, "z2 exponent must be integral for substitution");
    FieldElement coeff = c * shift.pow(e2 / 2);
    out = out + ZPolyF::monomial(coeff, e1 + e2);
  }
  return out;
}

}  // namespace qaff
