#pragma once

// Truncated formal Laurent series with half-integer exponents and an explicit
// expansion direction; q-Pochhammer products; the scalar factors rho(z),
// F(z), G(z); delta-distribution bookkeeping; and the double-application
// consistency identity tying rho to Rbar.

#include <optional>

#include "qaff/rmatrix.hpp"

namespace qaff {

enum class Direction { asc, desc };  // ascending in z vs ascending in z^{-1}

// Coefficients are exact on the window [lo2, hi2] (exponents doubled).
// asc: exponents below lo2 are zero, the truncated tail lives above hi2.
// desc: exponents above hi2 are zero, the truncated tail lives below lo2.
class FormalSeries {
 public:
  FormalSeries() = default;
  FormalSeries(ZPolyF coeffs, Half lo2, Half hi2, Direction dir);

  static FormalSeries constant(const FieldElement& c, Half window2, Direction dir);
  static FormalSeries one(Half window2, Direction dir) {
    return constant(FieldElement(1), window2, dir);
  }

  const ZPolyF& coeffs() const { return coeffs_; }
  Half lo2() const { return lo2_; }
  Half hi2() const { return hi2_; }
  Direction dir() const { return dir_; }

  // Exact coefficient; exponents in the zero-known region return 0, the
  // truncated-tail side faults.
  FieldElement at(Half exp2) const;

  FormalSeries operator+(const FormalSeries& o) const;
  FormalSeries operator-(const FormalSeries& o) const;
  FormalSeries operator*(const FormalSeries& o) const;  // rejects mixed directions
  FormalSeries operator-() const { return {-coeffs_, lo2_, hi2_, dir_}; }
  bool operator==(const FormalSeries& o) const;

  FormalSeries scaled(const FieldElement& c) const { return {coeffs_.scaled(c), lo2_, hi2_, dir_}; }
  FormalSeries shifted(Half exp2) const { return {coeffs_.shifted(exp2), lo2_ + exp2, hi2_ + exp2, dir_}; }
  FormalSeries inverted_var() const { return {coeffs_.inverted_var(), -hi2_, -lo2_, flip(dir_)}; }

  // Multiplicative inverse; the extreme coefficient on the known side must be
  // invertible. The result window has the same length.
  FormalSeries reciprocal() const;

  bool is_one_in_window() const;
  std::string str() const;

  static Direction flip(Direction d) { return d == Direction::asc ? Direction::desc : Direction::asc; }

 private:
  ZPolyF coeffs_;
  Half lo2_ = 0, hi2_ = 0;
  Direction dir_ = Direction::asc;
};

// The documented mixed-direction assembly: finite convolution of the stored
// coefficients, re-flagged desc and chopped at the asc part's constant
// alignment. This is a truncation protocol, not an analytic resummation; see
// rho_series.
FormalSeries assemble_mixed_desc(const FormalSeries& asc_part, const FormalSeries& desc_part,
                                 Half keep_hi2);

// (c z^e; p)_infty with the convention (a; p)_infty = prod_{k>=0} (1 - a p^k).
struct PochhammerSpec {
  FieldElement coeff;  // c
  int zexp = 1;        // e in {-1, 0, +1}
  FieldElement base;   // p
};

// Closed-form expansions (Euler): the primary route.
FormalSeries pochhammer_series(const PochhammerSpec& spec, int order);
FormalSeries pochhammer_inv_series(const PochhammerSpec& spec, int order);

// Functional-equation route: coefficients from the recurrence
// a_m (1 - p^m) = -c p^{m-1} a_{m-1}, inverses by convolution division.
// Independently coded oracle for the dual-implementation checks.
FormalSeries pochhammer_series_oracle(const PochhammerSpec& spec, int order);
FormalSeries pochhammer_inv_series_oracle(const PochhammerSpec& spec, int order);

// One multiplicative factor of a Pochhammer quotient.
struct PochFactor {
  PochhammerSpec spec;
  int power = 1;  // +1 numerator, -1 denominator
};

// The eight factors of rho(z) (Eq-level data) and the four of F(z).
std::vector<PochFactor> rho_factors(const FieldElement& xi);
std::vector<PochFactor> f_factors(const FieldElement& xi);

struct RhoParts {
  FormalSeries asc_part;   // product of the z-argument factors
  FormalSeries desc_part;  // product of the z^{-1}-argument factors
  int z_prefactor = 1;
};

RhoParts rho_parts(const FieldElement& xi, int order, bool oracle_route = false);

// rho(z) assembled in the z^{-1}-ascending direction after factoring the z
// prefactor; window [1-order, 1]. Coefficients are the canonical truncation-
// protocol values (the analytic mixed product has no exact rational form).
FormalSeries rho_series(const FieldElement& xi, int order, bool oracle_route = false);

// F(z): all four arguments are small in z^{-1}, so this is an exact desc
// series with constant term 1. G = rho * F under the assembly protocol.
FormalSeries f_series(const FieldElement& xi, int order, bool oracle_route = false);
FormalSeries g_series(const FieldElement& xi, int order);

struct FGPair {
  FormalSeries F, G;
};
FGPair f_g_series(const CartanData& data, int order);

// Expand a rational function num/den in the requested direction, exact on a
// window of the given length.
FormalSeries expand_rational(const ZPolyF& num, const ZPolyF& den, Direction dir, int order);

struct DoubleSwapReport {
  bool zero = false;
  bool lambda_is_one = false;
  bool asc_product_is_one = false;
  bool desc_product_is_one = false;
  int matrix_residual_entries = 0;
  std::string detail;
};

// Verifies rho(z) rho(1/z) (P Rbar(z) P) Rbar(1/z) = Id to the given order:
// the Pochhammer factor groups of rho(z) rho(1/z) must each collapse to 1,
// and the series-expanded matrix product must be the identity. An optional
// mutation scales the coefficient of one rho factor (fault injection).
DoubleSwapReport double_swap_check(const CartanData& data, int order,
                                   std::optional<int> mutate_factor = std::nullopt);

// A finite sum of separable monomials c * z1^{e1} * z2^{e2}.
struct TwoVarPoly {
  std::vector<std::tuple<Half, Half, FieldElement>> terms;
  bool separable = true;
};

// delta(s z1/z2) f(z1, z2) = delta(s z1/z2) f(z1, s z1): substitutes
// z2 := shift * z1 in the cofactor and returns the collapsed one-variable
// polynomial multiplying the retained delta.
ZPolyF delta_contract(const TwoVarPoly& cofactor, const FieldElement& shift);

}  // namespace qaff
