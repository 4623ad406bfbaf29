#pragma once

// The trigonometric R-matrix Rbar^{(1,1)}(z) on V (x) V, stored with the
// common denominator (1 - q^2 z)(1 - xi z) cleared, and its verification
// suite: Yang-Baxter, coproduct intertwining, unitarity, and the
// one-dimensional invariant subspace.

#include <map>
#include <optional>

#include "qaff/vecrep.hpp"

namespace qaff {

struct RMatrix {
  CartanData data;
  FieldElement xi;
  MatZ numer;    // N^2 x N^2, Laurent polynomials in z
  ZPolyF denom;  // (1 - q^2 z)(1 - xi z)

  int pair_index(int i, int j) const { return data.position(i) * data.N + data.position(j); }
};

RMatrix build_rbar(const CartanData& data, std::optional<FieldElement> xi_override = std::nullopt);

// Rational sample of every entry at exact (v0, z0); alpha never occurs here.
SparseMat<Rat> rbar_sampled(const RMatrix& r, const Rat& v0, const Rat& z0);

struct YbeReport {
  std::string pattern;  // argument pattern that was checked
  bool zero = false;
  int nonzero_entries = 0;
  std::string worst_entry;  // row/col of a nonzero residual, if any
};

// Sampled YBE check at exact rationals (v0, z0, w0), with the argument
// pattern R12(z/w) R13(z) R23(w) pinned by ybe_pattern_holds below.
YbeReport check_ybe_sampled(const CartanData& data, const Rat& v0, const Rat& z0, const Rat& w0,
                            const FieldElement* mutate_scale = nullptr);

// Exact in z with w fixed rational and v symbolic.
YbeReport check_ybe_exact(const CartanData& data, const Rat& w0);

struct IntertwineReport {
  // true: Rbar Delta = Delta' Rbar; the flipped orientation is the other one.
  bool delta_to_opposite = false;
  int generators_checked = 0;
};

IntertwineReport check_intertwining(const CartanData& data);

struct UnitarityResult {
  bool proportional = false;
  bool is_one = false;   // lambda(z) == 1
  ZPolyF lambda_num;     // lambda(z) = lambda_num/lambda_den
  ZPolyF lambda_den;
};

// Rbar(z) P Rbar(1/z) P = lambda(z) Id; returns lambda.
UnitarityResult unitarity_scalar(const CartanData& data);

// The invariant vector F in V (x) V: joint kernel of all classical raising
// and lowering coproduct actions inside the weight-zero subspace, normalized
// so the v_1 (x) v_{-1} component is 1. Keyed by J-index j for v_j (x) v_{-j}.
std::map<int, FieldElement> invariant_vector(const CartanData& data);

}  // namespace qaff
