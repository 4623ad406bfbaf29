#pragma once

// Root and weight data for the affine series B_n^(1) and D_n^(1): simple
// roots in epsilon-coordinates, marks and comarks, the index set J with its
// linear order and bar map.

#include <string>
#include <vector>

#include "qaff/scalar.hpp"

namespace qaff {

enum class Series { B, D };

struct AlgebraKind {
  Series series = Series::B;
  int rank = 2;

  std::string name() const { return (series == Series::B ? "B" : "D") + std::to_string(rank); }
  bool operator==(const AlgebraKind&) const = default;
};

// A vector in h^* written as c_delta * delta + sum_k eps[k] * epsilon_{k+1},
// with (delta|epsilon_k) = (delta|delta) = 0.
struct RootVector {
  Rat delta = 0;
  std::vector<Rat> eps;
};

Rat root_pairing(const RootVector& a, const RootVector& b);

struct CartanData {
  AlgebraKind kind;
  int n = 0;                              // classical rank
  int N = 0;                              // |J|
  int sign_s = 1;                         // s = (-1)^n (B), (-1)^{n-1} (D)
  int dual_coxeter = 0;                   // h^vee
  std::vector<RootVector> simple_roots;   // alpha_0..alpha_n
  std::vector<int> marks;                 // a_i
  std::vector<Rat> comarks;               // a_i^vee (a_n^vee = a_n/2 for B)
  std::vector<RootVector> fundamental_weights_bar;  // bar Lambda_1..bar Lambda_n
  RootVector rho_bar;
  std::vector<int> index_set;             // J in prec-order
  std::vector<Rat> pairing_table;         // (alpha_i|alpha_j), row-major (n+1)^2

  Rat pairing(int i, int j) const;
  // <h_i, alpha_j> = 2 (alpha_i|alpha_j)/(alpha_i|alpha_i)
  int cartan_integer(int i, int j) const;

  bool in_J(int j) const;
  int position(int j) const;  // 0-based position in prec-order
  int bar(int j) const;
  bool precede(int i, int j) const;  // strict order

  // Weight of the basis vector v_j of the vector representation.
  RootVector weight_of(int j) const;
};

CartanData build_cartan(const AlgebraKind& kind);

// [m]_i in the normalization of the given node.
FieldElement quantum_integer(const CartanData& data, int m, int node);

}  // namespace qaff
