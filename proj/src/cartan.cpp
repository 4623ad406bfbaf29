#include "qaff/cartan.hpp"

#include <algorithm>

namespace qaff {

Rat root_pairing(const RootVector& a, const RootVector& b) {
  // delta is isotropic and orthogonal to the epsilon span
  Rat acc = 0;
  size_t m = std::min(a.eps.size(), b.eps.size());
  for (size_t k = 0; k < m; ++k) acc += a.eps[k] * b.eps[k];
  acc.canonicalize();
  return acc;
}

Rat CartanData::pairing(int i, int j) const {
  if (i < 0 || i > n || j < 0 || j > n) fail(errc::index_out_of_range, "node index");
  return pairing_table[i * (n + 1) + j];
}

int CartanData::cartan_integer(int i, int j) const {
  Rat c = 2 * pairing(i, j) / pairing(i, i);
  c.canonicalize();
  if (c.get_den() != 1) fail(errc::internal_fault, "non-integral Cartan integer");
  return static_cast<int>(c.get_num().get_si());
}

bool CartanData::in_J(int j) const {
  if (j == 0) return kind.series == Series::B;
  return j >= -n && j <= n;
}

int CartanData::position(int j) const {
  if (!in_J(j)) fail(errc::index_out_of_range, "not a J-index");
  if (j > 0) return j - 1;
  if (j == 0) return n;
  return N + j;
}

int CartanData::bar(int j) const {
  if (!in_J(j)) fail(errc::index_out_of_range, "not a J-index");
  if (j > 0) return j;
  if (j == 0) return n;
  return j + N;
}

bool CartanData::precede(int i, int j) const { return position(i) < position(j); }

RootVector CartanData::weight_of(int j) const {
  if (!in_J(j)) fail(errc::index_out_of_range, "not a J-index");
  RootVector w;
  w.eps.assign(n, 0);
  if (j > 0) w.eps[j - 1] = 1;
  else if (j < 0) w.eps[-j - 1] = -1;
  return w;
}

CartanData build_cartan(const AlgebraKind& kind) {
  const int n = kind.rank;
  if (kind.series == Series::B && n < 2) fail(errc::rank_out_of_range, "B needs n >= 2");
  if (kind.series == Series::D && n < 3) fail(errc::rank_out_of_range, "D needs n >= 3");

  CartanData d;
  d.kind = kind;
  d.n = n;
  d.N = kind.series == Series::B ? 2 * n + 1 : 2 * n;
  d.sign_s = ((kind.series == Series::B ? n : n - 1) % 2 == 0) ? 1 : -1;
  d.dual_coxeter = kind.series == Series::B ? 2 * n - 1 : 2 * n - 2;

  auto eps_vec = [n](int k) {  // epsilon_k, 1-based
    RootVector r;
    r.eps.assign(n, 0);
    r.eps[k - 1] = 1;
    return r;
  };

  // Classical simple roots.
  d.simple_roots.assign(n + 1, RootVector{});
  for (int i = 1; i <= n - 1; ++i) {
    RootVector r = eps_vec(i);
    r.eps[i] = -1;
    d.simple_roots[i] = r;
  }
  if (kind.series == Series::B) {
    d.simple_roots[n] = eps_vec(n);
  } else {
    RootVector r = eps_vec(n - 1);
    r.eps[n - 1] = 1;
    d.simple_roots[n] = r;
  }

  // alpha_0 = delta - theta, theta = eps_1 + eps_2 for both series.
  {
    RootVector a0;
    a0.delta = 1;
    a0.eps.assign(n, 0);
    a0.eps[0] = -1;
    a0.eps[1] = -1;
    d.simple_roots[0] = a0;
  }

  // Marks: B: (1,1,2,...,2), D: (1,1,2,...,2,1,1). Validated below via
  // delta = sum a_i alpha_i projecting to zero in epsilon-coordinates.
  d.marks.assign(n + 1, 2);
  d.marks[0] = d.marks[1] = 1;
  if (kind.series == Series::D) d.marks[n - 1] = d.marks[n] = 1;
  d.comarks.assign(n + 1, 0);
  for (int i = 0; i <= n; ++i) d.comarks[i] = d.marks[i];
  if (kind.series == Series::B) d.comarks[n] = make_rat(d.marks[n], 2);

  {
    RootVector acc;
    acc.eps.assign(n, 0);
    for (int i = 0; i <= n; ++i)
      for (int k = 0; k < n; ++k) acc.eps[k] += d.marks[i] * d.simple_roots[i].eps[k];
    for (int k = 0; k < n; ++k)
      if (acc.eps[k] != 0) fail(errc::internal_fault, "marks: delta does not project to zero");
    Rat hv = 0;
    for (int i = 0; i <= n; ++i) hv += d.comarks[i];
    if (hv != d.dual_coxeter) fail(errc::internal_fault, "comarks do not sum to dual Coxeter number");
  }

  d.pairing_table.assign((n + 1) * (n + 1), 0);
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j)
      d.pairing_table[i * (n + 1) + j] = root_pairing(d.simple_roots[i], d.simple_roots[j]);
  if (d.pairing(0, 0) != 2) fail(errc::internal_fault, "(theta|theta) != 2");

  d.fundamental_weights_bar.assign(n, RootVector{});
  for (int i = 1; i <= n; ++i) {
    RootVector w;
    w.eps.assign(n, 0);
    bool spin_minus = kind.series == Series::D && i == n - 1;
    bool spin_plus = i == n;
    if (spin_minus || spin_plus) {
      for (int k = 0; k < n; ++k) w.eps[k] = make_rat(1, 2);
      if (spin_minus) w.eps[n - 1] = make_rat(-1, 2);
    } else {
      for (int k = 0; k < i; ++k) w.eps[k] = 1;
    }
    d.fundamental_weights_bar[i - 1] = w;
  }

  d.rho_bar.eps.assign(n, 0);
  for (int k = 0; k < n; ++k) {
    int two_rho = kind.series == Series::B ? 2 * (n - k) - 1 : 2 * (n - 1 - k);
    d.rho_bar.eps[k] = make_rat(two_rho, 2);
  }

  for (int j = 1; j <= n; ++j) d.index_set.push_back(j);
  if (kind.series == Series::B) d.index_set.push_back(0);
  for (int j = -n; j <= -1; ++j) d.index_set.push_back(j);

  return d;
}

FieldElement quantum_integer(const CartanData& data, int m, int node) {
  Rat nii = data.pairing(node, node);
  if (nii.get_den() != 1) fail(errc::internal_fault, "non-integral (alpha_i|alpha_i)");
  return quantum_integer(m, static_cast<int>(nii.get_num().get_si()));
}

}  // namespace qaff
