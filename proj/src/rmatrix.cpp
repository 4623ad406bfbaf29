#include "qaff/rmatrix.hpp"

#include <sstream>

namespace qaff {

namespace {

ZPolyF one_minus(const FieldElement& c) {  // 1 - c z
  return ZPolyF(1) - ZPolyF::monomial(c, whole(1));
}

FieldElement qp(int k) { return FieldElement::q_power(k); }

}  // namespace

RMatrix build_rbar(const CartanData& d, std::optional<FieldElement> xi_override) {
  FieldElement xi = xi_override ? *xi_override : derive_xi(d).xi;
  const int N = d.N;

  RMatrix r{d, xi, MatZ(N * N, N * N), one_minus(qp(2)) * one_minus(xi)};
  ZPolyF denom = r.denom;

  const ZPolyF zpoly = ZPolyF::z(1);
  const ZPolyF one(1);
  const FieldElement q = qp(1), q2 = qp(2);

  for (int i : d.index_set) {
    for (int j : d.index_set) {
      if (i == j && i != 0) r.numer.add_to(r.pair_index(i, i), r.pair_index(i, i), denom);
      if (i != j && i != -j) {
        // q(1-z)/(1-q^2 z) on E_ii (x) E_jj
        r.numer.add_to(r.pair_index(i, j), r.pair_index(i, j),
                       (one - zpoly).scaled(q) * one_minus(xi));
        // (1-q^2)/(1-q^2 z) * {1 or z} on E_ij (x) E_ji
        ZPolyF c = one_minus(xi).scaled(FieldElement(1) - q2);
        if (d.precede(j, i)) c = c * zpoly;  // the (i succ j) sum carries z
        r.numer.add_to(r.pair_index(i, j), r.pair_index(j, i), c);
      }
      // a_ij(z) on E_ij (x) E_{-i,-j}: row (i,-i), column (j,-j)
      ZPolyF a;
      if (i == j) {
        a = (ZPolyF(q2) - ZPolyF::monomial(xi, whole(1))) * (one - zpoly);
        if (i == 0) a = a + (ZPolyF(q) + zpoly).scaled(FieldElement(1) - q) * one_minus(xi);
      } else {
        FieldElement qbar = qp(d.bar(j) - d.bar(i));
        if (d.precede(i, j)) {
          ZPolyF core = (zpoly - one).scaled(qbar);
          if (i == -j) core = core + one_minus(xi);
          a = core.scaled(FieldElement(1) - q2);
        } else {
          ZPolyF core = (zpoly - one).scaled(qbar * xi);
          if (i == -j) core = core + one_minus(xi);
          a = (core * zpoly).scaled(FieldElement(1) - q2);
        }
      }
      if (!a.is_zero()) r.numer.add_to(r.pair_index(i, -i), r.pair_index(j, -j), a);
    }
  }
  return r;
}

namespace {

Rat eval_zpoly(const ZPolyF& p, const Rat& v0, const Rat& z0) {
  Rat acc = 0;
  for (const auto& [e2, c] : p.terms()) {
    if (e2 % 2 != 0) fail(errc::internal_fault, "half-integer exponent in matrix entry");
    int e = e2 / 2;
    Rat zp = 1;
    Rat base = e >= 0 ? z0 : Rat(z0.get_den(), z0.get_num());
    for (int k = 0; k < std::abs(e); ++k) zp *= base;
    acc += c.specialize(v0) * zp;
  }
  acc.canonicalize();
  return acc;
}

// Embed an N^2 x N^2 two-slot matrix into slots (s1, s2) of V^{(x)3}.
template <class S>
SparseMat<S> embed3(const SparseMat<S>& m, int N, int s1, int s2) {
  SparseMat<S> out(N * N * N, N * N * N);
  int spare = 3 - s1 - s2;  // slots are 0,1,2
  auto compose = [&](int a, int b, int c) {
    int idx[3];
    idx[s1] = a;
    idx[s2] = b;
    idx[spare] = c;
    return (idx[0] * N + idx[1]) * N + idx[2];
  };
  m.for_each([&](int row, int col, const S& v) {
    int ra = row / N, rb = row % N, ca = col / N, cb = col % N;
    for (int c = 0; c < N; ++c) out.set(compose(ra, rb, c), compose(ca, cb, c), v);
  });
  return out;
}

}  // namespace

SparseMat<Rat> rbar_sampled(const RMatrix& r, const Rat& v0, const Rat& z0) {
  Rat den = eval_zpoly(r.denom, v0, z0);
  if (den == 0) fail(errc::sample_hits_pole, "denominator vanishes at z sample");
  SparseMat<Rat> m(r.numer.rows(), r.numer.cols());
  r.numer.for_each([&](int i, int j, const ZPolyF& p) {
    Rat val = eval_zpoly(p, v0, z0) / den;
    val.canonicalize();
    if (val != 0) m.set(i, j, val);
  });
  return m;
}

YbeReport check_ybe_sampled(const CartanData& d, const Rat& v0, const Rat& z0, const Rat& w0,
                            const FieldElement* mutate_scale) {
  RMatrix r = build_rbar(d);
  if (mutate_scale) {
    // scale one block-3 entry; the fault-injection tests use this
    int row = r.pair_index(1, 2), col = r.pair_index(2, 1);
    r.numer.set(row, col, r.numer.get(row, col).scaled(*mutate_scale));
  }
  Rat zw = z0 / w0;
  zw.canonicalize();
  const int N = d.N;
  SparseMat<Rat> r12 = embed3(rbar_sampled(r, v0, zw), N, 0, 1);
  SparseMat<Rat> r13 = embed3(rbar_sampled(r, v0, z0), N, 0, 2);
  SparseMat<Rat> r23 = embed3(rbar_sampled(r, v0, w0), N, 1, 2);

  SparseMat<Rat> res = r12 * r13 * r23 - r23 * r13 * r12;

  YbeReport rep;
  rep.pattern = "R12(z/w) R13(z) R23(w)";
  rep.zero = res.is_zero();
  rep.nonzero_entries = res.nnz();
  if (!rep.zero) {
    std::ostringstream os;
    res.for_each([&](int i, int j, const Rat& v) {
      if (os.tellp() == 0) os << "(" << i << "," << j << ") = " << v.get_str();
    });
    rep.worst_entry = os.str();
  }
  return rep;
}

YbeReport check_ybe_exact(const CartanData& d, const Rat& w0) {
  RMatrix r = build_rbar(d);
  const int N = d.N;
  FieldElement w0f = FieldElement::of_rational(w0);
  FieldElement w0inv = FieldElement(1) / w0f;

  // Numerator matrices; the shared scalar denominator cancels between sides.
  MatZ n_zw = r.numer.map([&](const ZPolyF& p) { return p.substituted(w0inv, 1); });
  const MatZ& n_z = r.numer;
  MatZ n_w = r.numer.map([&](const ZPolyF& p) {
    FieldElement acc;
    for (const auto& [e2, c] : p.terms()) acc += c * w0f.pow(e2 / 2);
    return ZPolyF(acc);
  });

  MatZ r12 = embed3(n_zw, N, 0, 1);
  MatZ r13 = embed3(n_z, N, 0, 2);
  MatZ r23 = embed3(n_w, N, 1, 2);
  MatZ res = r12 * r13 * r23 - r23 * r13 * r12;

  YbeReport rep;
  rep.pattern = "R12(z/w0) R13(z) R23(w0), exact in z";
  rep.zero = res.is_zero();
  rep.nonzero_entries = res.nnz();
  return rep;
}

IntertwineReport check_intertwining(const CartanData& d) {
  RMatrix r = build_rbar(d);
  SlotShift s1{FieldElement(1), 1}, s2{FieldElement(1), 0};  // z1 = z, z2 = 1

  bool ok_direct = true, ok_flipped = true;
  int checked = 0;
  for (const GeneratorLabel& g : all_generators(d)) {
    MatZ cop = coproduct_matrix(d, g, s1, s2, false);
    MatZ cop_op = coproduct_matrix(d, g, s1, s2, true);
    if (!(r.numer * cop - cop_op * r.numer).is_zero()) ok_direct = false;
    if (!(r.numer * cop_op - cop * r.numer).is_zero()) ok_flipped = false;
    ++checked;
    if (!ok_direct && !ok_flipped) break;
  }
  if (ok_direct == ok_flipped)
    fail(errc::neither_orientation,
         ok_direct ? "both orientations hold" : "neither orientation holds");
  return {ok_direct, checked};
}

UnitarityResult unitarity_scalar(const CartanData& d) {
  RMatrix r = build_rbar(d);
  const int N2 = d.N * d.N;
  MatZ flip = flip_matrix(d.N, ZPolyF(1));
  MatZ n_inv = r.numer.map([](const ZPolyF& p) { return p.inverted_var(); });
  MatZ prod = r.numer * flip * n_inv * flip;

  UnitarityResult res;
  ZPolyF mu = prod.get(0, 0);
  res.proportional = true;
  for (int i = 0; i < N2 && res.proportional; ++i) {
    for (const auto& [j, p] : prod.row(i))
      if (i != j && !p.is_zero()) res.proportional = false;
    if (!(prod.get(i, i) == mu)) res.proportional = false;
  }
  if (!res.proportional) fail(errc::not_proportional, "Rbar(z) P Rbar(1/z) P is not scalar");
  res.lambda_num = mu;
  res.lambda_den = r.denom * r.denom.inverted_var();
  res.is_one = (res.lambda_num == res.lambda_den);
  return res;
}

std::map<int, FieldElement> invariant_vector(const CartanData& d) {
  // Weight-zero candidates are spanned by v_j (x) v_{-j}; the classical
  // subalgebra (i != 0) acts without spectral factors.
  const int N = d.N;
  std::vector<int> cols(d.index_set);
  SlotShift s0{FieldElement(1), 0};

  std::vector<MatF> actions;
  for (int i = 1; i <= d.n; ++i) {
    for (GenKind k : {GenKind::e, GenKind::f}) {
      MatZ cop = coproduct_matrix(d, {k, i}, s0, s0, false);
      actions.push_back(cop.map([](const ZPolyF& p) { return p.coeff(0); }));
    }
  }

  int m = static_cast<int>(cols.size());
  SparseMat<FieldElement> sys(static_cast<int>(actions.size()) * N * N, m);
  for (int a = 0; a < static_cast<int>(actions.size()); ++a) {
    for (int c = 0; c < m; ++c) {
      int j = cols[c];
      int col = d.position(j) * N + d.position(-j);
      for (int rr = 0; rr < N * N; ++rr) {
        FieldElement val = actions[a].get(rr, col);
        if (!val.is_zero()) sys.add_to(a * N * N + rr, c, val);
      }
    }
  }

  auto basis = nullspace(sys);
  if (basis.size() != 1)
    fail(errc::dimension_mismatch,
         "invariant subspace has dimension " + std::to_string(basis.size()));

  // Weight zero already forces torus-fixedness; assert it on one node.
  {
    MatZ copt = coproduct_matrix(d, {GenKind::t, 1}, s0, s0, false);
    MatF t1 = copt.map([](const ZPolyF& p) { return p.coeff(0); });
    for (int c = 0; c < m; ++c) {
      int j = cols[c];
      int col = d.position(j) * N + d.position(-j);
      if (!(t1.get(col, col) == FieldElement(1)))
        fail(errc::internal_fault, "weight-zero candidate not torus-fixed");
    }
  }

  FieldElement norm = basis[0][0];  // coefficient of v_1 (x) v_{-1} (j=1 is first)
  if (norm.is_zero()) fail(errc::internal_fault, "invariant vector has zero reference component");
  std::map<int, FieldElement> out;
  for (int c = 0; c < m; ++c) {
    FieldElement v = basis[0][c] / norm;
    if (!v.is_zero()) out[cols[c]] = v;
  }
  return out;
}

}  // namespace qaff
