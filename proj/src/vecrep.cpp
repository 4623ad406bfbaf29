#include "qaff/vecrep.hpp"

namespace qaff {

std::string GeneratorLabel::name() const {
  const char* k = kind == GenKind::e ? "e" : kind == GenKind::f ? "f" : kind == GenKind::t ? "t" : "t_inv";
  return std::string(k) + "_" + std::to_string(node);
}

std::vector<GeneratorLabel> all_generators(const CartanData& data) {
  std::vector<GeneratorLabel> gs;
  for (int i = 0; i <= data.n; ++i)
    for (GenKind k : {GenKind::e, GenKind::f, GenKind::t, GenKind::t_inv}) gs.push_back({k, i});
  return gs;
}

namespace {

// Diagonal matrix q^{sum of signed deltas}; spec_pairs lists (j, exponent).
MatF diag_q(const CartanData& d, const std::vector<std::pair<int, int>>& spec_pairs) {
  MatF m(d.N, d.N);
  for (int j : d.index_set) {
    int e = 0;
    for (auto [jj, s] : spec_pairs)
      if (j == jj) e += s;
    m.set(d.position(j), d.position(j), FieldElement::q_power(e));
  }
  return m;
}

MatF units(const CartanData& d, const std::vector<std::tuple<int, int, FieldElement>>& entries) {
  MatF m(d.N, d.N);
  for (const auto& [i, j, c] : entries) m.add_to(d.position(i), d.position(j), c);
  return m;
}

}  // namespace

MatF pi_classical(const CartanData& d, GenKind kind, int node) {
  const int n = d.n;
  if (node < 0 || node > n) fail(errc::index_out_of_range, "generator node");
  if (kind == GenKind::f) return pi_classical(d, GenKind::e, node).transposed();
  if (kind == GenKind::t_inv) {
    MatF t = pi_classical(d, GenKind::t, node);
    MatF m(d.N, d.N);
    for (int i = 0; i < d.N; ++i) m.set(i, i, FieldElement(1) / t.get(i, i));
    return m;
  }

  const FieldElement one(1);
  if (kind == GenKind::e) {
    if (node == 0) {
      FieldElement s(d.sign_s);
      return units(d, {{-1, 2, s}, {-2, 1, -s}});
    }
    if (node < n) return units(d, {{node, node + 1, one}, {-node - 1, -node, -one}});
    if (d.kind.series == Series::B) {
      FieldElement a = FieldElement::alpha();
      return units(d, {{n, 0, a}, {0, -n, -a}});
    }
    return units(d, {{n - 1, -n, one}, {n, -n + 1, -one}});
  }

  // t_node
  if (node == 0) return diag_q(d, {{1, -1}, {2, -1}, {-1, 1}, {-2, 1}});
  if (node < n) return diag_q(d, {{node, 1}, {node + 1, -1}, {-node - 1, 1}, {-node, -1}});
  if (d.kind.series == Series::B) return diag_q(d, {{n, 1}, {-n, -1}});
  return diag_q(d, {{n - 1, 1}, {n, 1}, {-n, -1}, {-n + 1, -1}});
}

MatZ generator_matrix(const CartanData& d, const GeneratorLabel& g, const SlotShift& slot) {
  MatF m = pi_classical(d, g.kind, g.node);
  ZPolyF factor(1);
  if (g.node == 0 && g.kind == GenKind::e)
    factor = ZPolyF::monomial(slot.scale, whole(slot.zpow));
  else if (g.node == 0 && g.kind == GenKind::f)
    factor = ZPolyF::monomial(FieldElement(1) / slot.scale, whole(-slot.zpow));
  return m.map([&](const FieldElement& c) { return factor.scaled(c); });
}

namespace {

MatZ matpow(const MatZ& m, int k) {
  MatZ acc = SparseMat<ZPolyF>::identity(m.rows(), ZPolyF(1));
  for (int i = 0; i < k; ++i) acc = acc * m;
  return acc;
}

struct GenSet {
  std::vector<MatZ> e, f, t, tinv;
};

GenSet build_genset(const CartanData& d, const GeneratorHook& hook) {
  GenSet gs;
  for (int i = 0; i <= d.n; ++i) {
    for (GenKind k : {GenKind::e, GenKind::f, GenKind::t, GenKind::t_inv}) {
      GeneratorLabel lbl{k, i};
      MatZ m = generator_matrix(d, lbl);
      if (hook) hook(lbl, m);
      switch (k) {
        case GenKind::e: gs.e.push_back(m); break;
        case GenKind::f: gs.f.push_back(m); break;
        case GenKind::t: gs.t.push_back(m); break;
        case GenKind::t_inv: gs.tinv.push_back(m); break;
      }
    }
  }
  return gs;
}

}  // namespace

ViolationReport verify_relations(const CartanData& d, const GeneratorHook& hook) {
  ViolationReport rep;
  GenSet gs = build_genset(d, hook);
  auto record = [&](const std::string& name, int i, int j, const MatZ& residual) {
    ++rep.relations_checked;
    if (!residual.is_zero()) rep.violations.push_back({name, i, j, residual});
  };

  const int n = d.n;
  for (int i = 0; i <= n; ++i) {
    record("t-tinv", i, i, gs.t[i] * gs.tinv[i] - SparseMat<ZPolyF>::identity(d.N, ZPolyF(1)));
    for (int j = i; j <= n; ++j) record("t-commute", i, j, gs.t[i] * gs.t[j] - gs.t[j] * gs.t[i]);
  }

  for (int i = 0; i <= n; ++i) {
    for (int j = 0; j <= n; ++j) {
      Rat aij2 = 2 * d.pairing(i, j);  // exponent of v for q^{(ai|aj)}
      aij2.canonicalize();
      int e2 = static_cast<int>(aij2.get_num().get_si());
      ZPolyF qe(FieldElement::v_power(e2));
      ZPolyF qeneg(FieldElement::v_power(-e2));
      record("t-e-conj", i, j, gs.t[i] * gs.e[j] * gs.tinv[i] - gs.e[j].scaled(qe));
      record("t-f-conj", i, j, gs.t[i] * gs.f[j] * gs.tinv[i] - gs.f[j].scaled(qeneg));
    }
  }

  // [e_i, f_j] = delta_ij (t_i - t_i^{-1})/(q_i - q_i^{-1})
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; j <= n; ++j) {
      MatZ lhs = gs.e[i] * gs.f[j] - gs.f[j] * gs.e[i];
      if (i == j) {
        int di = static_cast<int>(d.pairing(i, i).get_num().get_si());
        FieldElement denom = FieldElement::v_power(di) - FieldElement::v_power(-di);
        MatZ rhs = (gs.t[i] - gs.tinv[i]).map([&](const ZPolyF& p) {
          return p.map([&](const FieldElement& c) { return c / denom; });
        });
        lhs = lhs - rhs;
      }
      record("e-f-comm", i, j, lhs);
    }
  }

  // q-Serre. Divided powers are matrix powers over exact [k]_i!.
  for (int i = 0; i <= n; ++i) {
    int nii = static_cast<int>(d.pairing(i, i).get_num().get_si());
    for (int j = 0; j <= n; ++j) {
      if (i == j) continue;
      int b = 1 - d.cartan_integer(i, j);
      MatZ acc_e(d.N, d.N), acc_f(d.N, d.N);
      for (int k = 0; k <= b; ++k) {
        FieldElement coeff = FieldElement(1) / (quantum_factorial(k, nii) * quantum_factorial(b - k, nii));
        if (k % 2 == 1) coeff = -coeff;
        ZPolyF cz(coeff);
        acc_e = acc_e + (matpow(gs.e[i], k) * gs.e[j] * matpow(gs.e[i], b - k)).map([&](const ZPolyF& p) { return p * cz; });
        acc_f = acc_f + (matpow(gs.f[i], k) * gs.f[j] * matpow(gs.f[i], b - k)).map([&](const ZPolyF& p) { return p * cz; });
      }
      record("serre-e", i, j, acc_e);
      record("serre-f", i, j, acc_f);
    }
  }

  return rep;
}

MatZ coproduct_matrix(const CartanData& d, const GeneratorLabel& g, const SlotShift& s1,
                      const SlotShift& s2, bool opposite) {
  auto gm = [&](GenKind k, int node, const SlotShift& s) { return generator_matrix(d, {k, node}, s); };
  MatZ id = SparseMat<ZPolyF>::identity(d.N, ZPolyF(1));

  switch (g.kind) {
    case GenKind::t:
      return gm(GenKind::t, g.node, s1).kron(gm(GenKind::t, g.node, s2));
    case GenKind::t_inv:
      return gm(GenKind::t_inv, g.node, s1).kron(gm(GenKind::t_inv, g.node, s2));
    case GenKind::e:
      // Delta(e) = e (x) 1 + t (x) e;  Delta'(e) = e (x) t + 1 (x) e
      if (!opposite)
        return gm(GenKind::e, g.node, s1).kron(id) + gm(GenKind::t, g.node, s1).kron(gm(GenKind::e, g.node, s2));
      return gm(GenKind::e, g.node, s1).kron(gm(GenKind::t, g.node, s2)) + id.kron(gm(GenKind::e, g.node, s2));
    case GenKind::f:
      // Delta(f) = f (x) t^{-1} + 1 (x) f;  Delta'(f) = f (x) 1 + t^{-1} (x) f
      if (!opposite)
        return gm(GenKind::f, g.node, s1).kron(gm(GenKind::t_inv, g.node, s2)) + id.kron(gm(GenKind::f, g.node, s2));
      return gm(GenKind::f, g.node, s1).kron(id) + gm(GenKind::t_inv, g.node, s1).kron(gm(GenKind::f, g.node, s2));
  }
  fail(errc::internal_fault, "unreachable");
}

MatZ dual_matrix(const CartanData& d, const GeneratorLabel& g, DualSide side, const SlotShift& slot) {
  auto gm = [&](GenKind k, int node) { return generator_matrix(d, {k, node}, slot); };
  MatZ img;
  switch (g.kind) {
    case GenKind::t: img = gm(GenKind::t_inv, g.node); break;
    case GenKind::t_inv: img = gm(GenKind::t, g.node); break;
    case GenKind::e:
      // S(e) = -t^{-1} e, S^{-1}(e) = -e t^{-1}
      img = side == DualSide::left ? -(gm(GenKind::t_inv, g.node) * gm(GenKind::e, g.node))
                                   : -(gm(GenKind::e, g.node) * gm(GenKind::t_inv, g.node));
      break;
    case GenKind::f:
      // S(f) = -f t, S^{-1}(f) = -t f
      img = side == DualSide::left ? -(gm(GenKind::f, g.node) * gm(GenKind::t, g.node))
                                   : -(gm(GenKind::t, g.node) * gm(GenKind::f, g.node));
      break;
  }
  return img.transposed();
}

MatF duality_matrix(const CartanData& d, int sign) {
  MatF m(d.N, d.N);
  for (int j : d.index_set)
    m.set(d.position(-j), d.position(j), FieldElement::q_power(d.bar(sign > 0 ? j : -j)));
  return m;
}

bool duality_intertwines(const CartanData& d, const FieldElement& xi, int sign,
                         std::string* first_failure) {
  MatF c = duality_matrix(d, sign);
  MatZ cz = c.map([](const FieldElement& x) { return ZPolyF(x); });
  FieldElement shift = sign > 0 ? FieldElement(1) / xi : xi;
  DualSide side = sign > 0 ? DualSide::left : DualSide::right;
  for (const GeneratorLabel& g : all_generators(d)) {
    MatZ lhs = cz * generator_matrix(d, g, SlotShift{shift, 1});
    MatZ rhs = dual_matrix(d, g, side, SlotShift{FieldElement(1), 1}) * cz;
    if (!(lhs - rhs).is_zero()) {
      if (first_failure) *first_failure = g.name();
      return false;
    }
  }
  return true;
}

XiResult derive_xi(const CartanData& d) {
  // Solve C_+ pi_{z/xi}(e_0) = pi_z^{*S}(e_0) C_+ for xi: both sides are
  // z * (constant matrix), so xi is a ratio of matching entries.
  MatF c = duality_matrix(d, +1);
  MatF lhs = c * pi_classical(d, GenKind::e, 0);
  MatF t0inv = pi_classical(d, GenKind::t_inv, 0);
  MatF rhs = (-(t0inv * pi_classical(d, GenKind::e, 0))).transposed() * c;

  std::optional<FieldElement> candidate;
  lhs.for_each([&](int i, int j, const FieldElement& a) {
    if (candidate) return;
    FieldElement b = rhs.get(i, j);
    if (!b.is_zero()) candidate = a / b;
  });
  if (!candidate || candidate->is_zero()) fail(errc::no_solution, "no entry pair determines xi");

  // xi must be a monomial +-v^m.
  const VFrac& r = candidate->rat_part();
  if (candidate->has_alpha() || !r.den().is_one() || r.num().terms().size() != 1 ||
      abs(r.num().terms()[0].second) != 1)
    fail(errc::no_solution, "xi candidate is not a monomial: " + candidate->str());
  XiResult res;
  res.xi = *candidate;
  res.v_exponent = r.num().terms()[0].first;
  res.sign = r.num().terms()[0].second > 0 ? 1 : -1;

  for (int sign : {+1, -1}) {
    std::string failure;
    if (!duality_intertwines(d, res.xi, sign, &failure))
      fail(errc::no_solution, "xi candidate fails intertwining on " + failure);
    for (const GeneratorLabel& g : all_generators(d))
      res.checked.push_back((sign > 0 ? "C+:" : "C-:") + g.name());
  }
  return res;
}

}  // namespace qaff
