#include "qaff/json_io.hpp"

namespace qaff {

Json to_json(const VPoly& p) {
  Json out = Json::array();
  for (const auto& [e, c] : p.terms()) out.push_back({c.get_str(), e});
  return out;
}

Json to_json(const VFrac& f) { return Json{{"num", to_json(f.num())}, {"den", to_json(f.den())}}; }

Json to_json(const FieldElement& x) {
  return Json{{"num", to_json(x.rat_part().num())},
              {"den", to_json(x.rat_part().den())},
              {"alpha_num", to_json(x.alpha_part().num())},
              {"alpha_den", to_json(x.alpha_part().den())}};
}

Json to_json(const ZPolyF& p) {
  Json out = Json::array();
  for (const auto& [e2, c] : p.terms()) out.push_back({{"exp2", e2}, {"coeff", to_json(c)}});
  return out;
}

Json to_json(const MatZ& m) {
  Json entries = Json::array();
  m.for_each([&](int i, int j, const ZPolyF& p) {
    entries.push_back({{"row", i}, {"col", j}, {"entry", to_json(p)}});
  });
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

namespace {
Json to_json(const RootVector& r) {
  Json eps = Json::array();
  for (const Rat& c : r.eps) eps.push_back(c.get_str());
  return Json{{"delta", r.delta.get_str()}, {"eps", eps}};
}
}  // namespace

Json to_json(const CartanData& d) {
  Json roots = Json::array();
  for (const auto& r : d.simple_roots) roots.push_back(to_json(r));
  Json weights = Json::array();
  for (const auto& w : d.fundamental_weights_bar) weights.push_back(to_json(w));
  Json comarks = Json::array();
  for (const Rat& c : d.comarks) comarks.push_back(c.get_str());
  return Json{{"kind", d.kind.name()},
              {"rank", d.n},
              {"N", d.N},
              {"s", d.sign_s},
              {"dual_coxeter", d.dual_coxeter},
              {"marks", d.marks},
              {"comarks", comarks},
              {"simple_roots", roots},
              {"fundamental_weights_bar", weights},
              {"rho_bar", to_json(d.rho_bar)},
              {"index_set", d.index_set}};
}

Json to_json(const Violation& v) {
  return Json{{"relation", v.relation}, {"i", v.i}, {"j", v.j}, {"residual", to_json(v.residual)}};
}

Json to_json(const ViolationReport& r) {
  Json vs = Json::array();
  for (const auto& v : r.violations) vs.push_back(to_json(v));
  return Json{{"relations_checked", r.relations_checked}, {"violations", vs}, {"ok", r.ok()}};
}

Json to_json(const RMatrix& r) {
  Json entries = Json::array();
  const int N = r.data.N;
  auto jindex = [&](int pos) {
    for (int j : r.data.index_set)
      if (r.data.position(j) == pos) return j;
    fail(errc::internal_fault, "bad position");
  };
  r.numer.for_each([&](int row, int col, const ZPolyF& p) {
    entries.push_back({{"row", {jindex(row / N), jindex(row % N)}},
                       {"col", {jindex(col / N), jindex(col % N)}},
                       {"num", to_json(p)},
                       {"den", to_json(r.denom)}});
  });
  return Json{{"kind", r.data.kind.name()}, {"xi", to_json(r.xi)}, {"entries", entries}};
}

Json to_json(const YbeReport& r) {
  return Json{{"pattern", r.pattern},
              {"zero", r.zero},
              {"nonzero_entries", r.nonzero_entries},
              {"worst_entry", r.worst_entry}};
}

Json to_json(const FormalSeries& s) {
  Json coeffs = Json::array();
  for (const auto& [e2, c] : s.coeffs().terms())
    coeffs.push_back({{"exp2", e2}, {"coeff", to_json(c)}});
  return Json{{"direction", s.dir() == Direction::asc ? "asc" : "desc"},
              {"window2", {s.lo2(), s.hi2()}},
              {"coeffs", coeffs}};
}

Json to_json(const DoubleSwapReport& r) {
  return Json{{"zero", r.zero},
              {"lambda_is_one", r.lambda_is_one},
              {"asc_product_is_one", r.asc_product_is_one},
              {"desc_product_is_one", r.desc_product_is_one},
              {"matrix_residual_entries", r.matrix_residual_entries},
              {"detail", r.detail}};
}

VPoly vpoly_from_json(const Json& j) {
  VPoly p;
  for (const auto& t : j) p = p + VPoly::monomial(Int(t[0].get<std::string>()), t[1].get<int>());
  return p;
}

FieldElement field_from_json(const Json& j) {
  return FieldElement(VFrac(vpoly_from_json(j["num"]), vpoly_from_json(j["den"])),
                      VFrac(vpoly_from_json(j["alpha_num"]), vpoly_from_json(j["alpha_den"])));
}

std::string convention_ledger_text() {
  // Every operationally pinned convention, one per line. Changing any of
  // these invalidates caches and regression baselines.
  return "pochhammer:(a;p)=prod_{k>=0}(1-a p^k)\n"
         "xi:intertwiner-solve;C+~S-dual;C-~S^{-1}-dual\n"
         "ybe:R12(z/w) R13(z) R23(w)\n"
         "intertwine:Rbar.Delta=Delta'.Rbar\n"
         "rho:z-prefactor;mixed-assembly-desc;keep<=z^1\n"
         "clifford:F(z)Psi(z2)Psi(z1)=G(z)Rbar(z)P Psi(z1)Psi(z2)+delta;slot1=first-written\n"
         "delta-shift:(z1/z2)^{1/2}-prefactor-on-half-lattice\n"
         "vacuum:positive-modes-annihilate;zero-modes-late-half-annihilate\n"
         "level:k=1;Dq^{2k}=q^2\n";
}

std::uint64_t convention_ledger_hash() { return fnv1a64(convention_ledger_text()); }

}  // namespace qaff
