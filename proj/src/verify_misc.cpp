#include "dslab/suites.hpp"

namespace dslab {

namespace {

AlgebraPtr share(LieSA g) { return std::make_shared<const LieSA>(std::move(g)); }

std::string sdim_str(SDim d) { return "(" + std::to_string(d.even) + "|" + std::to_string(d.odd) + ")"; }

long super_dimension(SDim d) { return static_cast<long>(d.even) - static_cast<long>(d.odd); }

void absorb(Report& into, const Report& from, const std::string& prefix = "") {
  for (auto c : from.checks) {
    c.name = prefix + c.name;
    into.checks.push_back(std::move(c));
  }
  for (const auto& [n, d] : from.dims) into.dims.emplace_back(prefix + n, d);
}

// character of gl(1|1)_0 with E11 -> l1, E22 -> l2
Rep weight_character(AlgebraPtr g, const SubalgebraAlgebra& g0, const std::vector<Scalar>& lambda) {
  std::vector<Scalar> v;
  for (std::size_t a = 0; a < g0.algebra.dim(); ++a) {
    Matrix x = g->realization()->element(g0.embedding.row(a));
    Scalar s = 0;
    for (std::size_t i = 0; i < lambda.size(); ++i) s += lambda[i] * x(i, i);
    v.push_back(s);
  }
  return character_rep(share(g0.algebra), v, "λ");
}

// sdim, Π and dual compatibility of DS on one module
void ds_compat(Report& rep, const Rep& v, const OddElem& u, const std::string& name) {
  SDim d = ds(v, u).cohomology.sdim();
  rep.add("sdim " + name + "_u = sdim " + name, super_dimension(d) == super_dimension(v.space.sdim()),
          sdim_str(d) + " vs " + sdim_str(v.space.sdim()));
  SDim p = ds(parity_shift_rep(v), u).cohomology.sdim();
  rep.add("(Π" + name + ")_u = Π(" + name + "_u)", p == SDim{d.odd, d.even}, sdim_str(p));
  SDim s = ds(dual_rep(v), u).cohomology.sdim();
  rep.add("(" + name + "*)_u ≅ (" + name + "_u)*", s == d, sdim_str(s));
}

}  // namespace

Report verify_gl11_catalog(const std::string& module, long n, const std::vector<Scalar>& lambda) {
  auto g = share(make_gl(1, 1));
  OddElem u = make_odd(g, g->element("E"));
  Report rep;
  Rep m;
  SDim want{};
  if (module == "ber") {
    m = berezinian_rep(g, n);
    want = {1, 0};
    rep.id = "gl11 Ber^" + std::to_string(n);
  } else if (module == "pi-ber") {
    m = parity_shift_rep(berezinian_rep(g, n));
    want = {0, 1};
    rep.id = "gl11 ΠBer^" + std::to_string(n);
  } else if (module == "kac-ber") {
    auto g0 = degree_zero(g);
    m = tensor_rep(kac_induce(g, trivial_rep(share(g0.algebra)), KacDirection::Thin).rep, berezinian_rep(g, n));
    want = {1, 1};
    rep.id = "gl11 K(0)⊗Ber^" + std::to_string(n);
  } else if (module == "typical") {
    if (lambda.size() != 2) throw Error(ErrorKind::InvalidParams, "typical weight needs two entries");
    auto g0 = degree_zero(g);
    m = kac_induce(g, weight_character(g, g0, lambda), KacDirection::Thin).rep;
    rep.id = "gl11 L(" + to_string(lambda[0]) + "," + to_string(lambda[1]) + ")";
    // I acts by l1 + l2; typical iff that is nonzero, and then K(λ) is simple
    Matrix I = m.act(g->element("I"));
    Scalar z = lambda[0] + lambda[1];
    rep.add("typical", sgn(z) != 0 && I == z * Matrix::identity(m.dim()), to_string(z));
  } else {
    throw Error(ErrorKind::InvalidParams, "unknown gl(1|1) catalog module " + module);
  }
  SDim got = ds(m, u).cohomology.sdim();
  rep.dim("M", m.space.sdim());
  rep.dim("DS_E M", got);
  rep.add("DS_E M = " + sdim_str(want), got == want, sdim_str(got));
  return rep;
}

Report verify_dualpair(std::size_t r) {
  LieSA k = make_gl(r, 0);
  InvariantAlgebra inv = invariant_exterior(k);
  Report rep;
  rep.id = "dualpair gl(" + std::to_string(r) + ")";
  rep.add("dim = 2^r", inv.dim() == (std::size_t{1} << r), std::to_string(inv.dim()));
  std::vector<long> want{1};
  for (std::size_t i = 1; i <= r; ++i) {
    std::vector<long> next(want.size() + 2 * i - 1, 0);
    for (std::size_t a = 0; a < want.size(); ++a) {
      next[a] += want[a];
      next[a + 2 * i - 1] += want[a];
    }
    want = std::move(next);
  }
  std::string seen;
  for (long c : inv.poincare) seen += std::to_string(c) + " ";
  rep.add("Poincaré polynomial ∏(1+t^{2i-1})", inv.poincare == want, seen);
  absorb(rep, duality_pairing_check(k));
  return rep;
}

Report verify_split(int example) {
  auto gl1 = make_gl(1, 0);
  Report rep;
  rep.id = "split " + std::to_string(example);
  SplitTilde t;
  SDim want;
  if (example == 1) {
    auto g = share(make_split(gl1, {Matrix{{1}}}));
    Rep V{g, SuperSpace({"e1", "e2"}, {0, 1}), {Matrix{{1, 0}, {0, 0}}, Matrix{{0, 1}, {0, 0}}}};
    SplitCertificate cert{V, Subspace::span(4, {Vector{1, 0, 0, 1}, Vector{0, 0, 1, 0}})};
    t = split_tilde(g, make_odd(g, g->basis_vector(1)), &cert);
    want = {0, 0};
  } else if (example == 2) {
    auto g = share(make_split(gl1, {Matrix{{0}}}));
    t = split_tilde(g, make_odd(g, g->basis_vector(1)));
    want = {1, 1};
  } else if (example == 3) {
    auto gl2 = make_gl(2, 0);
    auto g = share(make_split(gl2, gl2.realization()->basis));
    t = split_tilde(g, make_odd(g, g->basis_vector(4)));
    want = {2, 0};
  } else {
    throw Error(ErrorKind::InvalidParams, "split examples are 1, 2, 3");
  }
  absorb(rep, t.report);
  rep.dim("tilde", t.tilde->sdim());
  rep.add("tilde sdim = " + sdim_str(want), t.tilde->sdim() == want, sdim_str(t.tilde->sdim()));
  return rep;
}

Report verify_spherical(std::size_t n, const std::vector<long>& lambda) {
  auto g = share(make_gl(n, 0));
  Rep L = gl_simple(g, lambda);
  Report rep;
  std::string lam;
  for (long l : lambda) lam += (lam.empty() ? "" : ",") + std::to_string(l);
  rep.id = "spherical gl(" + std::to_string(n) + ") L(" + lam + ")";
  rep.dim("L", L.space.sdim());

  bool even_steps = true;
  for (std::size_t i = 0; i + 1 < lambda.size(); ++i) even_steps = even_steps && (lambda[i] - lambda[i + 1]) % 2 == 0;
  std::size_t so = invariants(L, matrix_subalgebra(g, make_so(n))).dim();
  rep.dim("L^so", SDim{so, 0});
  rep.add("dim L^so <= 1", so <= 1, std::to_string(so));
  rep.add("L^so ≠ 0 iff differences even", (so == 1) == even_steps);
  if (n == 2) {
    std::size_t sp = invariants(L, matrix_subalgebra(g, make_sp(2))).dim();
    rep.dim("L^sp", SDim{sp, 0});
    rep.add("dim L^sp <= 1", sp <= 1, std::to_string(sp));
    rep.add("L^sp ≠ 0 iff l1 = l2", (sp == 1) == (lambda[0] == lambda[1]));
  }
  return rep;
}

Report verify_tensor_pair(const Rep& v, const Rep& w, const OddElem& u) {
  Report rep = tensor_iso_check(v, w, u);
  rep.id = "tensor";
  ds_compat(rep, v, u, "V");
  ds_compat(rep, w, u, "W");
  return rep;
}

Report verify_les(const Rep& v, const Subspace& sub, const OddElem& u) {
  Report rep = les_check(v, sub, u);
  rep.id = "les";
  return rep;
}

}  // namespace dslab
