#include <bit>

#include "dslab/symmetry.hpp"

namespace dslab {

namespace {

std::vector<std::size_t> members(unsigned m) {
  std::vector<std::size_t> t;
  for (std::size_t i = 0; m >> i; ++i)
    if (m >> i & 1) t.push_back(i);
  return t;
}

// ∧V on n generators in exterior_monomials order.
struct Exterior {
  std::size_t n;
  std::vector<unsigned> masks;
  std::vector<std::size_t> pos;

  explicit Exterior(std::size_t gens) : n(gens), masks(exterior_monomials(gens)), pos(std::size_t(1) << gens) {
    for (std::size_t i = 0; i < masks.size(); ++i) pos[masks[i]] = i;
  }
  std::size_t size() const { return masks.size(); }

  // Extension of A ∈ End(V) as a derivation.
  Matrix derivation(const Matrix& A) const {
    Matrix D(size(), size());
    for (std::size_t c = 0; c < size(); ++c) {
      auto s = members(masks[c]);
      for (std::size_t q = 0; q < s.size(); ++q)
        for (std::size_t t = 0; t < n; ++t) {
          const Scalar& a = A(t, s[q]);
          if (sgn(a) == 0) continue;
          auto repl = s;
          repl[q] = t;
          auto [sign, mask] = wedge_sort(repl);
          if (sign != 0) D(pos[mask], c) += sign * a;
        }
    }
    return D;
  }

  Vector wedge(std::span<const Scalar> a, std::span<const Scalar> b) const {
    Vector out(size(), Scalar(0));
    for (std::size_t i = 0; i < size(); ++i) {
      if (sgn(a[i]) == 0) continue;
      for (std::size_t j = 0; j < size(); ++j) {
        if (sgn(b[j]) == 0 || (masks[i] & masks[j])) continue;
        // sign of moving each generator of the right factor past the larger ones on the left
        int swaps = 0;
        for (auto t : members(masks[j])) swaps += std::popcount(masks[i] >> t);
        Scalar v = a[i] * b[j];
        if (swaps % 2) v = -v;
        out[pos[masks[i] | masks[j]]] += v;
      }
    }
    return out;
  }
};

std::vector<Vector> rows(const Subspace& s) {
  std::vector<Vector> out;
  for (std::size_t i = 0; i < s.dim(); ++i) out.push_back(s.vector(i));
  return out;
}

// Joint kernel of derivations, computed degree by degree.
Subspace invariant_subspace(const Exterior& E, const std::vector<Matrix>& ders) {
  std::vector<Vector> out;
  std::size_t lo = 0;
  while (lo < E.size()) {
    const int deg = std::popcount(E.masks[lo]);
    std::size_t hi = lo;
    while (hi < E.size() && std::popcount(E.masks[hi]) == deg) ++hi;
    const std::size_t b = hi - lo;
    Matrix stacked(ders.size() * b, b);
    for (std::size_t d = 0; d < ders.size(); ++d)
      for (std::size_t r = 0; r < b; ++r)
        for (std::size_t c = 0; c < b; ++c) stacked(d * b + r, c) = ders[d](lo + r, lo + c);
    Subspace ker = ders.empty() ? Subspace::whole(b) : kernel(stacked);
    for (const auto& v : rows(ker)) {
      Vector full(E.size(), Scalar(0));
      std::copy(v.begin(), v.end(), full.begin() + static_cast<long>(lo));
      out.push_back(std::move(full));
    }
    lo = hi;
  }
  return Subspace::span(E.size(), out);
}

void require_even(const LieSA& k) {
  if (!k.space().indices_of_parity(1).empty()) throw Error(ErrorKind::InvalidParams, "algebra must be purely even");
}

std::vector<Matrix> adjoint_generators(const LieSA& k, bool dualize) {
  std::vector<Matrix> out;
  for (std::size_t i = 0; i < k.dim(); ++i) out.push_back(dualize ? Scalar(-1) * k.ad(i).transpose() : k.ad(i));
  return out;
}

// Data shared by the Kac-module checks: generators y_i of g∓1 and k_i = [u, y_i].
struct KacSetup {
  KacModule K;
  SubalgebraAlgebra g0;
  std::vector<Vector> kv;
  std::shared_ptr<const LieSA> kalg;
  Rep l0k;
  bool injective = true;
};

KacSetup kac_setup(AlgebraPtr gp, const Rep& l0, KacDirection dir, const OddElem& u) {
  const LieSA& g = *gp;
  require_same_algebra(g, *u.parent);
  KacSetup s{kac_induce(gp, l0, dir), degree_zero(gp)};
  const std::size_t p = s.K.free.size();
  for (auto y : s.K.free) s.kv.push_back(g.bracket(u.coords, g.basis_vector(y)));
  Matrix km = Matrix::from_rows(g.dim(), s.kv);
  if (rank(km) < p) {
    s.injective = false;
    return s;
  }
  CoordinateMap kc(km);
  std::vector<Matrix> ad(p, Matrix(p, p));
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = 0; j < p; ++j)
      ad[i].set_column(j, kc.coordinates_or_throw(g.bracket(s.kv[i], s.kv[j]), ErrorKind::ImageMismatch));
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < p; ++i) labels.push_back("[u," + g.space().labels()[s.K.free[i]] + "]");
  s.kalg = std::make_shared<const LieSA>(SuperSpace(labels, std::vector<int>(p, 0)), std::move(ad));
  std::vector<Matrix> act;
  for (const auto& x : s.kv) act.push_back(l0.act(s.g0.coords.coordinates_or_throw(x, ErrorKind::ImageMismatch)));
  s.l0k = Rep{s.kalg, l0.space, std::move(act)};
  return s;
}

}  // namespace

CEComplex ce_complex(const LieSA& k, const Rep& l, CEVariant variant) {
  require_even(k);
  require_same_algebra(k, *l.algebra);
  const std::size_t n = k.dim(), L = l.dim();
  Exterior E(n);
  CEComplex ce;
  ce.variant = variant;
  ce.monomials = E.masks;
  ce.l_dim = L;
  const std::size_t N = E.size() * L;
  auto at = [&](unsigned mask, std::size_t v) { return E.pos[mask] * L + v; };
  Matrix d(N, N);
  for (unsigned S : E.masks) {
    auto s = members(S);
    // terms x_{s_i} acting on the module, with x_{s_i} removed from S
    for (std::size_t i = 0; i < s.size(); ++i) {
      const Matrix& rho = l.action[s[i]];
      unsigned rest = S & ~(1u << s[i]);
      const int sign = i % 2 ? -1 : 1;
      for (std::size_t v = 0; v < L; ++v)
        for (std::size_t w = 0; w < L; ++w) {
          if (sgn(rho(w, v)) == 0) continue;
          if (variant == CEVariant::Homology)
            d(at(rest, w), at(S, v)) += sign * rho(w, v);
          else
            d(at(S, w), at(rest, v)) += sign * rho(w, v);
        }
    }
    // bracket terms
    for (std::size_t i = 0; i < s.size(); ++i)
      for (std::size_t j = i + 1; j < s.size(); ++j) {
        const Matrix& adi = k.ad(s[i]);
        unsigned rest = S & ~(1u << s[i]) & ~(1u << s[j]);
        const int sign = (i + j) % 2 ? -1 : 1;
        for (std::size_t a = 0; a < n; ++a) {
          const Scalar& c = adi(a, s[j]);
          if (sgn(c) == 0) continue;
          std::vector<std::size_t> idx = {a};
          for (auto r : members(rest)) idx.push_back(r);
          auto [sg, mask] = wedge_sort(idx);
          if (sg == 0) continue;
          for (std::size_t v = 0; v < L; ++v) {
            if (variant == CEVariant::Homology)
              d(at(mask, v), at(S, v)) -= sign * sg * c;
            else
              d(at(S, v), at(mask, v)) += sign * sg * c;
          }
        }
      }
  }
  ce.differential = std::move(d);
  // homology per degree from the degree blocks of the differential
  std::vector<std::vector<std::size_t>> cols(n + 1);
  for (std::size_t t = 0; t < E.size(); ++t)
    for (std::size_t v = 0; v < L; ++v) cols[std::popcount(E.masks[t])].push_back(t * L + v);
  std::vector<std::size_t> rk(n + 1);
  for (std::size_t p = 0; p <= n; ++p) rk[p] = rank(ce.differential.select_columns(cols[p]));
  for (std::size_t p = 0; p <= n; ++p) {
    std::size_t incoming = variant == CEVariant::Homology ? (p < n ? rk[p + 1] : 0) : (p > 0 ? rk[p - 1] : 0);
    ce.homology.push_back(cols[p].size() - rk[p] - incoming);
  }
  return ce;
}

InvariantAlgebra invariant_exterior(const LieSA& k, bool dualize) {
  require_even(k);
  Exterior E(k.dim());
  std::vector<Matrix> ders;
  for (const auto& A : adjoint_generators(k, dualize)) ders.push_back(E.derivation(A));
  Subspace inv = invariant_subspace(E, ders);
  InvariantAlgebra out;
  out.basis = inv.basis();
  std::vector<std::string> labels;
  std::vector<int> par;
  out.poincare.assign(k.dim() + 1, 0);
  for (std::size_t i = 0; i < inv.dim(); ++i) {
    int deg = -1;
    for (std::size_t t = 0; t < E.size(); ++t)
      if (sgn(out.basis(i, t)) != 0) {
        deg = std::popcount(E.masks[t]);
        break;
      }
    out.degree.push_back(deg);
    ++out.poincare[static_cast<std::size_t>(deg)];
    labels.push_back("w" + std::to_string(i + 1));
    par.push_back(deg % 2);
  }
  while (out.poincare.size() > 1 && out.poincare.back() == 0) out.poincare.pop_back();
  out.space = SuperSpace(labels, par);
  CoordinateMap cm(out.basis);
  for (std::size_t i = 0; i < inv.dim(); ++i) {
    Matrix m(inv.dim(), inv.dim());
    for (std::size_t j = 0; j < inv.dim(); ++j)
      m.set_column(j, cm.coordinates_or_throw(E.wedge(out.basis.row(i), out.basis.row(j)), ErrorKind::NotASubmodule));
    out.products.push_back(std::move(m));
  }
  return out;
}

Report kac_differential_compare(AlgebraPtr g, const Rep& l0, KacDirection dir, const OddElem& u, const Subspace* k) {
  Report rep;
  rep.id = "kac-differential";
  KacSetup s = kac_setup(g, l0, dir, u);
  rep.add("[u,-] injective on the free part", s.injective);
  if (!s.injective) return rep;
  if (k && Subspace::span(g->dim(), s.kv) != *k) throw Error(ErrorKind::ImageMismatch, "[u, g∓1] differs from k");
  rep.dim("K(L0)", s.K.rep.space.sdim());
  // semisimplicity of L0 over the toral part of k
  Subspace kspan = Subspace::span(g->dim(), s.kv);
  Subspace toral = g->cartan().empty() ? kspan : intersect(kspan, Subspace::span(g->dim(), g->cartan()));
  bool semisimple = true;
  for (const auto& h : rows(toral))
    semisimple = semisimple && minimal_polynomial(l0.act(s.g0.coords.coordinates_or_throw(h, ErrorKind::ImageMismatch))).squarefree;
  rep.add("L0 semisimple over toral part", semisimple);

  CEComplex ce = ce_complex(*s.kalg, s.l0k, CEVariant::Homology);
  Matrix U = s.K.rep.act(u.coords);
  std::size_t diff = 0;
  for (std::size_t i = 0; i < U.rows(); ++i)
    for (std::size_t j = 0; j < U.cols(); ++j)
      if (U(i, j) != ce.differential(i, j)) ++diff;
  std::string witness = std::to_string(diff) + " differing entries";
  if (diff && U == Scalar(-1) * ce.differential) witness += " (equal up to global sign)";
  rep.add("u equals transported CE differential", diff == 0, witness);
  return rep;
}

Report r_freeness(AlgebraPtr gp, const Rep& l0, KacDirection dir, const OddElem& u) {
  Report rep;
  rep.id = "r-freeness";
  const LieSA& g = *gp;
  KacSetup s = kac_setup(gp, l0, dir, u);
  rep.add("[u,-] injective on the free part", s.injective);
  if (!s.injective) return rep;
  const std::size_t p = s.K.free.size(), L = l0.dim();
  DSResult D = ds(s.K.rep, u);

  // R = (∧g∓1)^k under the bracket action of k on g∓1
  Exterior E(p);
  std::vector<Matrix> ders;
  for (const auto& x : s.kv) {
    Matrix adx = g.ad(x), A(p, p);
    for (std::size_t a = 0; a < p; ++a)
      for (std::size_t b = 0; b < p; ++b) A(a, b) = adx(s.K.free[a], s.K.free[b]);
    ders.push_back(E.derivation(A));
  }
  Subspace R = invariant_subspace(E, ders);
  Subspace linv = Subspace::whole(L);
  for (const auto& m : s.l0k.action) linv = intersect(linv, kernel(m));

  SDim rs{}, ls{};
  for (std::size_t i = 0; i < R.dim(); ++i) {
    int deg = 0;
    for (std::size_t t = 0; t < E.size(); ++t)
      if (sgn(R.basis()(i, t)) != 0) {
        deg = std::popcount(E.masks[t]);
        break;
      }
    (deg % 2 ? rs.odd : rs.even) += 1;
  }
  for (std::size_t i = 0; i < linv.dim(); ++i) {
    auto par = vector_parity(l0.space, linv.vector(i));
    (par && *par == 1 ? ls.odd : ls.even) += 1;
  }
  rep.dim("R", rs);
  rep.dim("L0^k", ls);
  rep.dim("DS K(L0)", D.cohomology.sdim());

  Matrix eval(D.dim(), R.dim() * linv.dim());
  bool cocycles = true;
  for (std::size_t b = 0; b < R.dim(); ++b)
    for (std::size_t w = 0; w < linv.dim(); ++w) {
      Vector x(s.K.rep.dim(), Scalar(0));
      for (std::size_t t = 0; t < E.size(); ++t) {
        const Scalar& rb = R.basis()(b, t);
        if (sgn(rb) == 0) continue;
        for (std::size_t v = 0; v < L; ++v)
          if (sgn(linv.basis()(w, v)) != 0) x[s.K.index(E.masks[t], v)] += rb * linv.basis()(w, v);
      }
      try {
        eval.set_column(b * linv.dim() + w, D.project(x));
      } catch (const Error&) {
        cocycles = false;
      }
    }
  rep.add("R ⊗ L0^k lands in cocycles", cocycles);
  rep.add("rank = dim L0^k", D.dim() == R.dim() * linv.dim(),
          std::to_string(D.dim()) + " vs " + std::to_string(R.dim()) + "·" + std::to_string(linv.dim()));
  rep.add("evaluation bijective", cocycles && eval.is_square() && rank(eval) == eval.rows());
  return rep;
}

Report duality_pairing_check(const LieSA& k) {
  Report rep;
  rep.id = "duality-pairing";
  InvariantAlgebra a = invariant_exterior(k, false), b = invariant_exterior(k, true);
  rep.dim("(∧k)^k", a.space.sdim());
  rep.dim("(∧k*)^k", b.space.sdim());
  Matrix gram = a.basis * b.basis.transpose();
  rep.add("equal dimensions", a.dim() == b.dim());
  rep.add("nondegenerate", gram.is_square() && rank(gram) == gram.rows(),
          std::to_string(gram.rows()) + "x" + std::to_string(gram.cols()));
  return rep;
}

}  // namespace dslab
