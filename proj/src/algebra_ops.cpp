#include <set>

#include "dslab/algebra.hpp"

namespace dslab {

LieReport verify_lie(const LieSA& g) {
  LieReport rep;
  const std::size_t d = g.dim();
  const auto& L = g.space().labels();
  auto note = [&](std::string s) {
    rep.pass = false;
    if (rep.violations.size() < 50) rep.violations.push_back(std::move(s));
  };
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        const Scalar& cij = g.c(i, j, k);
        if (sgn(cij) != 0 && g.parity(k) != (g.parity(i) + g.parity(j)) % 2)
          note("parity (" + L[i] + "," + L[j] + "," + L[k] + ")");
        Scalar s = g.parity(i) && g.parity(j) ? g.c(j, i, k) : -g.c(j, i, k);
        if (cij != s) note("antisymmetry (" + L[i] + "," + L[j] + "," + L[k] + ")");
      }
  // ad([x_i, x_j]) = ad_i ad_j - (-1)^{|i||j|} ad_j ad_i, column z gives the triple
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j) {
      Matrix lhs = g.ad(g.bracket(g.basis_vector(i), g.basis_vector(j)));
      Matrix rhs = g.ad(i) * g.ad(j);
      Matrix ji = g.ad(j) * g.ad(i);
      if (g.parity(i) && g.parity(j)) rhs += ji;
      else rhs -= ji;
      if (lhs == rhs) continue;
      for (std::size_t z = 0; z < d; ++z)
        for (std::size_t r = 0; r < d; ++r)
          if (lhs(r, z) != rhs(r, z)) {
            note("jacobi (" + L[i] + "," + L[j] + "," + L[z] + ")");
            r = d;
          }
    }
  return rep;
}

Subspace bracket_span(const LieSA& g, const Subspace& a, const Subspace& b) {
  std::vector<Vector> out;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    Matrix ada = g.ad(a.basis().row(i));
    for (std::size_t j = 0; j < b.dim(); ++j) {
      Vector v = ada.apply(b.basis().row(j));
      if (!is_zero(std::span<const Scalar>(v))) out.push_back(std::move(v));
    }
  }
  return Subspace::span(g.dim(), out);
}

Subalgebra make_subalgebra(AlgebraPtr parent, const Subspace& span) {
  if (span.ambient() != parent->dim()) throw Error(ErrorKind::DimensionMismatch, "subalgebra ambient");
  if (!span.contains(bracket_span(*parent, span, span)))
    throw Error(ErrorKind::InvalidParams, "subspace is not closed under the bracket");
  return {std::move(parent), span};
}

Subalgebra whole_algebra(AlgebraPtr g) {
  auto n = g->dim();
  return {std::move(g), Subspace::whole(n)};
}

namespace {

// Kernel of the map a ↦ ([Σ a_r b_r, s])_s for b_r the rows of `basis`.
Subspace centralizer_coords(const LieSA& g, const Matrix& basis, const std::vector<Vector>& s) {
  const std::size_t d = g.dim(), k = basis.rows();
  if (s.empty()) return Subspace::whole(k);
  Matrix sys(d * s.size(), k);
  for (std::size_t r = 0; r < k; ++r) {
    Matrix ad = g.ad(basis.row(r));
    for (std::size_t t = 0; t < s.size(); ++t) {
      Vector v = ad.apply(s[t]);
      for (std::size_t i = 0; i < d; ++i) sys(t * d + i, r) = v[i];
    }
  }
  return kernel(sys);
}

}  // namespace

Subalgebra centralizer(AlgebraPtr g, const std::vector<Vector>& s) {
  return centralizer_in(whole_algebra(std::move(g)), s);
}

Subalgebra centralizer_in(const Subalgebra& within, const std::vector<Vector>& s) {
  const auto& g = *within.parent;
  Subspace coords = centralizer_coords(g, within.span.basis(), s);
  std::vector<Vector> vecs;
  for (std::size_t i = 0; i < coords.dim(); ++i) {
    Vector v(g.dim(), Scalar(0));
    for (std::size_t r = 0; r < within.dim(); ++r) axpy(v, coords.basis()(i, r), within.span.basis().row(r));
    vecs.push_back(std::move(v));
  }
  return {within.parent, Subspace::span(g.dim(), vecs)};
}

Subalgebra center(const Subalgebra& k) {
  std::vector<Vector> s;
  for (std::size_t i = 0; i < k.dim(); ++i) s.push_back(k.span.vector(i));
  return centralizer_in(k, s);
}

Subalgebra subalgebra_closure(AlgebraPtr g, const std::vector<Vector>& vectors) {
  Subspace s = Subspace::span(g->dim(), vectors);
  for (;;) {
    Subspace next = sum(s, bracket_span(*g, s, s));
    if (next.dim() == s.dim()) break;
    s = std::move(next);
  }
  return {std::move(g), s};
}

bool is_ideal(const LieSA& g, const Subspace& i) {
  return i.contains(bracket_span(g, Subspace::whole(g.dim()), i));
}

SubalgebraAlgebra as_algebra(const Subalgebra& k) {
  const auto& g = *k.parent;
  GradedBasis hb = homogeneous_basis(g.space(), k.span);
  Matrix emb = vstack(hb.even, hb.odd);
  const std::size_t d = emb.rows();
  std::vector<std::string> labels;
  std::vector<int> par;
  std::set<std::string> used;
  for (std::size_t r = 0; r < d; ++r) {
    std::string label;
    std::size_t nz = 0, at = 0;
    for (std::size_t c = 0; c < g.dim(); ++c)
      if (sgn(emb(r, c)) != 0) {
        ++nz;
        at = c;
      }
    if (nz == 1 && emb(r, at) == 1) label = g.space().labels()[at];
    else label = "s" + std::to_string(r + 1);
    while (!used.insert(label).second) label += "'";
    labels.push_back(label);
    par.push_back(r < hb.even.rows() ? 0 : 1);
  }
  CoordinateMap cm(emb);
  std::vector<Matrix> ad(d, Matrix(d, d));
  for (std::size_t i = 0; i < d; ++i) {
    Matrix adi = g.ad(emb.row(i));
    for (std::size_t j = 0; j < d; ++j) {
      Vector c = cm.coordinates_or_throw(adi.apply(emb.row(j)), ErrorKind::InvalidParams);
      for (std::size_t t = 0; t < d; ++t) ad[i](t, j) = c[t];
    }
  }
  LieSA out(SuperSpace(labels, par), std::move(ad), {Family::Sub, g.family().m, g.family().n});
  std::vector<Vector> cartan;
  for (const auto& h : g.cartan())
    if (auto c = cm.coordinates(h)) cartan.push_back(*c);
  if (!cartan.empty()) out.set_cartan(std::move(cartan));
  return {std::move(out), std::move(emb), std::move(cm)};
}

QuotientAlgebra quotient_algebra(const LieSA& g, const Subspace& ideal) {
  if (!is_ideal(g, ideal)) throw Error(ErrorKind::NotAnIdeal, "subspace is not an ideal");
  Quotient q = quotient(Subspace::whole(g.dim()), ideal);
  const std::size_t d = q.dim();
  Matrix proj(d, g.dim());
  for (std::size_t i = 0; i < g.dim(); ++i) proj.set_column(i, q.project(g.basis_vector(i)));
  std::vector<std::string> labels;
  std::vector<int> par;
  for (std::size_t a = 0; a < d; ++a) {
    labels.push_back(g.space().labels()[q.free[a]]);
    par.push_back(g.parity(q.free[a]));
  }
  std::vector<Matrix> ad(d, Matrix(d, d));
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) {
      Vector c = q.project(g.ad(q.free[a]).column(q.free[b]));
      for (std::size_t t = 0; t < d; ++t) ad[a](t, b) = c[t];
    }
  LieSA out(SuperSpace(labels, par), std::move(ad), {Family::Quotient, g.family().m, g.family().n});
  std::vector<Vector> images;
  for (const auto& h : g.cartan()) images.push_back(proj.apply(h));
  Subspace hs = Subspace::span(d, images);
  std::vector<Vector> cartan;
  for (std::size_t i = 0; i < hs.dim(); ++i) cartan.push_back(hs.vector(i));
  if (!cartan.empty()) out.set_cartan(std::move(cartan));
  return {std::move(out), std::move(q), std::move(proj)};
}

bool is_toral(const LieSA& g, std::span<const Scalar> t) {
  auto p = vector_parity(g.space(), t);
  if (!p || *p == 1) return false;
  return minimal_polynomial(g.ad(t)).squarefree;
}

}  // namespace dslab
