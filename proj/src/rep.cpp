#include "dslab/rep.hpp"

#include <set>

namespace dslab {

Matrix Rep::act(std::span<const Scalar> x) const {
  Matrix out(dim(), dim());
  for (std::size_t i = 0; i < x.size(); ++i)
    if (sgn(x[i]) != 0) out += x[i] * action[i];
  return out;
}

void require_same_algebra(const LieSA& a, const LieSA& b) {
  if (&a == &b) return;
  if (!(a == b)) throw Error(ErrorKind::AlgebraMismatch, "representations over different algebras");
}

Rep with_weights(Rep r) {
  const auto& h = r.algebra->cartan();
  if (h.empty() || r.dim() == 0) return r;
  std::vector<Weight> w(r.dim(), Weight(h.size(), 0));
  for (std::size_t a = 0; a < h.size(); ++a) {
    Matrix m = r.act(h[a]);
    for (std::size_t i = 0; i < r.dim(); ++i)
      for (std::size_t j = 0; j < r.dim(); ++j) {
        if (i != j && sgn(m(i, j)) != 0) return r;
        if (i == j) {
          if (m(i, i).get_den() != 1 || !m(i, i).get_num().fits_slong_p()) return r;
          w[i][a] = m(i, i).get_num().get_si();
        }
      }
  }
  r.space = SuperSpace(r.space.labels(), r.space.parities(), std::move(w));
  return r;
}

Rep trivial_rep(AlgebraPtr g, int parity) {
  const std::size_t d = g->dim();
  Rep r{g, SuperSpace({parity ? "Π1" : "1"}, {parity}), std::vector<Matrix>(d, Matrix(1, 1))};
  return with_weights(std::move(r));
}

Rep character_rep(AlgebraPtr g, const std::vector<Scalar>& values, const std::string& label) {
  if (values.size() != g->dim()) throw Error(ErrorKind::DimensionMismatch, "one value per basis element");
  std::vector<Matrix> act;
  for (const auto& v : values) act.push_back(Matrix{{v}});
  return with_weights(Rep{std::move(g), SuperSpace({label}, {0}), std::move(act)});
}

Rep natural_rep(AlgebraPtr g) {
  if (!g->realization()) throw Error(ErrorKind::InvalidParams, "algebra has no matrix realization");
  const auto& R = *g->realization();
  return with_weights(Rep{g, R.natural, R.basis});
}

Rep adjoint_rep(AlgebraPtr g) {
  Rep r{g, SuperSpace(g->space().labels(), g->space().parities()), g->ad_matrices()};
  return with_weights(std::move(r));
}

Rep dual_rep(const Rep& r) {
  const auto& g = *r.algebra;
  std::vector<Matrix> act;
  for (std::size_t x = 0; x < g.dim(); ++x) {
    Matrix m(r.dim(), r.dim());
    for (std::size_t i = 0; i < r.dim(); ++i)
      for (std::size_t j = 0; j < r.dim(); ++j) {
        const Scalar& a = r.action[x](j, i);
        if (sgn(a) == 0) continue;
        m(i, j) = (g.parity(x) && r.space.parity(j)) ? a : Scalar(-a);
      }
    act.push_back(std::move(m));
  }
  SuperSpace sp = dual(SuperSpace(r.space.labels(), r.space.parities()));
  return with_weights(Rep{r.algebra, std::move(sp), std::move(act)});
}

Rep tensor_rep(const Rep& a, const Rep& b) {
  require_same_algebra(*a.algebra, *b.algebra);
  const auto& g = *a.algebra;
  Matrix ib = Matrix::identity(b.dim());
  Vector signs(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) signs[i] = a.space.parity(i) ? -1 : 1;
  Matrix s = Matrix::diagonal(signs);
  Matrix ia = Matrix::identity(a.dim());
  std::vector<Matrix> act;
  for (std::size_t x = 0; x < g.dim(); ++x) {
    Matrix m = kron(a.action[x], ib);
    m += kron(g.parity(x) ? s : ia, b.action[x]);
    act.push_back(std::move(m));
  }
  SuperSpace sp = tensor(SuperSpace(a.space.labels(), a.space.parities()), SuperSpace(b.space.labels(), b.space.parities()));
  return with_weights(Rep{a.algebra, std::move(sp), std::move(act)});
}

Rep parity_shift_rep(const Rep& r) {
  std::vector<Matrix> act;
  for (std::size_t x = 0; x < r.algebra->dim(); ++x)
    act.push_back(r.algebra->parity(x) ? Scalar(-1) * r.action[x] : r.action[x]);
  return with_weights(Rep{r.algebra, parity_shift(SuperSpace(r.space.labels(), r.space.parities())), std::move(act)});
}

Rep direct_sum_rep(const Rep& a, const Rep& b) {
  require_same_algebra(*a.algebra, *b.algebra);
  std::vector<Matrix> act;
  for (std::size_t x = 0; x < a.algebra->dim(); ++x) act.push_back(direct_sum(a.action[x], b.action[x]));
  SuperSpace sp = direct_sum(SuperSpace(a.space.labels(), a.space.parities()), SuperSpace(b.space.labels(), b.space.parities()));
  return with_weights(Rep{a.algebra, std::move(sp), std::move(act)});
}

Rep berezinian_rep(AlgebraPtr g, long k) {
  if (g->family().tag != Family::GL) throw Error(ErrorKind::InvalidParams, "Berezinian needs gl(m|n)");
  const auto& R = *g->realization();
  std::vector<Scalar> vals;
  for (const auto& x : R.basis) {
    Scalar st = 0;
    for (std::size_t i = 0; i < x.rows(); ++i) st += R.natural.parity(i) ? Scalar(-x(i, i)) : x(i, i);
    vals.push_back(st * k);
  }
  return character_rep(std::move(g), vals, "Ber^" + std::to_string(k));
}

RepReport verify_rep(const Rep& r) {
  RepReport rep;
  const auto& g = *r.algebra;
  const auto& L = g.space().labels();
  auto note = [&](std::string s) {
    rep.pass = false;
    if (rep.violations.size() < 50) rep.violations.push_back(std::move(s));
  };
  if (r.action.size() != g.dim()) {
    note("action count");
    return rep;
  }
  for (std::size_t x = 0; x < g.dim(); ++x) {
    auto p = map_parity(r.space, r.space, r.action[x]);
    if (!p || (*p >= 0 && *p != g.parity(x))) note("parity of " + L[x]);
  }
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = i; j < g.dim(); ++j) {
      Matrix lhs = r.act(g.ad(i).column(j));
      Matrix rhs = r.action[i] * r.action[j];
      Matrix ji = r.action[j] * r.action[i];
      if (g.parity(i) && g.parity(j)) rhs += ji;
      else rhs -= ji;
      if (!(lhs == rhs)) note("bracket (" + L[i] + "," + L[j] + ")");
    }
  return rep;
}

Subspace invariants(const Rep& r, const std::vector<Vector>& elements) {
  std::vector<Matrix> blocks;
  for (const auto& x : elements) blocks.push_back(r.act(x));
  if (blocks.empty()) return Subspace::whole(r.dim());
  return kernel(vstack(blocks, r.dim()));
}

Subspace invariants(const Rep& r, const Subalgebra& k) {
  require_same_algebra(*r.algebra, *k.parent);
  std::vector<Vector> el;
  for (std::size_t i = 0; i < k.dim(); ++i) el.push_back(k.span.vector(i));
  return invariants(r, el);
}

namespace {

std::vector<std::string> sub_labels(const SuperSpace& parent, const Matrix& rows, const std::string& prefix) {
  std::vector<std::string> out;
  std::set<std::string> used;
  for (std::size_t r = 0; r < rows.rows(); ++r) {
    std::size_t nz = 0, at = 0;
    for (std::size_t c = 0; c < rows.cols(); ++c)
      if (sgn(rows(r, c)) != 0) {
        ++nz;
        at = c;
      }
    std::string l = (nz == 1 && rows(r, at) == 1) ? parent.labels()[at] : prefix + std::to_string(r + 1);
    while (!used.insert(l).second) l += "'";
    out.push_back(l);
  }
  return out;
}

}  // namespace

SubRep sub_rep(const Rep& r, const Subspace& s) {
  GradedBasis hb = homogeneous_basis(r.space, s);
  Matrix rows = vstack(hb.even, hb.odd);
  CoordinateMap cm(rows);
  std::vector<Matrix> act;
  for (std::size_t x = 0; x < r.algebra->dim(); ++x) {
    Matrix m(rows.rows(), rows.rows());
    for (std::size_t b = 0; b < rows.rows(); ++b)
      m.set_column(b, cm.coordinates_or_throw(r.action[x].apply(rows.row(b)), ErrorKind::NotASubmodule));
    act.push_back(std::move(m));
  }
  std::vector<int> par(hb.even.rows(), 0);
  par.resize(rows.rows(), 1);
  Rep out{r.algebra, SuperSpace(sub_labels(r.space, rows, "m"), par), std::move(act)};
  return {with_weights(std::move(out)), std::move(rows), std::move(cm)};
}

QuotientRep quotient_rep(const Rep& r, const Subspace& s) {
  for (std::size_t x = 0; x < r.algebra->dim(); ++x)
    for (std::size_t i = 0; i < s.dim(); ++i)
      if (!s.contains(r.action[x].apply(s.basis().row(i))))
        throw Error(ErrorKind::NotASubmodule, "subspace not stable under " + r.algebra->space().labels()[x]);
  homogeneous_basis(r.space, s);
  Quotient q = quotient(Subspace::whole(r.dim()), s);
  Matrix proj(q.dim(), r.dim());
  for (std::size_t i = 0; i < r.dim(); ++i) proj.set_column(i, q.project(unit_vector(r.dim(), i)));
  std::vector<Matrix> act;
  for (std::size_t x = 0; x < r.algebra->dim(); ++x) {
    Matrix m(q.dim(), q.dim());
    for (std::size_t b = 0; b < q.dim(); ++b) m.set_column(b, q.project(r.action[x].column(q.free[b])));
    act.push_back(std::move(m));
  }
  std::vector<std::string> labels;
  std::vector<int> par;
  for (auto f : q.free) {
    labels.push_back(r.space.labels()[f]);
    par.push_back(r.space.parity(f));
  }
  Rep out{r.algebra, SuperSpace(labels, par), std::move(act)};
  return {with_weights(std::move(out)), std::move(q), std::move(proj)};
}

Rep restrict_rep(const Rep& r, const SubalgebraAlgebra& k) {
  std::vector<Matrix> act;
  for (std::size_t a = 0; a < k.algebra.dim(); ++a) act.push_back(r.act(k.embedding.row(a)));
  Rep out{std::make_shared<const LieSA>(k.algebra), SuperSpace(r.space.labels(), r.space.parities()), std::move(act)};
  return with_weights(std::move(out));
}

CInvariants c_invariants(const Rep& r, std::span<const Scalar> c) {
  Matrix rc = r.act(c);
  if (!minimal_polynomial(rc).squarefree) throw Error(ErrorKind::NotSemisimpleAction, "c does not act semisimply");
  Subspace k = kernel(rc);
  Vector cv(c.begin(), c.end());
  SubalgebraAlgebra z = as_algebra(centralizer(r.algebra, {cv}));
  Rep restricted = restrict_rep(r, z);
  SubRep s = sub_rep(restricted, k);
  return {std::move(s.rep), std::move(s.basis), std::move(z)};
}

}  // namespace dslab
