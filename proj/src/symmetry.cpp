#include <algorithm>

#include "dslab/symmetry.hpp"

namespace dslab {

namespace {

std::vector<Vector> rows(const Subspace& s) {
  std::vector<Vector> out;
  for (std::size_t i = 0; i < s.dim(); ++i) out.push_back(s.vector(i));
  return out;
}

Vector flatten(const Matrix& m) {
  Vector out;
  for (std::size_t r = 0; r < m.rows(); ++r) out.insert(out.end(), m.row(r).begin(), m.row(r).end());
  return out;
}

Subspace parity_part(const SuperSpace& s, int p) {
  std::vector<Vector> v;
  for (auto i : s.indices_of_parity(p)) v.push_back(unit_vector(s.dim(), i));
  return Subspace::span(s.dim(), v);
}

// [u, g^c]
Subspace bracket_image(const LieSA& g, const OddElem& u) {
  Subspace gc = is_zero(u.c) ? Subspace::whole(g.dim()) : kernel(g.ad(u.c));
  std::vector<Vector> im;
  for (const auto& v : rows(gc)) im.push_back(g.bracket(u.coords, v));
  return Subspace::span(g.dim(), im);
}

Subspace toral_part(const LieSA& g, const Subspace& k) {
  if (g.cartan().empty()) return k;
  return intersect(k, Subspace::span(g.dim(), g.cartan()));
}

// f: A -> B given by columns; checks f[x,y] = [fx, fy] on basis pairs.
bool is_homomorphism(const LieSA& a, const LieSA& b, const Matrix& f) {
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      if (f.apply(a.ad(i).column(j)) != b.bracket(f.column(i), f.column(j))) return false;
  return true;
}

void check_map(Report& rep, const std::string& what, const LieSA& a, const LieSA& b, const Matrix& f) {
  rep.add(what + " injective", rank(f) == a.dim(), "rank " + std::to_string(rank(f)) + " of " + std::to_string(a.dim()));
  rep.add(what + " homomorphism", is_homomorphism(a, b, f));
}

std::vector<Vector> independent_cartan(const LieSA& g, const SubalgebraAlgebra* ca, const Matrix& proj) {
  std::vector<Vector> out, seen;
  for (const auto& h : g.cartan()) {
    Vector v;
    if (ca) {
      auto c = ca->coords.coordinates(h);
      if (!c) continue;
      v = proj.apply(*c);
    } else {
      v = proj.apply(h);
    }
    if (is_zero(v)) continue;
    seen.push_back(v);
    if (rank(Matrix::from_rows(v.size(), seen)) < seen.size()) {
      seen.pop_back();
      continue;
    }
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace

Vector SymmetryAlgebra::class_of(std::span<const Scalar> y) const {
  Vector c = ck_coords.coordinates_or_throw(y, ErrorKind::QuotientFailure);
  return cohomology.adjoint.project(reduced_projection.apply(c));
}

Vector SymmetryAlgebra::lift(std::span<const Scalar> cls) const {
  Vector red = zero_vector(reduced->dim());
  for (std::size_t i = 0; i < cls.size(); ++i)
    if (sgn(cls[i]) != 0) axpy(red, cls[i], cohomology.reps.row_vector(i));
  Vector inck = zero_vector(ck.rows());
  for (std::size_t i = 0; i < red.size(); ++i)
    if (sgn(red[i]) != 0) axpy(inck, red[i], reduced_reps.row_vector(i));
  return ck_coords.combine(inck);
}

SymmetryAlgebra g_u_k(AlgebraPtr gp, const OddElem& u, const Subspace& k) {
  const LieSA& g = *gp;
  require_same_algebra(g, *u.parent);
  if (!u.homogeneous) throw Error(ErrorKind::NotHomogeneous, "[u,u] is not semisimple");
  if (!bracket_image(g, u).contains(k)) throw Error(ErrorKind::NotInBracketImage, "k is not inside [u, g^c]");
  for (const auto& t : rows(toral_part(g, k)))
    if (!is_toral(g, t)) throw Error(ErrorKind::NotToral, "toral part of k is not ad-semisimple");

  SymmetryAlgebra s;
  s.parent = gp;
  s.u = u;
  s.k = k;
  const std::size_t n = g.dim();
  auto kv = rows(k);
  if (k.dim() == 0) {
    s.center = Subspace(n);
    s.ck = Matrix::identity(n);
    s.ck_coords = CoordinateMap(s.ck);
    s.reduced = gp;
    s.reduced_projection = Matrix::identity(n);
    s.reduced_reps = Matrix::identity(n);
  } else {
    s.center = center(make_subalgebra(gp, k)).span;
    SubalgebraAlgebra ca = as_algebra(centralizer(gp, kv));
    s.ck = ca.embedding;
    s.ck_coords = ca.coords;
    std::vector<Vector> z;
    for (const auto& v : rows(s.center)) z.push_back(ca.coords.coordinates_or_throw(v, ErrorKind::NotAnIdeal));
    QuotientAlgebra qa = quotient_algebra(ca.algebra, Subspace::span(ca.algebra.dim(), z));
    LieSA red = qa.algebra;
    auto cartan = independent_cartan(g, &ca, qa.projection);
    if (!cartan.empty()) red.set_cartan(std::move(cartan));
    s.reduced = std::make_shared<const LieSA>(std::move(red));
    s.reduced_projection = qa.projection;
    s.reduced_reps = qa.quotient.reps;
  }
  Vector ubar = s.reduced_projection.apply(s.ck_coords.coordinates_or_throw(u.coords, ErrorKind::NotInBracketImage));
  s.cohomology = gu_algebra(s.reduced, make_odd(s.reduced, ubar));
  s.gu = gu_algebra(gp, u);

  // g_u ≅ c(k)_u: move each representative into c(k) along g = c(k) ⊕ [k, g]
  std::vector<Vector> moved;
  for (const auto& x : kv)
    for (std::size_t j = 0; j < n; ++j) moved.push_back(g.bracket(x, g.basis_vector(j)));
  Subspace kg = Subspace::span(n, moved);
  const std::size_t nc = s.ck.rows();
  Matrix both(nc + kg.dim(), n);
  for (std::size_t i = 0; i < nc; ++i) std::ranges::copy(s.ck.row(i), both.row(i).begin());
  for (std::size_t i = 0; i < kg.dim(); ++i) std::ranges::copy(kg.basis().row(i), both.row(nc + i).begin());
  if (both.rows() != n || rank(both) != n)
    throw Error(ErrorKind::NotSemisimpleAction, "c(k) and [k, g] do not split g");
  CoordinateMap split(both);
  s.gu_injection = Matrix(s.base()->dim(), s.gu.algebra->dim());
  for (std::size_t i = 0; i < s.gu.algebra->dim(); ++i) {
    Vector c = split.coordinates_or_throw(s.gu.reps.row_vector(i), ErrorKind::NotSemisimpleAction);
    Vector x0 = zero_vector(n);
    for (std::size_t r = 0; r < nc; ++r) axpy(x0, c[r], s.ck.row_vector(r));
    s.gu_injection.set_column(i, s.class_of(x0));
  }
  return s;
}

namespace {

Vector unit_elem(const LieSA& g, std::size_t a, std::size_t b, const Scalar& coef = 1) {
  const auto& real = *g.realization();
  Matrix m(real.natural.dim(), real.natural.dim());
  m(a, b) = coef;
  return real.coordinates(m);
}

Vector from_matrix(const LieSA& g, const Matrix& m) { return g.realization()->coordinates(m); }

}  // namespace

Subspace family_toral(AlgebraPtr gp, const OddElem& u) {
  const LieSA& g = *gp;
  require_same_algebra(g, *u.parent);
  if (!g.realization()) throw Error(ErrorKind::NotStandardForm, "no matrix realization");
  const auto fam = g.family();
  const std::size_t N = g.realization()->natural.dim();
  std::vector<Vector> t;
  bool plus = fam.tag == Family::P && u.coords == p_plus(g);
  if (!plus) {
    RankData d = rank_of(g, u.coords);
    if (standard_u(g, d) != u.coords) throw Error(ErrorKind::NotStandardForm, "u is not the standard representative");
    switch (fam.tag) {
      case Family::GL:
      case Family::SL: {
        const std::size_t m = fam.m;
        for (long i = 0; i < d.r; ++i) {
          std::size_t a = static_cast<std::size_t>(i);
          t.push_back(g.bracket(unit_elem(g, a, m + a), unit_elem(g, m + a, a)));
        }
        break;
      }
      case Family::Q: {
        const std::size_t n = fam.n;
        auto even = [&](std::vector<std::size_t> idx) {
          Matrix m(N, N);
          for (auto i : idx) m(i, i) = m(n + i, n + i) = 1;
          return from_matrix(g, m);
        };
        for (long i = 0; i < d.r; ++i) t.push_back(even({std::size_t(2 * i), std::size_t(2 * i + 1)}));
        for (long j = 0; j < d.k; ++j) t.push_back(even({std::size_t(2 * d.r + j)}));
        break;
      }
      case Family::P: {
        const std::size_t n = fam.n;
        for (long i = 0; i < d.t(); ++i) {
          std::size_t a = 2 * static_cast<std::size_t>(i), b = a + 1;
          Matrix up(N, N), down(N, N);
          up(a, n + b) = up(b, n + a) = 1;
          down(n + a, b) = 1;
          down(n + b, a) = -1;
          t.push_back(g.bracket(from_matrix(g, up), from_matrix(g, down)));
        }
        break;
      }
      default: throw Error(ErrorKind::NotStandardForm, "unsupported family");
    }
  } else {
    // u₊: B = I has no rational isotropic pairs; use the rotation torus of so(n)
    const std::size_t n = fam.n;
    for (std::size_t i = 0; 2 * i + 1 < n; ++i) {
      Matrix m(N, N);
      m(2 * i, 2 * i + 1) = m(n + 2 * i, n + 2 * i + 1) = 1;
      m(2 * i + 1, 2 * i) = m(n + 2 * i + 1, n + 2 * i) = -1;
      t.push_back(from_matrix(g, m));
    }
  }
  Subspace ts = Subspace::span(g.dim(), t);
  if (ts.dim() != t.size()) throw Error(ErrorKind::NotToral, "t' generators are dependent");
  if (!bracket_image(g, u).contains(ts)) throw Error(ErrorKind::NotInBracketImage, "t' is not inside [u, g^c]");
  for (const auto& x : t)
    if (!is_toral(g, x)) throw Error(ErrorKind::NotToral, "t' element is not ad-semisimple");
  return ts;
}

Report product_structure_check(const SymmetryAlgebra& s, long r) {
  Report rep;
  rep.id = "product-structure";
  const LieSA& b = *s.base();
  const LieSA& gu = *s.gu.algebra;
  rep.dim("g_u", gu.sdim());
  rep.dim("g(u,k)", b.sdim());
  check_map(rep, "g_u", gu, b, s.gu_injection);
  Subspace img = image(s.gu_injection);

  bool ideal = is_ideal(b, img);
  rep.add("(i) ideal", ideal);
  if (!ideal) return rep;
  QuotientAlgebra qa = quotient_algebra(b, img);
  bool odd = qa.algebra.space().indices_of_parity(0).empty();
  bool abelian = true;
  for (std::size_t i = 0; i < qa.algebra.dim(); ++i) abelian = abelian && qa.algebra.ad(i).is_zero();
  rep.add("(ii) odd abelian quotient", odd && abelian && static_cast<long>(qa.algebra.dim()) == r,
          "quotient " + to_string(qa.algebra.sdim()) + ", expected rank " + std::to_string(r));

  // odd complement inside the centralizer of the image, preferring central elements
  auto bp = s.base();
  Subspace odd_part = parity_part(b.space(), 1);
  Subspace central = intersect(center(whole_algebra(bp)).span, odd_part);
  Subspace cent = intersect(centralizer(bp, rows(img)).span, odd_part);
  std::vector<Vector> cands = rows(central);
  for (auto& v : rows(cent)) cands.push_back(std::move(v));
  std::vector<Vector> W, images;
  for (const auto& v : cands) {
    images.push_back(qa.projection.apply(v));
    if (rank(Matrix::from_rows(qa.algebra.dim(), images)) < images.size()) {
      images.pop_back();
      continue;
    }
    W.push_back(v);
  }
  bool self = true;
  for (const auto& x : W)
    for (const auto& y : W) self = self && is_zero(b.bracket(x, y));
  rep.add("(iii) odd central complement", static_cast<long>(W.size()) == r && W.size() == qa.algebra.dim() && self,
          "complement dim " + std::to_string(W.size()));
  rep.add("dim g(u,k) = dim g_u + r", static_cast<long>(b.dim()) == static_cast<long>(gu.dim()) + r);
  return rep;
}

Report compare_toral(AlgebraPtr g, const OddElem& u, const Subspace& k, const Subspace& t) {
  Report rep;
  rep.id = "compare-toral";
  if (!k.contains(t)) throw Error(ErrorKind::NotToral, "t is not inside k");
  for (const auto& x : rows(t))
    if (!is_toral(*g, x)) throw Error(ErrorKind::NotToral, "t is not toral");
  for (const auto& x : rows(t))
    for (const auto& y : rows(t))
      if (!is_zero(g->bracket(x, y))) throw Error(ErrorKind::NotToral, "t is not abelian");
  SymmetryAlgebra sk = g_u_k(g, u, k), st = g_u_k(g, u, t);
  const std::size_t a = sk.base()->dim(), b = st.base()->dim();
  Matrix phi(b, a);
  for (std::size_t i = 0; i < a; ++i) phi.set_column(i, st.class_of(sk.lift(unit_vector(a, i))));
  rep.dim("g(u,k)", sk.base()->sdim());
  rep.dim("g(u,t)", st.base()->sdim());
  check_map(rep, "phi_u", *sk.base(), *st.base(), phi);
  rep.add("dimension gap", b >= a, std::to_string(b - std::min(a, b)));
  return rep;
}

SplitTilde split_tilde(AlgebraPtr gp, const OddElem& u, const SplitCertificate* cert) {
  const LieSA& g = *gp;
  require_same_algebra(g, *u.parent);
  auto odd = g.space().indices_of_parity(1), even = g.space().indices_of_parity(0);
  for (auto i : odd)
    for (auto j : odd)
      if (!is_zero(g.bracket(g.basis_vector(i), g.basis_vector(j))))
        throw Error(ErrorKind::NotSplit, "odd part is not abelian");
  for (auto i : even)
    if (sgn(u.coords[i]) != 0) throw Error(ErrorKind::NotOdd, "u has an even component");

  SplitTilde out;
  out.report.id = "split-tilde";
  SubalgebraAlgebra cu = as_algebra(centralizer(gp, {u.coords}));
  std::vector<Vector> ug0;
  for (auto i : even) ug0.push_back(cu.coords.coordinates_or_throw(g.bracket(u.coords, g.basis_vector(i)), ErrorKind::NotSplit));
  QuotientAlgebra qa = quotient_algebra(cu.algebra, Subspace::span(cu.algebra.dim(), ug0));
  out.tilde = std::make_shared<const LieSA>(qa.algebra);
  GuAlgebra gu = gu_algebra(gp, u);
  auto to_tilde = [&](std::span<const Scalar> x) {
    return qa.projection.apply(cu.coords.coordinates_or_throw(x, ErrorKind::QuotientFailure));
  };
  out.injection = Matrix(out.tilde->dim(), gu.algebra->dim());
  for (std::size_t i = 0; i < gu.algebra->dim(); ++i) out.injection.set_column(i, to_tilde(gu.reps.row_vector(i)));
  bool defined = true;
  for (const auto& v : rows(gu.adjoint.image)) defined = defined && is_zero(to_tilde(v));
  out.report.dim("g_u", gu.algebra->sdim());
  out.report.dim("tilde", out.tilde->sdim());
  out.report.add("well-defined", defined);
  out.report.add("homomorphism", is_homomorphism(*gu.algebra, *out.tilde, out.injection));
  if (cert) {
    const Rep& V = cert->module;
    require_same_algebra(g, *V.algebra);
    const std::size_t n = V.dim();
    std::vector<Vector> rho;
    for (const auto& m : V.action) rho.push_back(flatten(m));
    Subspace R = Subspace::span(n * n, rho);
    bool direct = R.dim() == g.dim() && intersect(R, cert->complement).dim() == 0 &&
                  R.dim() + cert->complement.dim() == n * n;
    bool stable = true;
    for (std::size_t i = 0; i < g.dim() && stable; ++i)
      for (const auto& w : rows(cert->complement)) {
        Matrix W(n, n);
        for (std::size_t r = 0; r < n; ++r) std::copy_n(w.begin() + static_cast<long>(r * n), n, W.row(r).begin());
        if (!cert->complement.contains(flatten(super_commutator(V.space, V.action[i], W)))) {
          stable = false;
          break;
        }
      }
    out.report.add("complement certificate", direct && stable);
    out.report.add("injective", rank(out.injection) == gu.algebra->dim());
  }
  return out;
}

}  // namespace dslab
