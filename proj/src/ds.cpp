#include "dslab/ds.hpp"

namespace dslab {

namespace {

std::string label_for(const SuperSpace& s, std::span<const Scalar> v, const std::string& prefix, std::size_t i) {
  std::size_t nz = 0, at = 0;
  for (std::size_t k = 0; k < v.size(); ++k)
    if (sgn(v[k]) != 0) {
      ++nz;
      at = k;
    }
  if (nz == 1 && v[at] == 1) return "[" + s.labels()[at] + "]";
  return prefix + std::to_string(i + 1);
}

// Span of the standard basis vectors of the given parity.
Subspace parity_part(const SuperSpace& s, int p) {
  std::vector<Vector> v;
  for (auto i : s.indices_of_parity(p)) v.push_back(unit_vector(s.dim(), i));
  return Subspace::span(s.dim(), v);
}

Vector kron_vec(std::span<const Scalar> a, std::span<const Scalar> b) {
  Vector out(a.size() * b.size(), Scalar(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    if (sgn(a[i]) != 0)
      for (std::size_t j = 0; j < b.size(); ++j) out[i * b.size() + j] = a[i] * b[j];
  return out;
}

// Deterministic shift inside a subspace, used for second representative choices.
Vector shift(std::span<const Scalar> v, const Subspace& by, std::size_t salt) {
  Vector out(v.begin(), v.end());
  for (std::size_t j = 0; j < by.dim(); ++j) axpy(out, Scalar(static_cast<long>((salt + 2 * j) % 5) + 1), by.vector(j));
  return out;
}

}  // namespace

DSResult ds(const Rep& r, const OddElem& u) {
  require_same_algebra(*r.algebra, *u.parent);
  if (!u.homogeneous) throw Error(ErrorKind::NotHomogeneous, "[u,u] is not semisimple");
  const std::size_t n = r.dim();
  DSResult d{r, u};
  d.invariant = Subspace::whole(n);
  if (!is_zero(u.c)) {
    Matrix rc = r.act(u.c);
    if (!minimal_polynomial(rc).squarefree) throw Error(ErrorKind::NotSemisimpleAction, "c does not act semisimply");
    d.invariant = kernel(rc);
  }
  Matrix U = r.act(u.coords);
  d.kernel = intersect(d.invariant, kernel(U));
  std::vector<Vector> imgs;
  for (std::size_t i = 0; i < d.invariant.dim(); ++i) imgs.push_back(U.apply(d.invariant.vector(i)));
  d.image = Subspace::span(n, imgs);
  d.quotient = quotient(d.kernel, d.image);
  std::vector<std::string> labels;
  std::vector<int> par;
  for (std::size_t i = 0; i < d.quotient.dim(); ++i) {
    Vector v = d.quotient.reps.row_vector(i);
    auto p = vector_parity(r.space, v);
    if (!p || *p < 0) throw Error(ErrorKind::NotGraded, "inhomogeneous cohomology representative");
    par.push_back(*p);
    labels.push_back(label_for(r.space, v, "h", i));
  }
  d.cohomology = SuperSpace(labels, par);
  return d;
}

Matrix ds_map(const DSResult& from, const DSResult& to, const Matrix& f) {
  Matrix out(to.dim(), from.dim());
  for (std::size_t j = 0; j < from.dim(); ++j) out.set_column(j, to.project(f.apply(from.quotient.reps.row_vector(j))));
  return out;
}

GuAlgebra gu_algebra(AlgebraPtr gp, const OddElem& u) {
  const LieSA& g = *gp;
  DSResult D = ds(adjoint_rep(gp), u);
  const Matrix& X = D.representatives();
  const std::size_t d = D.dim();
  auto structure = [&](const std::vector<Vector>& reps) {
    std::vector<Matrix> ad(d, Matrix(d, d));
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) ad[i].set_column(j, D.project(g.bracket(reps[i], reps[j])));
    return ad;
  };
  std::vector<Vector> first, second;
  for (std::size_t i = 0; i < d; ++i) {
    first.push_back(X.row_vector(i));
    second.push_back(shift(first.back(), D.image, i));
  }
  std::vector<Matrix> ad = structure(first);
  if (structure(second) != ad)
    throw Error(ErrorKind::RepresentativeInconsistency, "bracket on g_u depends on representatives");

  std::vector<std::string> labels;
  for (std::size_t i = 0; i < d; ++i) labels.push_back(label_for(g.space(), first[i], "x", i));
  for (auto& l : labels)
    if (l.front() == '[') l = l.substr(1, l.size() - 2);
  auto alg = std::make_shared<LieSA>(SuperSpace(labels, std::vector<int>(D.cohomology.parities())), std::move(ad));
  // Cartan elements of g commuting with u and c descend to g_u
  std::vector<Vector> cartan;
  std::vector<Vector> seen;
  Vector U = u.coords;
  for (const auto& h : g.cartan()) {
    if (!is_zero(g.bracket(h, U)) || !is_zero(g.bracket(h, u.c))) continue;
    Vector cls = D.project(h);
    if (is_zero(cls)) continue;
    seen.push_back(cls);
    if (rank(Matrix::from_rows(d, seen)) < seen.size()) {
      seen.pop_back();
      continue;
    }
    cartan.push_back(cls);
  }
  if (!cartan.empty()) alg->set_cartan(std::move(cartan));
  return {std::move(alg), X, std::move(D)};
}

Rep induced_action(const DSResult& d, const GuAlgebra& gu) {
  require_same_algebra(*d.source.algebra, *gu.adjoint.source.algebra);
  if (d.u.coords != gu.adjoint.u.coords) throw Error(ErrorKind::AlgebraMismatch, "cohomology and g_u use different u");
  const std::size_t k = gu.algebra->dim(), n = d.dim();
  auto act = [&](bool shifted) {
    std::vector<Matrix> out;
    for (std::size_t i = 0; i < k; ++i) {
      Vector x = gu.reps.row_vector(i);
      if (shifted) x = shift(x, gu.adjoint.image, i);
      Matrix M = d.source.act(x);
      Matrix m(n, n);
      for (std::size_t j = 0; j < n; ++j) {
        Vector v = d.quotient.reps.row_vector(j);
        if (shifted) v = shift(v, d.image, i + j);
        m.set_column(j, d.project(M.apply(v)));
      }
      out.push_back(std::move(m));
    }
    return out;
  };
  auto mats = act(false);
  if (act(true) != mats) throw Error(ErrorKind::RepresentativeInconsistency, "induced action depends on representatives");
  return with_weights(Rep{gu.algebra, d.cohomology, std::move(mats)});
}

Report tensor_iso_check(const Rep& v, const Rep& w, const OddElem& u) {
  Report rep;
  rep.id = "tensor-iso";
  DSResult dv = ds(v, u), dw = ds(w, u), dt = ds(tensor_rep(v, w), u);
  rep.dim("V_u", dv.cohomology.sdim());
  rep.dim("W_u", dw.cohomology.sdim());
  rep.dim("(V⊗W)_u", dt.cohomology.sdim());
  const std::size_t a = dv.dim(), b = dw.dim();
  Matrix map(dt.dim(), a * b);
  bool defined = true;
  try {
    for (std::size_t i = 0; i < a; ++i)
      for (std::size_t j = 0; j < b; ++j)
        map.set_column(i * b + j, dt.project(kron_vec(dv.quotient.reps.row_vector(i), dw.quotient.reps.row_vector(j))));
    // shifting either factor by a coboundary does not move the class
    for (std::size_t s = 0; s < dv.image.dim(); ++s)
      for (std::size_t j = 0; j < b; ++j)
        if (!is_zero(dt.project(kron_vec(dv.image.vector(s), dw.quotient.reps.row_vector(j))))) defined = false;
    for (std::size_t i = 0; i < a; ++i)
      for (std::size_t s = 0; s < dw.image.dim(); ++s)
        if (!is_zero(dt.project(kron_vec(dv.quotient.reps.row_vector(i), dw.image.vector(s))))) defined = false;
  } catch (const Error& e) {
    rep.add("cocycles", false, e.what());
    return rep;
  }
  rep.add("well-defined", defined);
  SuperSpace prod = tensor(dv.cohomology, dw.cohomology);
  auto p = map_parity(prod, dt.cohomology, map);
  rep.add("even", p.has_value() && *p <= 0);
  rep.add("bijective", map.rows() == map.cols() && rank(map) == map.rows(),
          std::to_string(map.rows()) + "x" + std::to_string(map.cols()) + " rank " + std::to_string(rank(map)));
  return rep;
}

Report les_check(const Rep& v, const Subspace& sub, const OddElem& u) {
  Report rep;
  rep.id = "les";
  SubRep sr = sub_rep(v, sub);
  QuotientRep qr = quotient_rep(v, sub);
  DSResult d0 = ds(sr.rep, u), d1 = ds(v, u), d2 = ds(qr.rep, u);
  rep.dim("S_u", d0.cohomology.sdim());
  rep.dim("V_u", d1.cohomology.sdim());
  rep.dim("(V/S)_u", d2.cohomology.sdim());

  Matrix inc = sr.basis.transpose();
  Matrix f0 = ds_map(d0, d1, inc);
  Matrix f1 = ds_map(d1, d2, qr.projection);
  // zig-zag: lift inside M^c, apply u, land in S
  Matrix U = v.act(u.coords);
  std::vector<Vector> mc;
  for (std::size_t i = 0; i < d1.invariant.dim(); ++i) mc.push_back(d1.invariant.vector(i));
  Matrix lift_sys = qr.projection * Matrix::from_columns(v.dim(), mc);
  Matrix f2(d0.dim(), d2.dim());
  for (std::size_t j = 0; j < d2.dim(); ++j) {
    auto alpha = solve(lift_sys, d2.quotient.reps.row_vector(j));
    if (!alpha) {
      rep.add("lift", false, "class " + std::to_string(j) + " has no c-invariant lift");
      return rep;
    }
    Vector l = zero_vector(v.dim());
    for (std::size_t i = 0; i < mc.size(); ++i) axpy(l, (*alpha)[i], mc[i]);
    Vector x = sr.coords.coordinates_or_throw(U.apply(l), ErrorKind::NotASubmodule);
    f2.set_column(j, d0.project(x));
  }
  rep.add("connecting map odd", [&] {
    auto p = map_parity(d2.cohomology, d0.cohomology, f2);
    return p.has_value() && *p != 0;
  }());

  const DSResult* sp[3] = {&d0, &d1, &d2};
  const Matrix* out[3] = {&f0, &f1, &f2};
  const Matrix* in[3] = {&f2, &f0, &f1};
  const char* names[3] = {"S_u", "V_u", "(V/S)_u"};
  for (int pos = 0; pos < 3; ++pos) {
    const SuperSpace& here = sp[pos]->cohomology;
    const SuperSpace& prev = sp[(pos + 2) % 3]->cohomology;
    for (int p = 0; p < 2; ++p) {
      // δ flips parity, so the incoming part at S_u has the opposite parity
      int q = pos == 0 ? 1 - p : p;
      Subspace ker = intersect(kernel(*out[pos]), parity_part(here, p));
      auto idx = prev.indices_of_parity(q);
      Subspace img = idx.empty() ? Subspace(here.dim()) : image(in[pos]->select_columns(idx));
      rep.add(std::string("exact at ") + names[pos] + (p ? " odd" : " even"), ker == img,
              "ker " + std::to_string(ker.dim()) + " im " + std::to_string(img.dim()));
    }
  }
  return rep;
}

Report multiplicity_pairing_check(const DSResult& d, const GuAlgebra& gu) {
  Report rep;
  rep.id = "multiplicity-pairing";
  rep.dim("DS", d.cohomology.sdim());
  Rep act = induced_action(d, gu);
  std::vector<std::pair<std::string, Subspace>> blocks = {{"", Subspace::whole(d.dim())}};
  for (const auto& h : gu.algebra->cartan()) {
    Matrix H = act.act(h);
    std::vector<std::pair<std::string, Subspace>> next;
    for (auto& [w, sp] : blocks) {
      // eigenvalues of H on the block
      std::vector<Vector> rows;
      for (std::size_t i = 0; i < sp.dim(); ++i) rows.push_back(sp.vector(i));
      if (rows.empty()) continue;
      CoordinateMap cm(Matrix::from_rows(d.dim(), rows));
      Matrix local(rows.size(), rows.size());
      for (std::size_t i = 0; i < rows.size(); ++i)
        local.set_column(i, cm.coordinates_or_throw(H.apply(rows[i]), ErrorKind::NotDiagonal));
      if (!minimal_polynomial(local).squarefree) {
        rep.add("cartan semisimple", false, w);
        return rep;
      }
      for (const auto& l : rational_eigenvalues(local)) {
        Matrix shifted = H;
        for (std::size_t i = 0; i < shifted.rows(); ++i) shifted(i, i) -= l;
        next.emplace_back(w + (w.empty() ? "" : ",") + to_string(l), intersect(sp, kernel(shifted)));
      }
    }
    blocks = std::move(next);
  }
  for (const auto& [w, sp] : blocks) {
    auto e = intersect(sp, parity_part(d.cohomology, 0)).dim(), o = intersect(sp, parity_part(d.cohomology, 1)).dim();
    rep.add("weight (" + w + ")", e == o, std::to_string(e) + "|" + std::to_string(o));
  }
  rep.add("sdim zero", d.cohomology.sdim().signed_dim() == 0);
  return rep;
}

}  // namespace dslab
