#include <algorithm>
#include <sstream>

#include "nf_internal.hpp"

namespace dslab {

namespace nf {

Matrix block(const Matrix& m, std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) {
  Matrix out(nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) out(i, j) = m(r0 + i, c0 + j);
  return out;
}

std::vector<Vector> rows_of(const Subspace& s) {
  std::vector<Vector> out;
  for (std::size_t i = 0; i < s.dim(); ++i) out.push_back(s.vector(i));
  return out;
}

void extend(std::vector<Vector>& vecs, const Subspace& s, std::size_t ambient) {
  Subspace cur = Subspace::span(ambient, vecs);
  for (std::size_t i = 0; i < s.dim(); ++i) {
    Vector v = s.vector(i);
    if (cur.contains(v)) continue;
    vecs.push_back(v);
    cur = Subspace::span(ambient, vecs);
  }
}

std::vector<Vector> independent_images(const std::vector<Vector>& cand, const Matrix& f) {
  std::vector<Vector> out, imgs;
  for (const auto& v : cand) {
    Vector w = f.apply(v);
    if (is_zero(w) || Subspace::span(f.rows(), imgs).contains(w)) continue;
    out.push_back(v);
    imgs.push_back(std::move(w));
  }
  return out;
}

bool rational_square(const Scalar& q, Scalar* root) {
  if (sgn(q) < 0) return false;
  if (!mpz_perfect_square_p(q.get_num_mpz_t()) || !mpz_perfect_square_p(q.get_den_mpz_t())) return false;
  if (root) {
    mpz_class a, b;
    mpz_sqrt(a.get_mpz_t(), q.get_num_mpz_t());
    mpz_sqrt(b.get_mpz_t(), q.get_den_mpz_t());
    *root = Scalar(a) / Scalar(b);
  }
  return true;
}

std::vector<std::pair<Vector, Scalar>> diagonalize(const Form& form, std::vector<Vector> vecs) {
  std::vector<std::pair<Vector, Scalar>> out;
  while (!vecs.empty()) {
    std::size_t piv = vecs.size();
    for (std::size_t i = 0; i < vecs.size() && piv == vecs.size(); ++i)
      if (sgn(form(vecs[i], vecs[i])) != 0) piv = i;
    if (piv == vecs.size()) {
      for (std::size_t i = 0; i < vecs.size() && piv == vecs.size(); ++i)
        for (std::size_t j = i + 1; j < vecs.size(); ++j)
          if (sgn(form(vecs[i], vecs[j])) != 0) {
            vecs[i] = add(vecs[i], vecs[j]);
            piv = i;
            break;
          }
    }
    if (piv == vecs.size()) break;  // the rest is radical
    Vector v = vecs[piv];
    Scalar a = form(v, v);
    vecs.erase(vecs.begin() + static_cast<long>(piv));
    for (auto& w : vecs) axpy(w, -form(w, v) / a, v);
    out.emplace_back(std::move(v), a);
  }
  for (auto& w : vecs) out.emplace_back(std::move(w), Scalar(0));
  return out;
}

}  // namespace nf

using namespace nf;

namespace {

Matrix natural_of(const LieSA& g, std::span<const Scalar> u) {
  if (!g.realization()) throw Error(ErrorKind::InvalidParams, "normal forms need a matrix realization");
  return g.realization()->element(u);
}

void require_family(const LieSA& g) {
  switch (g.family().tag) {
    case Family::GL:
    case Family::SL:
    case Family::Q:
    case Family::P: return;
    default: throw Error(ErrorKind::InvalidParams, std::string("no normal form for family ") + to_string(g.family().tag));
  }
}

std::size_t even_size(const LieSA& g) { return g.realization()->natural.sdim().even; }

Matrix minus_scalar(Matrix m, const Scalar& l) {
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, i) -= l;
  return m;
}

std::vector<Scalar> eigenvalues(const Matrix& m) {
  if (m.rows() == 0) return {};
  auto ev = rational_eigenvalues(m);
  std::sort(ev.begin(), ev.end());
  return ev;
}

// ---- gl / sl ----

RankData gl_rank(const Matrix& U, std::size_t m) {
  const std::size_t n = U.rows() - m;
  Matrix B = block(U, 0, m, m, n), C = block(U, m, 0, n, m);
  Matrix BC = B * C, CB = C * B;
  RankData d;
  for (const auto& l : eigenvalues(BC)) {
    if (sgn(l) == 0) continue;
    std::size_t mult = m - rank(minus_scalar(BC, l));
    for (std::size_t i = 0; i < mult; ++i) d.coefficients.push_back(l);
  }
  d.k = static_cast<long>(d.coefficients.size());
  auto e0 = rows_of(kernel(BC)), o0 = rows_of(kernel(CB));
  long pos = static_cast<long>(independent_images(o0, B).size());
  long neg = static_cast<long>(independent_images(e0, C).size());
  d.r = d.k + pos + neg;
  d.s = neg;
  return d;
}

Matrix gl_conjugator(const Matrix& U, std::size_t m, const RankData& d) {
  const std::size_t n = U.rows() - m;
  Matrix B = block(U, 0, m, m, n), C = block(U, m, 0, n, m);
  Matrix BC = B * C, CB = C * B;
  std::vector<Vector> ev, od;
  std::vector<Scalar> seen;
  for (const auto& l : d.coefficients) {
    if (std::find(seen.begin(), seen.end(), l) != seen.end()) continue;
    seen.push_back(l);
    for (auto& phi : rows_of(kernel(minus_scalar(CB, l)))) {
      ev.push_back(B.apply(phi));
      od.push_back(std::move(phi));
    }
  }
  std::vector<Vector> pos_e;
  for (auto& phi : independent_images(rows_of(kernel(CB)), B)) {
    pos_e.push_back(B.apply(phi));
    ev.push_back(pos_e.back());
    od.push_back(std::move(phi));
  }
  std::vector<Vector> neg_o;
  for (auto& x : independent_images(rows_of(kernel(BC)), C)) {
    neg_o.push_back(C.apply(x));
    od.push_back(neg_o.back());
    ev.push_back(std::move(x));
  }
  extend(pos_e, kernel(C), m);
  for (std::size_t i = static_cast<std::size_t>(d.r - d.k - d.s); i < pos_e.size(); ++i) ev.push_back(pos_e[i]);
  extend(neg_o, kernel(B), n);
  for (std::size_t i = static_cast<std::size_t>(d.s); i < neg_o.size(); ++i) od.push_back(neg_o[i]);
  if (ev.size() != m || od.size() != n) throw Error(ErrorKind::NotHomogeneous, "normal form basis incomplete");
  Matrix Q = direct_sum(Matrix::from_columns(m, ev), Matrix::from_columns(n, od));
  return inverse(Q);
}

Matrix gl_standard(std::size_t m, std::size_t n, const RankData& d) {
  Matrix U(m + n, m + n);
  for (long i = 0; i < d.r; ++i) {
    std::size_t a = static_cast<std::size_t>(i);
    if (i < d.k) {
      U(a, m + a) = 1;
      U(m + a, a) = d.coefficients[a];
    } else if (i < d.r - d.s) {
      U(a, m + a) = 1;
    } else {
      U(m + a, a) = 1;
    }
  }
  return U;
}

// ---- q ----

RankData q_rank(const Matrix& U, std::size_t n) {
  Matrix B = block(U, 0, n, n, n);
  RankData d;
  d.family = Family::Q;
  for (const auto& l : eigenvalues(B)) {
    if (sgn(l) == 0) continue;
    std::size_t mult = n - rank(minus_scalar(B, l));
    for (std::size_t i = 0; i < mult; ++i) d.coefficients.push_back(l);
  }
  d.k = static_cast<long>(d.coefficients.size());
  const long rb = static_cast<long>(rank(B)), rb2 = static_cast<long>(rank(B * B));
  if (rb2 != d.k) throw Error(ErrorKind::NotHomogeneous, "u^2 is not semisimple");
  d.r = rb - rb2;
  return d;
}

Matrix q_conjugator(const Matrix& U, std::size_t n, const RankData& d) {
  Matrix B = block(U, 0, n, n, n);
  std::vector<Vector> cols, images;
  for (auto& y : independent_images(rows_of(kernel(B * B)), B)) {
    images.push_back(B.apply(y));
    cols.push_back(images.back());
    cols.push_back(std::move(y));
  }
  std::vector<Scalar> seen;
  for (const auto& l : d.coefficients) {
    if (std::find(seen.begin(), seen.end(), l) != seen.end()) continue;
    seen.push_back(l);
    for (auto& v : rows_of(kernel(minus_scalar(B, l)))) cols.push_back(std::move(v));
  }
  const std::size_t paired = images.size();
  extend(images, kernel(B), n);
  for (std::size_t i = paired; i < images.size(); ++i) cols.push_back(images[i]);
  if (cols.size() != n) throw Error(ErrorKind::NotHomogeneous, "normal form basis incomplete");
  Matrix A = inverse(Matrix::from_columns(n, cols));
  return direct_sum(A, A);
}

Matrix q_standard(std::size_t n, const RankData& d) {
  Matrix B(n, n);
  for (long i = 0; i < d.r; ++i) B(2 * i, 2 * i + 1) = 1;
  for (long j = 0; j < d.k; ++j) B(2 * d.r + j, 2 * d.r + j) = d.coefficients[j];
  Matrix U(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) U(i, n + j) = U(n + i, j) = B(i, j);
  return U;
}

void check_odd(const LieSA& g, std::span<const Scalar> u) {
  if (u.size() != g.dim()) throw Error(ErrorKind::DimensionMismatch, "element has wrong length");
  for (std::size_t i = 0; i < u.size(); ++i)
    if (sgn(u[i]) != 0 && g.parity(i) == 0) throw Error(ErrorKind::NotOdd, "element has an even component");
}

Matrix standard_matrix(const LieSA& g, const RankData& d) {
  const std::size_t N = g.realization()->natural.dim(), m = even_size(g);
  switch (g.family().tag) {
    case Family::GL:
    case Family::SL: return gl_standard(m, N - m, d);
    case Family::Q: return q_standard(m, d);
    default: {
      Matrix B, C;
      p_standard_blocks(m, d, B, C);
      Matrix U(N, N);
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
          U(i, m + j) = B(i, j);
          U(m + i, j) = C(i, j);
        }
      return U;
    }
  }
}

}  // namespace

Scalar RankData::rank() const {
  switch (family) {
    case Family::Q: return Scalar(r) + Scalar(k) / 2;
    case Family::P: return t();
    default: return r;
  }
}

std::string to_string(const RankData& d) {
  std::ostringstream os;
  os << to_string(d.family) << " r=" << d.r;
  if (d.family == Family::GL || d.family == Family::SL) os << " s=" << d.s;
  if (d.family == Family::Q) os << " k=" << d.k;
  if (d.family == Family::P) os << " s=" << d.s << " d=" << d.d;
  os << " c=[";
  for (std::size_t i = 0; i < d.coefficients.size(); ++i) os << (i ? "," : "") << to_string(d.coefficients[i]);
  os << "]";
  return os.str();
}

Vector square(const LieSA& g, std::span<const Scalar> u) {
  check_odd(g, u);
  return g.bracket(u, u);
}

bool is_homogeneous(const LieSA& g, std::span<const Scalar> u) {
  Vector c = square(g, u);
  return minimal_polynomial(g.ad(c)).squarefree;
}

OddElem make_odd(AlgebraPtr g, Vector u) {
  OddElem e;
  e.c = square(*g, u);
  e.homogeneous = minimal_polynomial(g->ad(e.c)).squarefree;
  e.coords = std::move(u);
  e.parent = std::move(g);
  return e;
}

RankData rank_of(const LieSA& g, std::span<const Scalar> u) {
  require_family(g);
  if (!is_homogeneous(g, u)) throw Error(ErrorKind::NotHomogeneous, "[u,u] is not semisimple");
  Matrix U = natural_of(g, u);
  const std::size_t m = even_size(g);
  RankData d;
  switch (g.family().tag) {
    case Family::GL:
    case Family::SL: d = gl_rank(U, m); break;
    case Family::Q: d = q_rank(U, m); break;
    default: d = p_rank(block(U, 0, m, m, m), block(U, m, 0, m, m)); break;
  }
  d.family = g.family().tag;
  return d;
}

RankData canonical(const LieSA& g, RankData d) {
  require_family(g);
  const std::size_t N = g.realization()->natural.dim(), m = even_size(g), n = N - m;
  d.family = g.family().tag;
  auto out_of_range = [&](const char* why) { throw Error(ErrorKind::RankOutOfRange, std::string(why) + ": " + to_string(d)); };
  if (d.r < 0 || d.s < 0 || d.k < 0 || d.d < 0 || d.d > 1) out_of_range("negative rank data");
  switch (d.family) {
    case Family::GL:
    case Family::SL: {
      std::erase_if(d.coefficients, [](const Scalar& c) { return sgn(c) == 0; });
      std::sort(d.coefficients.begin(), d.coefficients.end());
      d.k = static_cast<long>(d.coefficients.size());
      d.d = 0;
      if (d.r > static_cast<long>(std::min(m, n)) || d.k + d.s > d.r) out_of_range("rank does not fit");
      break;
    }
    case Family::Q: {
      std::erase_if(d.coefficients, [](const Scalar& c) { return sgn(c) == 0; });
      std::sort(d.coefficients.begin(), d.coefficients.end());
      d.k = static_cast<long>(d.coefficients.size());
      d.s = d.d = 0;
      if (2 * d.r + d.k > static_cast<long>(m)) out_of_range("2r + k exceeds n");
      break;
    }
    default: {
      const long nn = static_cast<long>(m);
      if (static_cast<long>(d.coefficients.size()) != d.s) out_of_range("one coefficient per C-pair");
      if (2 * d.r + d.d > nn || 2 * d.s > nn || (d.d && (2 * d.r >= nn || 2 * d.s >= nn))) out_of_range("pairs do not fit");
      std::vector<Scalar> shared;
      long extra = 0;
      for (long j = 0; j < d.s; ++j) {
        Scalar c = abs(d.coefficients[j]);
        if (j < d.r) {
          if (sgn(c) != 0) shared.push_back(c);
        } else if (sgn(c) != 0) {
          ++extra;
        } else {
          out_of_range("zero coefficient on a C-only pair");
        }
      }
      std::sort(shared.begin(), shared.end());
      d.coefficients = shared;
      if (extra > 0) {
        d.coefficients.resize(static_cast<std::size_t>(d.r), Scalar(0));
        d.coefficients.resize(static_cast<std::size_t>(d.r + extra), Scalar(1));
      }
      d.s = static_cast<long>(d.coefficients.size());
      d.k = 0;
      break;
    }
  }
  return d;
}

Vector standard_u(const LieSA& g, const RankData& data) {
  canonical(g, data);  // range checks; the literal element follows the data as given
  RankData d = data;
  d.family = g.family().tag;
  if (d.family != Family::P) d.k = static_cast<long>(d.coefficients.size());
  if (d.family != Family::P && std::any_of(d.coefficients.begin(), d.coefficients.end(), [](const Scalar& c) { return sgn(c) == 0; }))
    throw Error(ErrorKind::RankOutOfRange, "zero tail coefficient");
  return g.realization()->coordinates(standard_matrix(g, d));
}

OddElem standard_elem(AlgebraPtr g, const RankData& data) {
  Vector u = standard_u(*g, data);
  OddElem e = make_odd(g, std::move(u));
  e.rank = canonical(*g, data);
  return e;
}

Normalized normalize(AlgebraPtr gp, std::span<const Scalar> u) {
  const LieSA& g = *gp;
  RankData d = rank_of(g, u);
  Matrix U = natural_of(g, u);
  const std::size_t m = even_size(g);
  Matrix P;
  switch (g.family().tag) {
    case Family::GL:
    case Family::SL: P = gl_conjugator(U, m, d); break;
    case Family::Q: P = q_conjugator(U, m, d); break;
    default: {
      Matrix A = p_reduce(block(U, 0, m, m, m), block(U, m, 0, m, m), d);
      P = direct_sum(A, inverse(A).transpose());
      break;
    }
  }
  Matrix S = standard_matrix(g, d);
  if (!(P * U * inverse(P) == S)) throw Error(ErrorKind::NotStandardForm, "conjugation did not reach the standard element");
  OddElem e = make_odd(gp, g.realization()->coordinates(S));
  e.rank = d;
  return {std::move(P), std::move(e)};
}

Vector p_plus(const LieSA& p) {
  if (p.family().tag != Family::P) throw Error(ErrorKind::InvalidParams, "u+ lives in p(n)");
  const std::size_t n = p.family().m;
  Matrix U(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) U(i, n + i) = 1;
  return p.realization()->coordinates(U);
}

Vector p_minus(const LieSA& p) {
  if (p.family().tag != Family::P) throw Error(ErrorKind::InvalidParams, "u- lives in p(n)");
  const std::size_t n = p.family().m;
  if (n % 2) throw Error(ErrorKind::InvalidParams, "u- needs even n");
  Matrix U(2 * n, 2 * n);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    U(n + i, i + 1) = 1;
    U(n + i + 1, i) = -1;
  }
  return p.realization()->coordinates(U);
}

Vector conjugate(const LieSA& g, const Matrix& P, std::span<const Scalar> x) {
  const auto& R = *g.realization();
  return R.coordinates(P * R.element(x) * inverse(P));
}

}  // namespace dslab
