#include "dslab/linalg.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace dslab {

Reduced reduce(const Matrix& input) {
  Matrix m = input;
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && sgn(m(p, c)) == 0) ++p;
    if (p == rows) continue;
    if (p != r)
      for (std::size_t k = 0; k < cols; ++k) std::swap(m(p, k), m(r, k));
    Scalar inv = 1 / m(r, c);
    for (std::size_t k = c; k < cols; ++k)
      if (sgn(m(r, k)) != 0) m(r, k) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || sgn(m(i, c)) == 0) continue;
      Scalar f = m(i, c);
      for (std::size_t k = c; k < cols; ++k)
        if (sgn(m(r, k)) != 0) m(i, k) -= f * m(r, k);
    }
    pivots.push_back(c);
    ++r;
  }
  Reduced out;
  out.rref = Matrix(r, cols);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t k = 0; k < cols; ++k) out.rref(i, k) = m(i, k);
  out.pivots = std::move(pivots);
  return out;
}

std::size_t rank(const Matrix& m) { return reduce(m).rank(); }

Subspace::Subspace(std::size_t ambient) : ambient_(ambient), basis_(0, ambient) {}

Subspace Subspace::span_rows(const Matrix& rows) {
  Subspace s(rows.cols());
  auto red = reduce(rows);
  s.basis_ = std::move(red.rref);
  s.pivots_ = std::move(red.pivots);
  return s;
}

Subspace Subspace::span(std::size_t ambient, const std::vector<Vector>& vecs) {
  return span_rows(Matrix::from_rows(ambient, vecs));
}

Subspace Subspace::whole(std::size_t ambient) { return span_rows(Matrix::identity(ambient)); }

Vector Subspace::reduce_vector(std::span<const Scalar> v) const {
  if (v.size() != ambient_) throw Error(ErrorKind::DimensionMismatch, "vector length vs subspace ambient");
  Vector out(v.begin(), v.end());
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    Scalar c = out[pivots_[i]];
    if (sgn(c) != 0) axpy(out, -c, basis_.row(i));
  }
  return out;
}

std::optional<Vector> Subspace::coordinates(std::span<const Scalar> v) const {
  if (v.size() != ambient_) throw Error(ErrorKind::DimensionMismatch, "vector length vs subspace ambient");
  Vector c(pivots_.size());
  for (std::size_t i = 0; i < pivots_.size(); ++i) c[i] = v[pivots_[i]];
  if (!dslab::is_zero(std::span<const Scalar>(reduce_vector(v)))) return std::nullopt;
  return c;
}

Vector Subspace::coordinates_or_throw(std::span<const Scalar> v, ErrorKind kind) const {
  auto c = coordinates(v);
  if (!c) throw Error(kind, "vector not in subspace");
  return *c;
}

bool Subspace::contains(std::span<const Scalar> v) const {
  return dslab::is_zero(std::span<const Scalar>(reduce_vector(v)));
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) return false;
  for (std::size_t i = 0; i < other.dim(); ++i)
    if (!contains(other.basis_.row(i))) return false;
  return true;
}

Subspace kernel(const Matrix& m) {
  auto red = reduce(m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : red.pivots) is_pivot[p] = true;
  std::vector<Vector> vecs;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vector x(n, Scalar(0));
    x[f] = 1;
    for (std::size_t i = 0; i < red.pivots.size(); ++i) x[red.pivots[i]] = -red.rref(i, f);
    vecs.push_back(std::move(x));
  }
  return Subspace::span(n, vecs);
}

Subspace image(const Matrix& m) { return Subspace::span_columns(m); }

Subspace sum(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient()) throw Error(ErrorKind::DimensionMismatch, "subspace sum");
  return Subspace::span_rows(vstack(a.basis(), b.basis()));
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient()) throw Error(ErrorKind::DimensionMismatch, "subspace intersection");
  const std::size_t n = a.ambient(), p = a.dim(), q = b.dim();
  if (p == 0 || q == 0) return Subspace(n);
  Matrix sys(n, p + q);
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t k = 0; k < n; ++k) sys(k, i) = a.basis()(i, k);
  for (std::size_t j = 0; j < q; ++j)
    for (std::size_t k = 0; k < n; ++k) sys(k, p + j) = -b.basis()(j, k);
  auto ker = kernel(sys);
  std::vector<Vector> vecs;
  for (std::size_t r = 0; r < ker.dim(); ++r) {
    Vector v(n, Scalar(0));
    for (std::size_t i = 0; i < p; ++i) axpy(v, ker.basis()(r, i), a.basis().row(i));
    vecs.push_back(std::move(v));
  }
  return Subspace::span(n, vecs);
}

std::vector<std::size_t> free_columns(const Subspace& s) {
  std::vector<bool> is_pivot(s.ambient(), false);
  for (auto p : s.pivots()) is_pivot[p] = true;
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < s.ambient(); ++i)
    if (!is_pivot[i]) out.push_back(i);
  return out;
}

Quotient quotient(const Subspace& whole, const Subspace& sub) {
  if (!whole.contains(sub)) throw Error(ErrorKind::QuotientFailure, "subspace not contained in the whole space");
  Quotient q;
  q.whole = whole;
  q.sub = sub;
  std::vector<Vector> coords;
  for (std::size_t i = 0; i < sub.dim(); ++i) coords.push_back(*whole.coordinates(sub.basis().row(i)));
  q.sub_coords = Subspace::span(whole.dim(), coords);
  q.free = free_columns(q.sub_coords);
  q.reps = Matrix(q.free.size(), whole.ambient());
  for (std::size_t i = 0; i < q.free.size(); ++i)
    for (std::size_t k = 0; k < whole.ambient(); ++k) q.reps(i, k) = whole.basis()(q.free[i], k);
  return q;
}

Vector Quotient::project(std::span<const Scalar> w) const {
  auto c = whole.coordinates(w);
  if (!c) throw Error(ErrorKind::QuotientFailure, "vector outside the quotiented space");
  Vector r = sub_coords.reduce_vector(*c);
  Vector out(free.size());
  for (std::size_t i = 0; i < free.size(); ++i) out[i] = r[free[i]];
  return out;
}

CoordinateMap::CoordinateMap(const Matrix& rows) : rows_(rows) {
  const std::size_t d = rows.rows();
  auto red = reduce(hstack(rows, Matrix::identity(d)));
  std::size_t r = 0;
  while (r < red.rank() && red.pivots[r] < rows.cols()) ++r;
  if (r != d) throw Error(ErrorKind::DimensionMismatch, "coordinate rows are linearly dependent");
  Matrix basis(d, rows.cols());
  transform_ = Matrix(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t k = 0; k < rows.cols(); ++k) basis(i, k) = red.rref(i, k);
    for (std::size_t k = 0; k < d; ++k) transform_(i, k) = red.rref(i, rows.cols() + k);
  }
  span_ = Subspace::span_rows(basis);
}

std::optional<Vector> CoordinateMap::coordinates(std::span<const Scalar> v) const {
  auto c = span_.coordinates(v);
  if (!c) return std::nullopt;
  Vector out(size(), Scalar(0));
  for (std::size_t i = 0; i < c->size(); ++i) axpy(out, (*c)[i], transform_.row(i));
  return out;
}

Vector CoordinateMap::coordinates_or_throw(std::span<const Scalar> v, ErrorKind kind) const {
  auto c = coordinates(v);
  if (!c) throw Error(kind, "vector outside the coordinate span");
  return *c;
}

Vector CoordinateMap::combine(std::span<const Scalar> c) const {
  Vector out(ambient(), Scalar(0));
  for (std::size_t i = 0; i < c.size(); ++i) axpy(out, c[i], rows_.row(i));
  return out;
}

std::optional<Matrix> try_inverse(const Matrix& m) {
  if (!m.is_square()) throw Error(ErrorKind::DimensionMismatch, "inverse of non-square matrix");
  const std::size_t n = m.rows();
  auto red = reduce(hstack(m, Matrix::identity(n)));
  if (red.rank() < n || (n > 0 && red.pivots[n - 1] != n - 1)) return std::nullopt;
  return red.rref.columns(n, n);
}

Matrix inverse(const Matrix& m) {
  auto inv = try_inverse(m);
  if (!inv) throw Error(ErrorKind::DimensionMismatch, "singular matrix");
  return *inv;
}

std::optional<Vector> solve(const Matrix& a, std::span<const Scalar> b) {
  if (b.size() != a.rows()) throw Error(ErrorKind::DimensionMismatch, "solve right-hand side");
  Matrix aug(a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
    aug(r, a.cols()) = b[r];
  }
  auto red = reduce(aug);
  Vector x(a.cols(), Scalar(0));
  for (std::size_t i = 0; i < red.rank(); ++i) {
    if (red.pivots[i] == a.cols()) return std::nullopt;
    x[red.pivots[i]] = red.rref(i, a.cols());
  }
  return x;
}

Scalar determinant(const Matrix& input) {
  if (!input.is_square()) throw Error(ErrorKind::DimensionMismatch, "determinant of non-square matrix");
  Matrix m = input;
  const std::size_t n = m.rows();
  Scalar det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && sgn(m(p, c)) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t k = 0; k < n; ++k) std::swap(m(p, k), m(c, k));
      det = -det;
    }
    det *= m(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (sgn(m(i, c)) == 0) continue;
      Scalar f = m(i, c) / m(c, c);
      for (std::size_t k = c; k < n; ++k) m(i, k) -= f * m(c, k);
    }
  }
  return det;
}

// ---- polynomials ----

void Polynomial::trim() {
  while (!coeffs.empty() && sgn(coeffs.back()) == 0) coeffs.pop_back();
}

Scalar Polynomial::operator()(const Scalar& x) const {
  Scalar acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial Polynomial::derivative() const {
  Polynomial d;
  for (std::size_t i = 1; i < coeffs.size(); ++i) d.coeffs.push_back(coeffs[i] * Scalar(static_cast<long>(i)));
  d.trim();
  return d;
}

std::string Polynomial::to_string() const {
  if (coeffs.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Scalar& c = coeffs[i];
    if (sgn(c) == 0) continue;
    Scalar a = abs(c);
    os << (sgn(c) < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
    if (i == 0 || a != 1) os << dslab::to_string(a);
    if (i >= 1) os << (a != 1 ? "*" : "") << "x";
    if (i >= 2) os << "^" << i;
    first = false;
  }
  return os.str();
}

std::pair<Polynomial, Polynomial> poly_divmod(const Polynomial& a, const Polynomial& b) {
  if (b.coeffs.empty()) throw Error(ErrorKind::InvalidParams, "polynomial division by zero");
  Polynomial q, r = a;
  r.trim();
  const int db = b.degree();
  if (r.degree() < db) return {q, r};
  q.coeffs.assign(r.degree() - db + 1, Scalar(0));
  while (!r.coeffs.empty() && r.degree() >= db) {
    int shift = r.degree() - db;
    Scalar f = r.coeffs.back() / b.coeffs.back();
    q.coeffs[shift] = f;
    for (int i = 0; i <= db; ++i) r.coeffs[shift + i] -= f * b.coeffs[i];
    r.trim();
  }
  q.trim();
  return {q, r};
}

static Polynomial monic(Polynomial p) {
  p.trim();
  if (p.coeffs.empty()) return p;
  Scalar lead = p.coeffs.back();
  for (auto& c : p.coeffs) c /= lead;
  return p;
}

Polynomial poly_gcd(Polynomial a, Polynomial b) {
  a.trim();
  b.trim();
  while (!b.coeffs.empty()) {
    auto r = poly_divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

namespace {

// Column-wise nonzero structure for repeated matrix-vector products.
struct SparseCols {
  std::vector<std::vector<std::pair<std::size_t, Scalar>>> cols;
  explicit SparseCols(const Matrix& m) : cols(m.cols()) {
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c)
        if (sgn(m(r, c)) != 0) cols[c].emplace_back(r, m(r, c));
  }
  Vector apply(const Vector& v) const {
    Vector out(v.size(), Scalar(0));
    for (std::size_t c = 0; c < cols.size(); ++c) {
      if (sgn(v[c]) == 0) continue;
      for (const auto& [r, a] : cols[c]) out[r] += a * v[c];
    }
    return out;
  }
};

// Annihilator of v under m: monic polynomial of least degree with p(m) v = 0.
Polynomial local_annihilator(const SparseCols& m, const Vector& v) {
  struct Row {
    Vector vec;
    std::size_t pivot;
    std::vector<Scalar> poly;  // vec = poly(m) v
  };
  std::vector<Row> rows;
  Vector cur = v;
  for (std::size_t k = 0;; ++k) {
    Vector w = cur;
    std::vector<Scalar> poly(k + 1, Scalar(0));
    poly[k] = 1;
    for (const auto& r : rows) {
      Scalar f = w[r.pivot];
      if (sgn(f) == 0) continue;
      axpy(w, -f, r.vec);
      for (std::size_t i = 0; i < r.poly.size(); ++i) poly[i] -= f * r.poly[i];
    }
    std::size_t piv = 0;
    while (piv < w.size() && sgn(w[piv]) == 0) ++piv;
    if (piv == w.size()) {
      Polynomial p{poly};
      p.trim();
      return p;
    }
    Scalar inv = 1 / w[piv];
    for (auto& x : w) x *= inv;
    for (auto& x : poly) x *= inv;
    // keep earlier rows reduced at the new pivot
    for (auto& r : rows) {
      Scalar f = r.vec[piv];
      if (sgn(f) == 0) continue;
      axpy(r.vec, -f, w);
      r.poly.resize(poly.size(), Scalar(0));
      for (std::size_t i = 0; i < poly.size(); ++i) r.poly[i] -= f * poly[i];
    }
    rows.push_back({w, piv, poly});
    cur = m.apply(cur);
  }
}

Vector apply_poly(const SparseCols& m, const Polynomial& p, const Vector& v) {
  Vector acc(v.size(), Scalar(0));
  for (auto it = p.coeffs.rbegin(); it != p.coeffs.rend(); ++it) {
    acc = m.apply(acc);
    axpy(acc, *it, v);
  }
  return acc;
}

Polynomial poly_mul(const Polynomial& a, const Polynomial& b) {
  if (a.coeffs.empty() || b.coeffs.empty()) return {};
  Polynomial out;
  out.coeffs.assign(a.coeffs.size() + b.coeffs.size() - 1, Scalar(0));
  for (std::size_t i = 0; i < a.coeffs.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs.size(); ++j) out.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
  out.trim();
  return out;
}

}  // namespace

MinPoly minimal_polynomial(const Matrix& m) {
  if (!m.is_square()) throw Error(ErrorKind::DimensionMismatch, "minimal polynomial of non-square matrix");
  const std::size_t n = m.rows();
  SparseCols sm(m);
  Polynomial mp{{Scalar(1)}};
  for (std::size_t i = 0; i < n; ++i) {
    Vector e = unit_vector(n, i);
    if (dslab::is_zero(std::span<const Scalar>(apply_poly(sm, mp, e)))) continue;
    Polynomial a = local_annihilator(sm, e);
    Polynomial g = poly_gcd(mp, a);
    mp = monic(poly_mul(mp, poly_divmod(a, g).first));
  }
  MinPoly out;
  out.poly = mp;
  out.squarefree = poly_gcd(mp, mp.derivative()).degree() == 0;
  return out;
}

namespace {

std::vector<mpz_class> positive_divisors(mpz_class n) {
  n = abs(n);
  std::vector<mpz_class> small, large;
  for (mpz_class d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

}  // namespace

std::vector<Scalar> rational_roots(const Polynomial& input) {
  Polynomial p = monic(input);
  if (p.coeffs.empty()) throw Error(ErrorKind::InvalidParams, "roots of the zero polynomial");
  std::vector<Scalar> roots;
  // strip zero roots
  std::size_t z = 0;
  while (z < p.coeffs.size() && sgn(p.coeffs[z]) == 0) ++z;
  if (z > 0) {
    roots.push_back(0);
    p.coeffs.erase(p.coeffs.begin(), p.coeffs.begin() + z);
  }
  if (p.degree() > 0) {
    // clear denominators
    mpz_class l = 1;
    for (const auto& c : p.coeffs) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    std::vector<mpz_class> ic;
    for (const auto& c : p.coeffs) ic.push_back(mpz_class(c * l));
    auto num_divs = positive_divisors(ic.front());
    auto den_divs = positive_divisors(ic.back());
    for (const auto& a : num_divs)
      for (const auto& b : den_divs)
        for (int s : {1, -1}) {
          if (p.degree() == 0) break;
          Scalar cand(a * s, b);
          cand.canonicalize();
          if (std::find(roots.begin(), roots.end(), cand) != roots.end()) continue;
          if (sgn(p(cand)) != 0) continue;
          roots.push_back(cand);
          Polynomial lin{{-cand, Scalar(1)}};
          while (p.degree() > 0 && sgn(p(cand)) == 0) p = poly_divmod(p, lin).first;
        }
  }
  if (p.degree() > 0) throw Error(ErrorKind::IrrationalSpectrum, "polynomial " + input.to_string() + " does not split over Q");
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::vector<Scalar> rational_eigenvalues(const Matrix& m) {
  return rational_roots(minimal_polynomial(m).poly);
}

Matrix matrix_power(const Matrix& m, unsigned k) {
  Matrix out = Matrix::identity(m.rows());
  for (unsigned i = 0; i < k; ++i) out = out * m;
  return out;
}

}  // namespace dslab
