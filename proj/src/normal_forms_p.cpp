#include <algorithm>
#include <random>

#include "nf_internal.hpp"

// p(n): u = [[0, B], [C, 0]] with B symmetric, C antisymmetric. The even part
// acts by B -> A B A^t, C -> A^{-t} C A^{-1}, and u^2 = diag(BC, CB).

namespace dslab::nf {

namespace {

Matrix minus_scalar(Matrix m, const Scalar& l) {
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, i) -= l;
  return m;
}

Scalar bilinear(const Matrix& F, const Vector& x, const Vector& y) { return dot(x, F.apply(y)); }

struct Pairing {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::optional<std::size_t> single;
};

// Matches diagonal entries a_i, a_j with -a_i/a_j a rational square; at most
// one entry that is itself a square may stay single.
bool match(const std::vector<Scalar>& a, std::vector<bool>& used, bool allow_single, Pairing& out) {
  std::size_t i = 0;
  while (i < a.size() && used[i]) ++i;
  if (i == a.size()) return !allow_single || out.single.has_value();
  used[i] = true;
  if (allow_single && !out.single && rational_square(a[i])) {
    out.single = i;
    if (match(a, used, allow_single, out)) return true;
    out.single.reset();
  }
  for (std::size_t j = i + 1; j < a.size(); ++j) {
    if (used[j] || !rational_square(-a[i] / a[j])) continue;
    used[j] = true;
    out.pairs.emplace_back(i, j);
    if (match(a, used, allow_single, out)) return true;
    out.pairs.pop_back();
    used[j] = false;
  }
  used[i] = false;
  return false;
}

}  // namespace

RankData p_rank(const Matrix& B, const Matrix& C) {
  const std::size_t n = B.rows();
  Matrix M = B * C;
  RankData d;
  d.family = Family::P;
  std::vector<Scalar> ev = n ? rational_eigenvalues(M) : std::vector<Scalar>{};
  std::sort(ev.begin(), ev.end());
  long q = 0;
  std::vector<Scalar> shared;
  for (const auto& l : ev) {
    if (sgn(l) <= 0) continue;
    std::size_t mult = n - rank(minus_scalar(M, l));
    if (mult != n - rank(minus_scalar(M, -l))) throw Error(ErrorKind::NotHomogeneous, "unpaired eigenvalues of u^2");
    for (std::size_t i = 0; i < mult; ++i) shared.push_back(l);
    q += static_cast<long>(mult);
  }
  const long rho = static_cast<long>(rank(B)), sigma = static_cast<long>(rank(C));
  if (static_cast<long>(rank(M)) != 2 * q || sigma < 2 * q || rho < 2 * q)
    throw Error(ErrorKind::NotHomogeneous, "u^2 is not semisimple");
  const long e = (sigma - 2 * q) / 2;
  d.d = rho % 2;
  d.r = (rho - d.d) / 2;
  d.coefficients = shared;
  if (e > 0) {
    d.coefficients.resize(static_cast<std::size_t>(d.r), Scalar(0));
    d.coefficients.resize(static_cast<std::size_t>(d.r + e), Scalar(1));
  }
  d.s = static_cast<long>(d.coefficients.size());
  return d;
}

void p_standard_blocks(std::size_t n, const RankData& d, Matrix& B, Matrix& C) {
  B = Matrix(n, n);
  C = Matrix(n, n);
  for (long i = 0; i < d.r; ++i) B(2 * i, 2 * i + 1) = B(2 * i + 1, 2 * i) = 1;
  if (d.d) B(n - 1, n - 1) = 1;
  for (long j = 0; j < d.s; ++j) {
    C(2 * j, 2 * j + 1) = d.coefficients[j];
    C(2 * j + 1, 2 * j) = -d.coefficients[j];
  }
}

Matrix p_reduce(const Matrix& B0, const Matrix& C0, const RankData& data) {
  const std::size_t n = B0.rows();
  // stage 1: congruence-diagonalize B on covectors
  std::vector<Vector> units;
  for (std::size_t i = 0; i < n; ++i) units.push_back(unit_vector(n, i));
  auto diag = diagonalize([&](const Vector& x, const Vector& y) { return bilinear(B0, x, y); }, units);
  std::vector<Vector> rows;
  std::vector<Scalar> D;
  for (auto& [v, a] : diag) {
    if (sgn(a) != 0) D.push_back(a);
    rows.push_back(v);
  }
  const std::size_t rho = D.size();
  Matrix A = Matrix::from_rows(n, rows);
  Matrix Ai = inverse(A);
  Matrix C = Ai.transpose() * C0 * Ai;

  // stage 2: clear the off-diagonal block of C inside the stabilizer of B
  Matrix C1 = block(C, 0, 0, rho, rho), C2 = block(C, 0, rho, rho, n - rho);
  Matrix Y(rho, n - rho);
  for (std::size_t j = 0; j < n - rho; ++j) {
    auto y = solve(C1, C2.column(j));
    if (!y) throw Error(ErrorKind::NotHomogeneous, "u^2 is not semisimple");
    Y.set_column(j, *y);
  }
  Matrix S = Matrix::identity(n);
  for (std::size_t i = 0; i < rho; ++i)
    for (std::size_t j = 0; j < n - rho; ++j) S(i, rho + j) = Y(i, j);
  A = S * A;
  Ai = inverse(A);
  C = Ai.transpose() * C0 * Ai;
  C1 = block(C, 0, 0, rho, rho);
  Matrix C3 = block(C, rho, rho, n - rho, n - rho);

  // stage 3: symplectic basis of C3
  const std::size_t nr = n - rho;
  std::vector<Vector> rest;
  for (std::size_t i = 0; i < nr; ++i) rest.push_back(unit_vector(nr, i));
  std::vector<Vector> c_pairs;
  auto w3 = [&](const Vector& x, const Vector& y) { return bilinear(C3, x, y); };
  for (;;) {
    std::size_t pi = rest.size(), pj = 0;
    for (std::size_t i = 0; i < rest.size() && pi == rest.size(); ++i)
      for (std::size_t j = i + 1; j < rest.size(); ++j)
        if (sgn(w3(rest[i], rest[j])) != 0) {
          pi = i;
          pj = j;
          break;
        }
    if (pi == rest.size()) break;
    Vector x = rest[pi], y = scale(1 / w3(rest[pi], rest[pj]), rest[pj]);
    rest.erase(rest.begin() + static_cast<long>(pj));
    rest.erase(rest.begin() + static_cast<long>(pi));
    for (auto& w : rest) {
      Scalar a = w3(w, y), b = w3(w, x);
      axpy(w, -a, x);
      axpy(w, b, y);
    }
    c_pairs.push_back(std::move(x));
    c_pairs.push_back(std::move(y));
  }

  // stage 4: the B-block. β(x,y) = x^t D^{-1} y, ω = C1, M1 = D C1 is β-skew.
  auto beta = [&](const Vector& x, const Vector& y) {
    Scalar s = 0;
    for (std::size_t i = 0; i < rho; ++i)
      if (sgn(x[i]) != 0 && sgn(y[i]) != 0) s += x[i] * y[i] / D[i];
    return s;
  };
  Matrix M1 = Matrix::diagonal(D) * C1;
  std::vector<Vector> b_cols;
  std::vector<Scalar> seen;
  for (const auto& c : data.coefficients) {
    if (sgn(c) == 0 || std::find(seen.begin(), seen.end(), c) != seen.end()) continue;
    seen.push_back(c);
    auto xs = rows_of(kernel(minus_scalar(M1, -c)));
    auto ys = rows_of(kernel(minus_scalar(M1, c)));
    if (xs.size() != ys.size()) throw Error(ErrorKind::NotHomogeneous, "unpaired eigenvalues of u^2");
    Matrix G(xs.size(), ys.size());
    for (std::size_t i = 0; i < xs.size(); ++i)
      for (std::size_t j = 0; j < ys.size(); ++j) G(i, j) = beta(xs[i], ys[j]);
    Matrix T = inverse(G);
    for (std::size_t i = 0; i < xs.size(); ++i) {
      Vector y = zero_vector(rho);
      for (std::size_t l = 0; l < ys.size(); ++l) axpy(y, T(l, i), ys[l]);
      b_cols.push_back(xs[i]);
      b_cols.push_back(std::move(y));
    }
  }
  // kernel of M1: β-hyperbolic pairs plus at most one square
  auto K = rows_of(kernel(M1));
  std::mt19937 rng(7);
  std::optional<Vector> single;
  bool found = K.empty();
  for (int attempt = 0; attempt < 400 && !found; ++attempt) {
    std::vector<Vector> basis = K;
    if (attempt > 0) {
      Matrix T(K.size(), K.size());
      do {
        for (std::size_t i = 0; i < K.size(); ++i)
          for (std::size_t j = 0; j < K.size(); ++j) T(i, j) = static_cast<long>(rng() % 5) - 2;
      } while (rank(T) < K.size());
      for (std::size_t i = 0; i < K.size(); ++i) {
        basis[i] = zero_vector(rho);
        for (std::size_t j = 0; j < K.size(); ++j) axpy(basis[i], T(i, j), K[j]);
      }
    }
    auto dg = diagonalize(beta, basis);
    std::vector<Scalar> a;
    for (auto& [v, s] : dg) a.push_back(s);
    if (std::any_of(a.begin(), a.end(), [](const Scalar& s) { return sgn(s) == 0; }))
      throw Error(ErrorKind::NotHomogeneous, "degenerate symmetric part");
    std::vector<bool> used(a.size(), false);
    Pairing pr;
    if (!match(a, used, a.size() % 2 == 1, pr)) continue;
    for (auto [i, j] : pr.pairs) {
      Scalar t;
      rational_square(-a[i] / a[j], &t);
      Vector v = dg[i].first, w = scale(t, dg[j].first);
      b_cols.push_back(add(v, w));
      b_cols.push_back(scale(1 / (2 * a[i]), sub(v, w)));
    }
    if (pr.single) {
      Scalar t;
      rational_square(a[*pr.single], &t);
      single = scale(1 / t, dg[*pr.single].first);
    }
    found = true;
  }
  if (!found) throw Error(ErrorKind::IrrationalSpectrum, "symmetric part does not split over the rationals");

  // assemble in standard positions
  auto top = [&](const Vector& v) {
    Vector out = zero_vector(n);
    std::copy(v.begin(), v.end(), out.begin());
    return out;
  };
  auto bottom = [&](const Vector& v) {
    Vector out = zero_vector(n);
    std::copy(v.begin(), v.end(), out.begin() + static_cast<long>(rho));
    return out;
  };
  std::vector<Vector> cols;
  for (const auto& v : b_cols) cols.push_back(top(v));
  for (const auto& v : c_pairs) cols.push_back(bottom(v));
  for (const auto& v : rest) cols.push_back(bottom(v));
  if (single) cols.push_back(top(*single));
  if (cols.size() != n) throw Error(ErrorKind::NotHomogeneous, "normal form basis incomplete");
  return inverse(Matrix::from_columns(n, cols)) * A;
}

}  // namespace dslab::nf
