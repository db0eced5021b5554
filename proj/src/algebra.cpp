#include "dslab/algebra.hpp"

#include <set>

namespace dslab {

const char* to_string(Family f) {
  switch (f) {
    case Family::Custom: return "custom";
    case Family::GL: return "gl";
    case Family::SL: return "sl";
    case Family::Q: return "q";
    case Family::P: return "p";
    case Family::Split: return "split";
    case Family::Quotient: return "quotient";
    case Family::Sub: return "sub";
  }
  return "custom";
}

Family family_from_string(const std::string& s) {
  for (Family f : {Family::Custom, Family::GL, Family::SL, Family::Q, Family::P, Family::Split, Family::Quotient, Family::Sub})
    if (s == to_string(f)) return f;
  throw Error(ErrorKind::InvalidParams, "unknown family '" + s + "'");
}

namespace {

Vector flatten(const Matrix& m) {
  Vector v;
  v.reserve(m.rows() * m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) v.push_back(m(r, c));
  return v;
}

Matrix unit(std::size_t n, std::size_t i, std::size_t j) {
  Matrix m(n, n);
  m(i, j) = 1;
  return m;
}

std::string unit_label(const std::string& letter, std::size_t i, std::size_t j, std::size_t n) {
  if (n <= 9) return letter + std::to_string(i + 1) + std::to_string(j + 1);
  return letter + std::to_string(i + 1) + "_" + std::to_string(j + 1);
}

}  // namespace

MatrixRealization::MatrixRealization(SuperSpace nat, std::vector<Matrix> b) : natural(std::move(nat)), basis(std::move(b)) {
  std::vector<Vector> rows;
  for (const auto& m : basis) {
    if (m.rows() != natural.dim() || m.cols() != natural.dim())
      throw Error(ErrorKind::DimensionMismatch, "realization matrix shape");
    rows.push_back(flatten(m));
  }
  flat = CoordinateMap(Matrix::from_rows(natural.dim() * natural.dim(), rows));
}

Vector MatrixRealization::coordinates(const Matrix& x) const {
  auto c = flat.coordinates(flatten(x));
  if (!c) throw Error(ErrorKind::InvalidParams, "matrix outside the algebra");
  return *c;
}

Matrix MatrixRealization::element(std::span<const Scalar> coords) const {
  Matrix out(natural.dim(), natural.dim());
  for (std::size_t i = 0; i < coords.size(); ++i)
    if (sgn(coords[i]) != 0) out += coords[i] * basis[i];
  return out;
}

Matrix super_commutator(const SuperSpace& v, const Matrix& x, const Matrix& y) {
  auto px = map_parity(v, v, x), py = map_parity(v, v, y);
  if (!px || !py) throw Error(ErrorKind::NotHomogeneous, "super-commutator of inhomogeneous matrices");
  int s = (*px == 1 && *py == 1) ? -1 : 1;
  Matrix out = x * y;
  Matrix yx = y * x;
  if (s == 1) out -= yx;
  else out += yx;
  return out;
}

LieSA::LieSA(SuperSpace space, std::vector<Matrix> ad, FamilyParams family)
    : space_(std::move(space)), ad_(std::move(ad)), family_(family) {
  if (ad_.size() != space_.dim()) throw Error(ErrorKind::DimensionMismatch, "one ad matrix per basis element");
  for (const auto& m : ad_)
    if (m.rows() != space_.dim() || m.cols() != space_.dim()) throw Error(ErrorKind::DimensionMismatch, "ad matrix shape");
}

Matrix LieSA::ad(std::span<const Scalar> x) const {
  Matrix out(dim(), dim());
  for (std::size_t i = 0; i < x.size(); ++i)
    if (sgn(x[i]) != 0) out += x[i] * ad_[i];
  return out;
}

Vector LieSA::bracket(std::span<const Scalar> x, std::span<const Scalar> y) const {
  Vector out(dim(), Scalar(0));
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (sgn(x[i]) == 0) continue;
    Vector t = ad_[i].apply(y);
    axpy(out, x[i], t);
  }
  return out;
}

std::size_t LieSA::index(const std::string& label) const {
  const auto& ls = space_.labels();
  for (std::size_t i = 0; i < ls.size(); ++i)
    if (ls[i] == label) return i;
  throw Error(ErrorKind::InvalidParams, "no basis element labeled '" + label + "'");
}

void LieSA::set_cartan(std::vector<Vector> h) {
  cartan_ = std::move(h);
  // attach integer weights when every Cartan element acts diagonally
  std::vector<Weight> weights(dim(), Weight(cartan_.size(), 0));
  bool ok = !cartan_.empty();
  for (std::size_t a = 0; a < cartan_.size() && ok; ++a) {
    Matrix m = ad(cartan_[a]);
    for (std::size_t r = 0; r < dim() && ok; ++r)
      for (std::size_t c = 0; c < dim() && ok; ++c) {
        if (r != c && sgn(m(r, c)) != 0) ok = false;
        if (r == c) {
          if (m(r, r).get_den() != 1 || !m(r, r).get_num().fits_slong_p()) ok = false;
          else weights[r][a] = m(r, r).get_num().get_si();
        }
      }
  }
  if (ok) space_ = SuperSpace(space_.labels(), space_.parities(), std::move(weights));
}

void LieSA::set_zgrading(std::vector<int> deg) {
  if (deg.size() != dim()) throw Error(ErrorKind::DimensionMismatch, "grading length");
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = 0; j < dim(); ++j)
      for (std::size_t k = 0; k < dim(); ++k)
        if (sgn(c(i, j, k)) != 0 && deg[k] != deg[i] + deg[j])
          throw Error(ErrorKind::GradingViolation, "bracket of " + space_.labels()[i] + " and " + space_.labels()[j] +
                                                       " leaves the grading");
  zgrading_ = std::move(deg);
}

LieSA matrix_algebra(SuperSpace space, SuperSpace natural, std::vector<Matrix> basis, FamilyParams family) {
  if (basis.size() != space.dim()) throw Error(ErrorKind::DimensionMismatch, "one matrix per basis label");
  for (std::size_t i = 0; i < basis.size(); ++i) {
    auto p = map_parity(natural, natural, basis[i]);
    if (!p || (*p >= 0 && *p != space.parity(i)))
      throw Error(ErrorKind::NotHomogeneous, "matrix for '" + space.labels()[i] + "' has the wrong parity");
  }
  MatrixRealization real(natural, std::move(basis));
  const std::size_t d = space.dim();
  std::vector<Matrix> ad(d, Matrix(d, d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      Vector col = real.coordinates(super_commutator(natural, real.basis[i], real.basis[j]));
      for (std::size_t k = 0; k < d; ++k) ad[i](k, j) = col[k];
    }
  LieSA g(std::move(space), std::move(ad), family);
  g.set_realization(std::move(real));
  return g;
}

LieSA make_gl(std::size_t m, std::size_t n) {
  const std::size_t N = m + n;
  if (N == 0) throw Error(ErrorKind::InvalidParams, "gl(0|0)");
  SuperSpace nat = SuperSpace::standard(m, n);
  std::vector<std::string> labels;
  std::vector<int> par;
  std::vector<Matrix> mats;
  std::vector<int> deg;
  std::vector<Vector> cartan;
  if (m == 1 && n == 1) {
    labels = {"I", "h", "E", "F"};
    par = {0, 0, 1, 1};
    mats = {Matrix::identity(2), Matrix{{1, 0}, {0, -1}}, unit(2, 0, 1), unit(2, 1, 0)};
    deg = {0, 0, 1, -1};
    cartan = {unit_vector(4, 0), unit_vector(4, 1)};
  } else {
    std::vector<std::size_t> diag_pos(N);
    for (int want = 0; want < 2; ++want)
      for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) {
          int p = ((i < m) != (j < m)) ? 1 : 0;
          if (p != want) continue;
          if (i == j) diag_pos[i] = labels.size();
          labels.push_back(unit_label("E", i, j, N));
          par.push_back(p);
          mats.push_back(unit(N, i, j));
          deg.push_back(p == 0 ? 0 : (i < m ? 1 : -1));
        }
    for (std::size_t i = 0; i < N; ++i) cartan.push_back(unit_vector(labels.size(), diag_pos[i]));
  }
  LieSA g = matrix_algebra(SuperSpace(labels, par), nat, std::move(mats), {Family::GL, m, n});
  g.set_cartan(std::move(cartan));
  g.set_zgrading(std::move(deg));
  return g;
}

LieSA make_sl(std::size_t m, std::size_t n) {
  const std::size_t N = m + n;
  if (N < 2) throw Error(ErrorKind::InvalidParams, "sl needs m + n >= 2");
  SuperSpace nat = SuperSpace::standard(m, n);
  std::vector<std::string> labels;
  std::vector<int> par;
  std::vector<Matrix> mats;
  std::vector<int> deg;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j)
      if (i != j && (i < m) == (j < m)) {
        labels.push_back(unit_label("E", i, j, N));
        par.push_back(0);
        mats.push_back(unit(N, i, j));
        deg.push_back(0);
      }
  std::vector<std::size_t> hpos;
  for (std::size_t i = 0; i + 1 < N; ++i) {
    Matrix h = unit(N, i, i);
    // across the block boundary the supertrace-zero element is E_mm + E_{m+1,m+1}
    if (i + 1 == m) h += unit(N, i + 1, i + 1);
    else h -= unit(N, i + 1, i + 1);
    hpos.push_back(labels.size());
    labels.push_back("H" + std::to_string(i + 1));
    par.push_back(0);
    mats.push_back(std::move(h));
    deg.push_back(0);
  }
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j)
      if ((i < m) != (j < m)) {
        labels.push_back(unit_label("E", i, j, N));
        par.push_back(1);
        mats.push_back(unit(N, i, j));
        deg.push_back(i < m ? 1 : -1);
      }
  std::vector<Vector> cartan;
  for (auto p : hpos) cartan.push_back(unit_vector(labels.size(), p));
  LieSA g = matrix_algebra(SuperSpace(labels, par), nat, std::move(mats), {Family::SL, m, n});
  g.set_cartan(std::move(cartan));
  g.set_zgrading(std::move(deg));
  return g;
}

LieSA make_q(std::size_t n) {
  if (n == 0) throw Error(ErrorKind::InvalidParams, "q(0)");
  SuperSpace nat = SuperSpace::standard(n, n);
  std::vector<std::string> labels;
  std::vector<int> par;
  std::vector<Matrix> mats;
  std::vector<std::size_t> diag;
  for (int odd = 0; odd < 2; ++odd)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Matrix t(2 * n, 2 * n);
        if (odd) {
          t(i, n + j) = 1;
          t(n + i, j) = 1;
        } else {
          t(i, j) = 1;
          t(n + i, n + j) = 1;
          if (i == j) diag.push_back(labels.size());
        }
        labels.push_back(unit_label(odd ? "T_E" : "T^E", i, j, n));
        par.push_back(odd);
        mats.push_back(std::move(t));
      }
  std::vector<Vector> cartan;
  for (auto p : diag) cartan.push_back(unit_vector(labels.size(), p));
  LieSA g = matrix_algebra(SuperSpace(labels, par), nat, std::move(mats), {Family::Q, n, n});
  g.set_cartan(std::move(cartan));
  return g;
}

LieSA make_p(std::size_t n) {
  if (n == 0) throw Error(ErrorKind::InvalidParams, "p(0)");
  SuperSpace nat = SuperSpace::standard(n, n);
  std::vector<std::string> labels;
  std::vector<int> par;
  std::vector<Matrix> mats;
  std::vector<int> deg;
  std::vector<std::size_t> diag;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Matrix a(2 * n, 2 * n);
      a(i, j) = 1;
      a(n + j, n + i) = -1;
      if (i == j) diag.push_back(labels.size());
      labels.push_back(unit_label("A", i, j, n));
      par.push_back(0);
      mats.push_back(std::move(a));
      deg.push_back(0);
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Matrix b(2 * n, 2 * n);
      b(i, n + j) = 1;
      b(j, n + i) = 1;
      labels.push_back(unit_label("B", i, j, n));
      par.push_back(1);
      mats.push_back(std::move(b));
      deg.push_back(1);
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Matrix c(2 * n, 2 * n);
      c(n + i, j) = 1;
      c(n + j, i) = -1;
      labels.push_back(unit_label("C", i, j, n));
      par.push_back(1);
      mats.push_back(std::move(c));
      deg.push_back(-1);
    }
  std::vector<Vector> cartan;
  for (auto p : diag) cartan.push_back(unit_vector(labels.size(), p));
  LieSA g = matrix_algebra(SuperSpace(labels, par), nat, std::move(mats), {Family::P, n, n});
  g.set_cartan(std::move(cartan));
  g.set_zgrading(std::move(deg));
  return g;
}

LieSA make_family(Family tag, std::size_t m, std::size_t n) {
  switch (tag) {
    case Family::GL: return make_gl(m, n);
    case Family::SL: return make_sl(m, n);
    case Family::Q: return make_q(n);
    case Family::P: return make_p(n);
    default: throw Error(ErrorKind::InvalidParams, std::string("no constructor for family ") + to_string(tag));
  }
}

LieSA make_so(std::size_t n) {
  if (n < 2) throw Error(ErrorKind::InvalidParams, "so(n) needs n >= 2");
  std::vector<std::string> labels;
  std::vector<Matrix> mats;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Matrix r(n, n);
      r(i, j) = 1;
      r(j, i) = -1;
      labels.push_back(unit_label("R", i, j, n));
      mats.push_back(std::move(r));
    }
  std::vector<int> par(labels.size(), 0);
  return matrix_algebra(SuperSpace(labels, par), SuperSpace::standard(n, 0), std::move(mats));
}

LieSA make_sp(std::size_t two_n) {
  if (two_n == 0 || two_n % 2) throw Error(ErrorKind::InvalidParams, "sp needs an even positive size");
  const std::size_t n = two_n / 2;
  std::vector<std::string> labels;
  std::vector<Matrix> mats;
  std::vector<std::size_t> diag;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Matrix a(two_n, two_n);
      a(i, j) = 1;
      a(n + j, n + i) = -1;
      if (i == j) diag.push_back(labels.size());
      labels.push_back(unit_label("A", i, j, n));
      mats.push_back(std::move(a));
    }
  for (int lower = 0; lower < 2; ++lower)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) {
        Matrix b(two_n, two_n);
        std::size_t ro = lower ? n : 0, co = lower ? 0 : n;
        b(ro + i, co + j) = 1;
        b(ro + j, co + i) = 1;
        labels.push_back(unit_label(lower ? "C" : "B", i, j, n));
        mats.push_back(std::move(b));
      }
  std::vector<int> par(labels.size(), 0);
  LieSA g = matrix_algebra(SuperSpace(labels, par), SuperSpace::standard(two_n, 0), std::move(mats));
  std::vector<Vector> cartan;
  for (auto p : diag) cartan.push_back(unit_vector(labels.size(), p));
  g.set_cartan(std::move(cartan));
  return g;
}

LieSA make_split(const LieSA& even, const std::vector<Matrix>& odd_action, const std::vector<std::string>& odd_labels) {
  const std::size_t a = even.dim();
  if (even.sdim().odd != 0) throw Error(ErrorKind::InvalidParams, "split: even part has odd elements");
  if (odd_action.size() != a) throw Error(ErrorKind::InvalidParams, "split: one action matrix per even basis element");
  const std::size_t d = a ? odd_action[0].rows() : (odd_labels.size());
  for (const auto& m : odd_action)
    if (m.rows() != d || m.cols() != d) throw Error(ErrorKind::InvalidParams, "split: action matrix shape");
  std::vector<std::string> labels = even.space().labels();
  std::vector<int> par(a, 0);
  for (std::size_t b = 0; b < d; ++b) {
    labels.push_back(b < odd_labels.size() ? odd_labels[b] : "v" + std::to_string(b + 1));
    par.push_back(1);
  }
  const std::size_t D = a + d;
  std::vector<Matrix> ad(D, Matrix(D, D));
  for (std::size_t i = 0; i < a; ++i) {
    for (std::size_t r = 0; r < a; ++r)
      for (std::size_t c = 0; c < a; ++c) ad[i](r, c) = even.ad(i)(r, c);
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c) ad[i](a + r, a + c) = odd_action[i](r, c);
  }
  for (std::size_t b = 0; b < d; ++b)
    for (std::size_t i = 0; i < a; ++i)
      for (std::size_t c = 0; c < d; ++c) ad[a + b](a + c, i) = -odd_action[i](c, b);
  LieSA g(SuperSpace(labels, par), std::move(ad), {Family::Split, a, d});
  std::vector<Vector> cartan;
  for (const auto& h : even.cartan()) {
    Vector v(D, Scalar(0));
    for (std::size_t i = 0; i < a; ++i) v[i] = h[i];
    cartan.push_back(std::move(v));
  }
  if (!cartan.empty()) g.set_cartan(std::move(cartan));
  return g;
}

LieSA make_abelian(std::size_t even, std::size_t odd) {
  const std::size_t d = even + odd;
  std::vector<std::string> labels;
  std::vector<int> par;
  for (std::size_t i = 0; i < d; ++i) {
    labels.push_back((i < even ? "z" : "w") + std::to_string(i < even ? i + 1 : i - even + 1));
    par.push_back(i < even ? 0 : 1);
  }
  return LieSA(SuperSpace(labels, par), std::vector<Matrix>(d, Matrix(d, d)));
}

}  // namespace dslab
