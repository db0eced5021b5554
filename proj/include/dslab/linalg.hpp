#pragma once

#include <optional>
#include <vector>

#include "dslab/error.hpp"
#include "dslab/matrix.hpp"

namespace dslab {

struct Reduced {
  Matrix rref;                      // nonzero rows only
  std::vector<std::size_t> pivots;  // pivot column of each row
  std::size_t rank() const { return pivots.size(); }
};

/// Row-reduced echelon form; zero rows dropped.
Reduced reduce(const Matrix& m);
std::size_t rank(const Matrix& m);

/// Canonical subspace of F^n: rows in RREF.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient);
  /// Span of the rows of `rows`.
  static Subspace span_rows(const Matrix& rows);
  static Subspace span(std::size_t ambient, const std::vector<Vector>& vecs);
  static Subspace span_columns(const Matrix& cols) { return span_rows(cols.transpose()); }
  static Subspace whole(std::size_t ambient);

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return pivots_.size(); }
  const Matrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  Vector vector(std::size_t i) const { return basis_.row_vector(i); }

  bool contains(std::span<const Scalar> v) const;
  bool contains(const Subspace& other) const;
  /// Coordinates of v with respect to basis(); nullopt if v is outside.
  std::optional<Vector> coordinates(std::span<const Scalar> v) const;
  /// Coordinates, throwing Error(kind) when v is outside.
  Vector coordinates_or_throw(std::span<const Scalar> v, ErrorKind kind) const;
  /// v minus its component along the basis rows (reduces pivot entries to 0).
  Vector reduce_vector(std::span<const Scalar> v) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  std::size_t ambient_ = 0;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

/// Null space {x : m x = 0}, canonical basis.
Subspace kernel(const Matrix& m);
/// Column space of m.
Subspace image(const Matrix& m);

Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);

/// Quotient W/U with U ⊆ W. Representatives are the basis rows of W whose
/// W-coordinate index is a free column of U (in W-coordinates).
struct Quotient {
  Subspace whole;                       // W
  Subspace sub;                         // U
  Subspace sub_coords;                  // U in W-coordinates
  std::vector<std::size_t> free;        // free columns of sub_coords
  Matrix reps;                          // rows: representatives in ambient coords
  /// Coordinates of the class of w ∈ W; throws QuotientFailure if w ∉ W.
  Vector project(std::span<const Scalar> w) const;
  std::size_t dim() const { return reps.rows(); }
};
Quotient quotient(const Subspace& whole, const Subspace& sub);

/// Quotient of F^n by a subspace: representatives are standard basis vectors
/// at the non-pivot columns.
std::vector<std::size_t> free_columns(const Subspace& s);

/// Coordinates with respect to a fixed list of independent row vectors (not
/// necessarily in echelon form).
class CoordinateMap {
 public:
  CoordinateMap() = default;
  /// Throws DimensionMismatch if the rows are dependent.
  explicit CoordinateMap(const Matrix& rows);
  std::size_t size() const { return rows_.rows(); }
  std::size_t ambient() const { return rows_.cols(); }
  const Matrix& rows() const { return rows_; }
  const Subspace& span() const { return span_; }
  std::optional<Vector> coordinates(std::span<const Scalar> v) const;
  Vector coordinates_or_throw(std::span<const Scalar> v, ErrorKind kind) const;
  /// Σ c_i rows_i
  Vector combine(std::span<const Scalar> c) const;

 private:
  Matrix rows_;
  Subspace span_;
  Matrix transform_;  // span_.basis() = transform_ * rows_
};

/// Inverse of a square matrix; throws DimensionMismatch if singular.
Matrix inverse(const Matrix& m);
std::optional<Matrix> try_inverse(const Matrix& m);
/// Solve a x = b for one x (any), nullopt if inconsistent.
std::optional<Vector> solve(const Matrix& a, std::span<const Scalar> b);
Scalar determinant(const Matrix& m);

/// Univariate polynomial with rational coefficients, coeffs[i] of x^i, trimmed.
struct Polynomial {
  std::vector<Scalar> coeffs;
  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  void trim();
  Scalar operator()(const Scalar& x) const;
  Polynomial derivative() const;
  std::string to_string() const;
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs == b.coeffs; }
};
Polynomial poly_gcd(Polynomial a, Polynomial b);
/// Quotient and remainder.
std::pair<Polynomial, Polynomial> poly_divmod(const Polynomial& a, const Polynomial& b);

struct MinPoly {
  Polynomial poly;  // monic
  bool squarefree;
};
MinPoly minimal_polynomial(const Matrix& m);
/// Distinct rational roots; throws IrrationalSpectrum if the polynomial does
/// not split over Q.
std::vector<Scalar> rational_roots(const Polynomial& p);
/// Eigenvalues of m (distinct) if all rational, else IrrationalSpectrum.
std::vector<Scalar> rational_eigenvalues(const Matrix& m);
Matrix matrix_power(const Matrix& m, unsigned k);

}  // namespace dslab
