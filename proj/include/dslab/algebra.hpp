#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "dslab/superspace.hpp"

namespace dslab {

enum class Family { Custom, GL, SL, Q, P, Split, Quotient, Sub };

const char* to_string(Family f);
Family family_from_string(const std::string& s);

struct FamilyParams {
  Family tag = Family::Custom;
  std::size_t m = 0;
  std::size_t n = 0;
  friend bool operator==(const FamilyParams&, const FamilyParams&) = default;
};

/// Supermatrix realization on a natural module: one matrix per basis element.
struct MatrixRealization {
  SuperSpace natural;
  std::vector<Matrix> basis;
  CoordinateMap flat;  // flattened basis matrices

  MatrixRealization() = default;
  MatrixRealization(SuperSpace natural, std::vector<Matrix> basis);
  /// Coordinates of a supermatrix; throws InvalidParams if outside the span.
  Vector coordinates(const Matrix& x) const;
  Matrix element(std::span<const Scalar> coords) const;
};

/// Super-bracket of supermatrices on a graded space with the given parities.
/// Inputs must be homogeneous.
Matrix super_commutator(const SuperSpace& v, const Matrix& x, const Matrix& y);

/// Lie superalgebra with structure constants [x_i, x_j] = Σ_k c_ij^k x_k,
/// stored as ad matrices: ad(i)(k, j) = c_ij^k.
class LieSA {
 public:
  LieSA() = default;
  LieSA(SuperSpace space, std::vector<Matrix> ad, FamilyParams family = {});

  const SuperSpace& space() const { return space_; }
  std::size_t dim() const { return space_.dim(); }
  int parity(std::size_t i) const { return space_.parity(i); }
  SDim sdim() const { return space_.sdim(); }
  const FamilyParams& family() const { return family_; }
  void set_family(FamilyParams f) { family_ = f; }

  const Matrix& ad(std::size_t i) const { return ad_[i]; }
  const std::vector<Matrix>& ad_matrices() const { return ad_; }
  Matrix ad(std::span<const Scalar> x) const;
  Vector bracket(std::span<const Scalar> x, std::span<const Scalar> y) const;
  const Scalar& c(std::size_t i, std::size_t j, std::size_t k) const { return ad_[i](k, j); }
  Vector basis_vector(std::size_t i) const { return unit_vector(dim(), i); }
  /// Index of a basis label; throws InvalidParams.
  std::size_t index(const std::string& label) const;
  Vector element(const std::string& label) const { return basis_vector(index(label)); }

  const std::optional<MatrixRealization>& realization() const { return realization_; }
  void set_realization(MatrixRealization r) { realization_ = std::move(r); }
  /// Coordinate vectors of an attached Cartan subalgebra (may be empty).
  const std::vector<Vector>& cartan() const { return cartan_; }
  void set_cartan(std::vector<Vector> h);
  /// Degree per basis element of a compatible Z-grading, if attached.
  const std::optional<std::vector<int>>& zgrading() const { return zgrading_; }
  void set_zgrading(std::vector<int> deg);

  friend bool operator==(const LieSA& a, const LieSA& b) { return a.space_ == b.space_ && a.ad_ == b.ad_; }

 private:
  SuperSpace space_;
  std::vector<Matrix> ad_;
  FamilyParams family_;
  std::optional<MatrixRealization> realization_;
  std::vector<Vector> cartan_;
  std::optional<std::vector<int>> zgrading_;
};

using AlgebraPtr = std::shared_ptr<const LieSA>;

/// Builds structure constants from supermatrices of a realization.
LieSA matrix_algebra(SuperSpace labels_and_parities, SuperSpace natural, std::vector<Matrix> basis,
                     FamilyParams family = {});

/// gl(m|n). gl(1|1) uses the basis I, h, E, F; otherwise matrix units.
LieSA make_gl(std::size_t m, std::size_t n);
LieSA make_sl(std::size_t m, std::size_t n);
LieSA make_q(std::size_t n);
LieSA make_p(std::size_t n);
LieSA make_family(Family tag, std::size_t m, std::size_t n);
/// Purely even matrix algebras inside gl(n).
LieSA make_so(std::size_t n);
LieSA make_sp(std::size_t two_n);
/// Even algebra plus an odd abelian module given by action matrices (one per
/// even basis element on the odd module).
LieSA make_split(const LieSA& even, const std::vector<Matrix>& odd_action, const std::vector<std::string>& odd_labels = {});
/// Abelian algebra with given parities.
LieSA make_abelian(std::size_t even, std::size_t odd);

struct LieReport {
  bool pass = true;
  std::vector<std::string> violations;
};
LieReport verify_lie(const LieSA& g);

/// Subspace of a parent algebra, closed under the bracket.
struct Subalgebra {
  AlgebraPtr parent;
  Subspace span;
  std::size_t dim() const { return span.dim(); }
};

/// Throws InvalidParams if the span is not bracket-closed.
Subalgebra make_subalgebra(AlgebraPtr parent, const Subspace& span);
Subalgebra whole_algebra(AlgebraPtr g);
Subalgebra centralizer(AlgebraPtr g, const std::vector<Vector>& s);
/// Centralizer of the subspace spanned inside `within`.
Subalgebra centralizer_in(const Subalgebra& within, const std::vector<Vector>& s);
Subalgebra center(const Subalgebra& k);
Subalgebra subalgebra_closure(AlgebraPtr g, const std::vector<Vector>& vectors);
bool is_ideal(const LieSA& g, const Subspace& i);
/// Rows of the span of all [x, y] with x ∈ a, y ∈ b.
Subspace bracket_span(const LieSA& g, const Subspace& a, const Subspace& b);

/// Subalgebra as a standalone algebra: basis = even rows then odd rows of a
/// homogeneous basis. `embedding` rows are the chosen basis in parent coords.
struct SubalgebraAlgebra {
  LieSA algebra;
  Matrix embedding;
  CoordinateMap coords;
};
SubalgebraAlgebra as_algebra(const Subalgebra& k);

struct QuotientAlgebra {
  LieSA algebra;
  Quotient quotient;
  Matrix projection;  // quotient-dim x parent-dim
};
QuotientAlgebra quotient_algebra(const LieSA& g, const Subspace& ideal);

/// An even element is toral iff ad has squarefree minimal polynomial.
bool is_toral(const LieSA& g, std::span<const Scalar> t);

}  // namespace dslab
