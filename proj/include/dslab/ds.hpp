#pragma once

#include "dslab/normal_forms.hpp"
#include "dslab/report.hpp"
#include "dslab/rep.hpp"

namespace dslab {

/// Cohomology of ρ(u) on M^c = ker ρ(c).
struct DSResult {
  Rep source;
  OddElem u;
  Subspace invariant;  // M^c
  Subspace kernel;     // ker u on M^c
  Subspace image;      // u(M^c)
  Quotient quotient;   // kernel / image
  SuperSpace cohomology;

  /// Rows: cocycle representatives in source coordinates.
  const Matrix& representatives() const { return quotient.reps; }
  std::size_t dim() const { return quotient.dim(); }
  /// Class coordinates of a cocycle; throws QuotientFailure outside ker u.
  Vector project(std::span<const Scalar> v) const { return quotient.project(v); }
};

/// Throws NotHomogeneous, NotSemisimpleAction.
DSResult ds(const Rep& r, const OddElem& u);

/// Map on cohomology induced by a module map f (target-dim x source-dim).
Matrix ds_map(const DSResult& from, const DSResult& to, const Matrix& f);

struct GuAlgebra {
  AlgebraPtr algebra;
  Matrix reps;     // rows: representatives in parent coordinates
  DSResult adjoint;
};
/// g_u with bracket of representatives projected back; the bracket is
/// recomputed with shifted representatives (RepresentativeInconsistency).
GuAlgebra gu_algebra(AlgebraPtr g, const OddElem& u);

/// g_u-module structure on DS_u M, checked against a second representative choice.
Rep induced_action(const DSResult& d, const GuAlgebra& gu);

/// (M⊗N)_u ≅ M_u ⊗ N_u via [m]⊗[n] ↦ [m⊗n].
Report tensor_iso_check(const Rep& v, const Rep& w, const OddElem& u);

/// Long exact sequence for 0 → S → V → V/S → 0 with the zig-zag connecting map.
Report les_check(const Rep& v, const Subspace& sub, const OddElem& u);

/// Even and odd dimensions agree on every joint weight of the attached
/// Cartan of g_u (its induced action on the cohomology).
Report multiplicity_pairing_check(const DSResult& d, const GuAlgebra& gu);

}  // namespace dslab
