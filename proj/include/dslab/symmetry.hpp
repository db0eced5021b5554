#pragma once

#include "dslab/ds.hpp"

namespace dslab {

/// g(u,k) = (c(k)/Z(k))_u together with the data needed to move classes around.
struct SymmetryAlgebra {
  AlgebraPtr parent;
  OddElem u;
  Subspace k;            // parent coordinates
  Subspace center;       // Z(k), parent coordinates
  Matrix ck;             // rows: basis of c(k) in parent coordinates
  CoordinateMap ck_coords;
  AlgebraPtr reduced;    // c(k)/Z(k)
  Matrix reduced_projection;  // reduced-dim x ck-dim
  Matrix reduced_reps;        // rows: reduced basis in ck coordinates
  GuAlgebra cohomology;  // (c(k)/Z(k))_u; its algebra is g(u,k)
  GuAlgebra gu;          // g_u of the parent
  Matrix gu_injection;   // dim g(u,k) x dim g_u

  const AlgebraPtr& base() const { return cohomology.algebra; }
  /// Class of y ∈ c(k) with [u, y] ∈ Z(k).
  Vector class_of(std::span<const Scalar> y) const;
  /// Parent-coordinate representative of a class.
  Vector lift(std::span<const Scalar> cls) const;
};

/// Throws NotInBracketImage if k ⊄ [u, g^c], NotToral if its toral part is not
/// ad-semisimple, NotSemisimpleAction if g ≠ c(k) ⊕ [k, g].
SymmetryAlgebra g_u_k(AlgebraPtr g, const OddElem& u, const Subspace& k);

/// The explicit t' for u in standard form (or u₊ of p(n)); throws NotStandardForm.
Subspace family_toral(AlgebraPtr g, const OddElem& u);

/// Certifies g(u,t') ≅ g_u × C^{0|r}: ideal, odd abelian quotient of dim r,
/// odd central complement.
Report product_structure_check(const SymmetryAlgebra& s, long r);

/// φ_u: g(u,k) → g(u,t) for a toral t ⊆ k; injectivity and the dimension gap.
Report compare_toral(AlgebraPtr g, const OddElem& u, const Subspace& k, const Subspace& t);

enum class CEVariant { Homology, Cohomology };

/// Chevalley-Eilenberg complex of an even algebra with coefficients in L.
/// Chains ∧^p k ⊗ L (cochains Hom(∧^p k, L)) in exterior order, L fastest.
struct CEComplex {
  CEVariant variant = CEVariant::Homology;
  std::vector<unsigned> monomials;
  std::size_t l_dim = 0;
  Matrix differential;  // on the whole complex
  std::vector<std::size_t> homology;  // dimension per degree
};
CEComplex ce_complex(const LieSA& k, const Rep& l, CEVariant variant);

/// Invariants of the (co)adjoint action on ∧k (∧k*).
struct InvariantAlgebra {
  SuperSpace space;               // parity = degree mod 2
  std::vector<int> degree;
  Matrix basis;                   // rows in exterior coordinates
  std::vector<Matrix> products;   // left multiplication by each basis element
  std::vector<long> poincare;     // coefficient per degree
  std::size_t dim() const { return degree.size(); }
};
InvariantAlgebra invariant_exterior(const LieSA& k, bool dualize = false);

/// Compares ρ(u) on K(L0) with the transported CE homology differential of
/// k = [u, g∓1] acting on L0. Throws ImageMismatch if k is given and differs.
Report kac_differential_compare(AlgebraPtr g, const Rep& l0, KacDirection dir, const OddElem& u,
                                const Subspace* k = nullptr);

/// DS_u K(L0) ≅ R ⊗ L0^k with R = (∧g∓1)^k acting by exterior multiplication.
Report r_freeness(AlgebraPtr g, const Rep& l0, KacDirection dir, const OddElem& u);

/// Evaluation pairing between (∧k)^k and (∧k*)^k.
Report duality_pairing_check(const LieSA& k);

/// An equivariant complement End(V) = ρ(g) ⊕ W, W given in flattened
/// row-major coordinates of End(V).
struct SplitCertificate {
  Rep module;
  Subspace complement;
};

struct SplitTilde {
  AlgebraPtr tilde;       // c(u)/[u, g0]
  Matrix injection;       // dim tilde x dim g_u
  Report report;
};
/// Throws NotSplit unless the odd part is an abelian ideal.
SplitTilde split_tilde(AlgebraPtr g, const OddElem& u, const SplitCertificate* cert = nullptr);

}  // namespace dslab
