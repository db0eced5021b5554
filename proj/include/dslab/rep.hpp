#pragma once

#include "dslab/algebra.hpp"

namespace dslab {

/// Action of an algebra on a superspace, one matrix per algebra basis element.
struct Rep {
  AlgebraPtr algebra;
  SuperSpace space;
  std::vector<Matrix> action;

  std::size_t dim() const { return space.dim(); }
  Matrix act(std::span<const Scalar> x) const;
};

/// Same pointer or structurally equal; otherwise AlgebraMismatch.
void require_same_algebra(const LieSA& a, const LieSA& b);

/// Attaches integer weights from the algebra's Cartan when it acts diagonally.
Rep with_weights(Rep r);

Rep trivial_rep(AlgebraPtr g, int parity = 0);
/// One-dimensional module with the given scalar per basis element.
Rep character_rep(AlgebraPtr g, const std::vector<Scalar>& values, const std::string& label = "l");
Rep natural_rep(AlgebraPtr g);
Rep adjoint_rep(AlgebraPtr g);
Rep dual_rep(const Rep& r);
Rep tensor_rep(const Rep& a, const Rep& b);
Rep parity_shift_rep(const Rep& r);
Rep direct_sum_rep(const Rep& a, const Rep& b);
/// Ber^k of gl(m|n): x acts by k * str(x).
Rep berezinian_rep(AlgebraPtr g, long k);

struct RepReport {
  bool pass = true;
  std::vector<std::string> violations;
};
RepReport verify_rep(const Rep& r);

/// Joint kernel of the action of the given elements (parent coordinates).
Subspace invariants(const Rep& r, const std::vector<Vector>& elements);
Subspace invariants(const Rep& r, const Subalgebra& k);

/// Submodule spanned by homogeneous rows, as a Rep; throws NotASubmodule.
struct SubRep {
  Rep rep;
  Matrix basis;  // rows in source coordinates
  CoordinateMap coords;
};
SubRep sub_rep(const Rep& r, const Subspace& s);
/// Quotient module r / s with representatives at standard basis vectors.
struct QuotientRep {
  Rep rep;
  Quotient quotient;
  Matrix projection;  // quotient-dim x source-dim
};
QuotientRep quotient_rep(const Rep& r, const Subspace& s);

/// Restriction to a subalgebra given as a standalone algebra.
Rep restrict_rep(const Rep& r, const SubalgebraAlgebra& k);

struct CInvariants {
  Rep rep;  // over the centralizer of c
  Matrix basis;
  SubalgebraAlgebra centralizer;
};
/// 0-eigenspace of ρ(c) over g^c; throws NotSemisimpleAction.
CInvariants c_invariants(const Rep& r, std::span<const Scalar> c);

/// Irreducible gl(n)-module of dominant highest weight λ.
Rep gl_simple(AlgebraPtr gln, const std::vector<long>& lambda);
/// Independent dimension oracle.
mpz_class weyl_dimension(const std::vector<long>& lambda);
/// Subalgebra of a matrix algebra spanned by the realization of `sub`.
Subalgebra matrix_subalgebra(AlgebraPtr g, const LieSA& sub);

enum class KacDirection { Thin, Thick };
const char* to_string(KacDirection d);

/// Degree-zero part of a Z-graded algebra as a standalone algebra.
SubalgebraAlgebra degree_zero(AlgebraPtr g);
/// Degree-zero module pulled back from block actions diag(A, D) ↦
/// ρ_top(A) ⊗ 1 + 1 ⊗ ρ_bottom(D); a null block is ignored.
Rep block_pullback(const LieSA& g, const SubalgebraAlgebra& g0, const Rep* top, const Rep* bottom);

struct KacModule {
  Rep rep;
  std::vector<std::size_t> free;      // parent indices of the exterior generators
  std::vector<std::size_t> opposite;  // parent indices of the opposite odd part
  std::vector<unsigned> monomials;    // bitmask over `free` per exterior basis element
  std::vector<std::size_t> position;  // mask -> monomial position
  std::size_t l0_dim = 0;
  std::size_t index(unsigned mask, std::size_t v) const { return position[mask] * l0_dim + v; }
};
/// Thin: ∧g_{-1} ⊗ L0. Thick: ∧g_{+1} ⊗ L0. Throws GradingViolation.
KacModule kac_induce(AlgebraPtr g, const Rep& l0, KacDirection dir);

/// Exterior monomials on p generators: graded by degree, lexicographic inside.
std::vector<unsigned> exterior_monomials(std::size_t p);
/// Sign and mask of y_{i_1} ∧ ... ∧ y_{i_k} in the ordered basis (0 if repeated).
std::pair<int, unsigned> wedge_sort(const std::vector<std::size_t>& indices);

}  // namespace dslab
