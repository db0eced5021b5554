#pragma once

#include <optional>

#include "dslab/algebra.hpp"

namespace dslab {

/// Normal-form data of a homogeneous odd element.
///   gl/sl: r root vectors, of which the last s are lower (even -> odd) ones with
///          zero tail; coefficients c_1..c_k (k <= r - s) are the nonzero
///          eigenvalues of u^2, ascending.
///   q:     r blocks T_{E_{2i-1,2i}} and k scalar blocks c_j T_{E_jj}; rank r + k/2.
///   p:     r pairs e_{ε_{2i-1}+ε_{2i}}, d ∈ {0,1} for e_{2ε_n}, and s pairs
///          c_j e_{-ε_{2j-1}-ε_{2j}}; t = max(r, s).
struct RankData {
  Family family = Family::GL;
  long r = 0;
  long k = 0;
  long s = 0;
  long d = 0;
  std::vector<Scalar> coefficients;

  Scalar rank() const;
  long t() const { return std::max(r, s); }
  friend bool operator==(const RankData&, const RankData&) = default;
};
std::string to_string(const RankData& data);

struct OddElem {
  AlgebraPtr parent;
  Vector coords;
  Vector c;  // [u, u]
  bool homogeneous = false;
  std::optional<RankData> rank;
};
/// Wraps u with its square and homogeneity flag; throws NotOdd.
OddElem make_odd(AlgebraPtr g, Vector u);

/// [u, u]; throws NotOdd unless u is supported on odd basis elements.
Vector square(const LieSA& g, std::span<const Scalar> u);
/// ad [u, u] has squarefree minimal polynomial.
bool is_homogeneous(const LieSA& g, std::span<const Scalar> u);

/// Family-specific rank data; throws NotHomogeneous, IrrationalSpectrum.
RankData rank_of(const LieSA& g, std::span<const Scalar> u);

struct Normalized {
  Matrix conjugator;  // even, on the natural module: standard = P u P^{-1}
  OddElem standard;
};
/// Staged reduction to the standard element of the rank data. For p(n) the
/// symmetric part must split over Q; otherwise IrrationalSpectrum.
Normalized normalize(AlgebraPtr g, std::span<const Scalar> u);

/// Canonical rank data (coefficient order, zero tails dropped); throws RankOutOfRange.
RankData canonical(const LieSA& g, RankData data);
/// Literal standard element in basis coordinates; throws RankOutOfRange.
Vector standard_u(const LieSA& g, const RankData& data);
OddElem standard_elem(AlgebraPtr g, const RankData& data);

/// p(n): u+ = [[0, I], [0, 0]] and, for even n, u- = [[0, 0], [J, 0]] with J
/// tridiagonal (1 above, -1 below the diagonal).
Vector p_plus(const LieSA& p);
Vector p_minus(const LieSA& p);

/// Coordinates of P x P^{-1} for x given in basis coordinates.
Vector conjugate(const LieSA& g, const Matrix& P, std::span<const Scalar> x);

}  // namespace dslab
