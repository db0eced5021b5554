#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dslab/linalg.hpp"

namespace dslab {

using Weight = std::vector<long>;

struct SDim {
  std::size_t even = 0;
  std::size_t odd = 0;
  long signed_dim() const { return static_cast<long>(even) - static_cast<long>(odd); }
  std::size_t total() const { return even + odd; }
  friend bool operator==(const SDim&, const SDim&) = default;
};

std::string to_string(const SDim& d);

/// Finite-dimensional Z/2-graded space with an ordered labeled basis.
class SuperSpace {
 public:
  SuperSpace() = default;
  /// Throws DuplicateLabel, WeightArityMismatch, DimensionMismatch.
  SuperSpace(std::vector<std::string> labels, std::vector<int> parities,
             std::optional<std::vector<Weight>> weights = std::nullopt);

  /// C^{p|q} with labels e1.. (even first).
  static SuperSpace standard(std::size_t p, std::size_t q, const std::string& prefix = "e");

  std::size_t dim() const { return parities_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<int>& parities() const { return parities_; }
  int parity(std::size_t i) const { return parities_[i]; }
  bool has_weights() const { return weights_.has_value(); }
  const std::vector<Weight>& weights() const { return *weights_; }
  std::size_t weight_arity() const { return weights_ && !weights_->empty() ? weights_->front().size() : 0; }
  SDim sdim() const;
  std::vector<std::size_t> indices_of_parity(int p) const;

  friend bool operator==(const SuperSpace&, const SuperSpace&) = default;

 private:
  std::vector<std::string> labels_;
  std::vector<int> parities_;
  std::optional<std::vector<Weight>> weights_;
};

long sdim(const SuperSpace& v);

/// Tensor product v ⊗ w, basis (i, j) at index i * dim w + j.
SuperSpace tensor(const SuperSpace& v, const SuperSpace& w);
/// Dual space; weights negated, parities kept, basis e_i^* paired with e_i.
SuperSpace dual(const SuperSpace& v);
SuperSpace parity_shift(const SuperSpace& v);
/// v ⊕ w; v's basis first.
SuperSpace direct_sum(const SuperSpace& v, const SuperSpace& w);

/// Index maps realizing a combination of spaces.
struct TensorIndex {
  std::size_t left_dim, right_dim;
  std::size_t operator()(std::size_t i, std::size_t j) const { return i * right_dim + j; }
  std::pair<std::size_t, std::size_t> split(std::size_t k) const { return {k / right_dim, k % right_dim}; }
};

/// Parity of a vector: 0 or 1 if homogeneous and nonzero, nullopt if mixed,
/// -1 for the zero vector.
std::optional<int> vector_parity(const SuperSpace& s, std::span<const Scalar> v);

/// Parity of a linear map between superspaces (target rows, source cols):
/// 0 even, 1 odd, -1 for the zero map, nullopt if inhomogeneous.
std::optional<int> map_parity(const SuperSpace& source, const SuperSpace& target, const Matrix& m);

/// Basis of a graded subspace split into even and odd vectors (rows). Throws
/// NotGraded when the subspace is not spanned by homogeneous vectors.
struct GradedBasis {
  Matrix even;
  Matrix odd;
  SDim sdim() const { return {even.rows(), odd.rows()}; }
};
GradedBasis homogeneous_basis(const SuperSpace& s, const Subspace& sub);

/// Partition of basis indices by joint eigenvalue tuple of the given even
/// diagonal matrices. Blocks are ordered by their first index. Throws
/// NotDiagonal.
std::vector<std::vector<std::size_t>> weight_decompose(const SuperSpace& v, const std::vector<Matrix>& diagonal_maps);

}  // namespace dslab
