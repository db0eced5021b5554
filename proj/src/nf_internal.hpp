#pragma once

#include <functional>

#include "dslab/normal_forms.hpp"

namespace dslab::nf {

Matrix block(const Matrix& m, std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc);
std::vector<Vector> rows_of(const Subspace& s);
/// Appends basis rows of s that are outside span(vecs).
void extend(std::vector<Vector>& vecs, const Subspace& s, std::size_t ambient);
/// Candidates whose images under f are independent (greedy, in order).
std::vector<Vector> independent_images(const std::vector<Vector>& cand, const Matrix& f);
bool rational_square(const Scalar& q, Scalar* root = nullptr);

using Form = std::function<Scalar(const Vector&, const Vector&)>;
/// Orthogonal basis for a symmetric form: (vector, self-value), nonzero values first.
std::vector<std::pair<Vector, Scalar>> diagonalize(const Form& form, std::vector<Vector> vecs);

RankData p_rank(const Matrix& B, const Matrix& C);
/// A with A B A^t and A^{-t} C A^{-1} standard for the given data.
Matrix p_reduce(const Matrix& B, const Matrix& C, const RankData& data);
void p_standard_blocks(std::size_t n, const RankData& data, Matrix& B, Matrix& C);

}  // namespace dslab::nf
