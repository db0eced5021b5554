#include <random>

#include "doctest.h"
#include "dslab/superspace.hpp"

using namespace dslab;

TEST_CASE("building spaces") {
  SuperSpace v({"a", "b", "x", "y", "z"}, {0, 0, 1, 1, 1});
  CHECK(v.sdim() == SDim{2, 3});
  CHECK(sdim(v) == -1);
  CHECK(SuperSpace().dim() == 0);
  CHECK(sdim(SuperSpace()) == 0);
  CHECK_THROWS_AS(SuperSpace({"a", "a"}, {0, 1}), Error);
  std::vector<Weight> w(2, Weight(8, 1));
  SuperSpace wv({"p", "q"}, {0, 1}, w);
  CHECK(wv.weight_arity() == 8);
  CHECK_THROWS_AS(SuperSpace({"p", "q"}, {0, 1}, std::vector<Weight>{{1}, {1, 2}}), Error);
}

TEST_CASE("combinations") {
  auto c11 = SuperSpace::standard(1, 1);
  CHECK(tensor(c11, c11).sdim() == SDim{2, 2});
  CHECK(parity_shift(SuperSpace::standard(2, 3)).sdim() == SDim{3, 2});
  SuperSpace line({"l"}, {0}, std::vector<Weight>{{1}});
  CHECK(dual(line).weights()[0] == Weight{-1});
  CHECK(dual(dual(line)) == line);
  CHECK_THROWS_AS(tensor(line, c11), Error);
  // tensor basis is lexicographic
  auto t = tensor(SuperSpace::standard(1, 1, "a"), SuperSpace::standard(2, 0, "b"));
  CHECK(t.labels()[1] == "a1⊗b2");
  CHECK(t.labels()[2] == "a2⊗b1");
  CHECK(t.parity(2) == 1);
}

TEST_CASE("property: superdimension is multiplicative and additive") {
  std::mt19937 rng(8);
  for (int i = 0; i < 25; ++i) {
    auto v = SuperSpace::standard(rng() % 4, rng() % 4, "v");
    auto w = SuperSpace::standard(rng() % 4, rng() % 4, "w");
    CHECK(sdim(tensor(v, w)) == sdim(v) * sdim(w));
    CHECK(sdim(parity_shift(v)) == -sdim(v));
    CHECK(sdim(direct_sum(v, w)) == sdim(v) + sdim(w));
    CHECK(dual(dual(v)) == v);
  }
}

TEST_CASE("weight decomposition") {
  auto v = SuperSpace::standard(3, 0);
  auto b = weight_decompose(v, {Matrix::diagonal(Vector{1, 1, 2})});
  CHECK(b == std::vector<std::vector<std::size_t>>{{0, 1}, {2}});
  CHECK(weight_decompose(v, {}).size() == 1);
  auto v2 = SuperSpace::standard(2, 0);
  CHECK(weight_decompose(v2, {Matrix::diagonal(Vector{1, 2}), Matrix::diagonal(Vector{3, 3})}).size() == 2);
  CHECK_THROWS_AS(weight_decompose(v2, {Matrix{{1, 1}, {0, 1}}}), Error);
}

TEST_CASE("property: blockwise kernel dimension equals global") {
  std::mt19937 rng(2);
  for (int t = 0; t < 20; ++t) {
    const std::size_t n = 6;
    auto v = SuperSpace::standard(3, 3);
    Vector d;
    for (std::size_t i = 0; i < n; ++i) d.push_back(static_cast<long>(rng() % 3));
    Matrix h = Matrix::diagonal(d);
    // a map commuting with h: nonzero only inside equal-eigenvalue blocks
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (d[i] == d[j] && rng() % 2) m(i, j) = static_cast<long>(rng() % 5) - 2;
    std::size_t blockwise = 0;
    for (const auto& blk : weight_decompose(v, {h})) blockwise += kernel(m.submatrix(blk, blk)).dim();
    CHECK(blockwise == kernel(m).dim());
  }
}

TEST_CASE("graded subspaces") {
  auto v = SuperSpace::standard(1, 1);
  auto g = homogeneous_basis(v, Subspace::span(2, {{1, 0}}));
  CHECK(g.sdim() == SDim{1, 0});
  CHECK_THROWS_AS(homogeneous_basis(v, Subspace::span(2, {{1, 1}})), Error);
  CHECK(vector_parity(v, Vector{0, 3}) == 1);
  CHECK_FALSE(vector_parity(v, Vector{1, 3}).has_value());
}
