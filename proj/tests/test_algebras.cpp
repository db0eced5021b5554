#include <random>

#include "doctest.h"
#include "dslab/algebra.hpp"

using namespace dslab;

namespace {

AlgebraPtr share(LieSA g) { return std::make_shared<const LieSA>(std::move(g)); }

// Independent oracle: centralizer dimension by solving [X, B_j] = 0 on the
// realization matrices directly (never touching structure constants).
SDim matrix_centralizer_sdim(const LieSA& g, const std::vector<Matrix>& s) {
  const auto& R = *g.realization();
  const std::size_t d = g.dim(), N = R.natural.dim();
  SDim out;
  for (int p = 0; p < 2; ++p) {
    std::vector<std::size_t> idx = g.space().indices_of_parity(p);
    Matrix sys(N * N * s.size(), idx.size());
    for (std::size_t c = 0; c < idx.size(); ++c)
      for (std::size_t t = 0; t < s.size(); ++t) {
        Matrix br = super_commutator(R.natural, R.basis[idx[c]], s[t]);
        for (std::size_t r = 0; r < N * N; ++r) sys(t * N * N + r, c) = br(r / N, r % N);
      }
    (p ? out.odd : out.even) = idx.size() - rank(sys);
  }
  (void)d;
  return out;
}

}  // namespace

TEST_CASE("family dimensions and presentations") {
  auto g = make_gl(1, 1);
  CHECK(g.sdim() == SDim{2, 2});
  CHECK(g.space().labels() == std::vector<std::string>{"I", "h", "E", "F"});
  CHECK(g.bracket(g.element("E"), g.element("F")) == g.element("I"));
  CHECK(make_p(2).sdim() == SDim{4, 4});
  CHECK(make_p(3).sdim() == SDim{9, 9});
  CHECK(make_q(2).sdim() == SDim{4, 4});
  CHECK(make_gl(2, 1).sdim() == SDim{5, 4});
  CHECK(make_sl(2, 1).sdim() == SDim{4, 4});
  CHECK(make_so(3).dim() == 3);
  CHECK(make_sp(2).dim() == 3);
  CHECK(make_sp(4).dim() == 10);
  CHECK_THROWS_AS(make_gl(0, 0), Error);
  CHECK_THROWS_AS(make_sp(3), Error);
}

TEST_CASE("verify_lie passes on all families") {
  std::vector<LieSA> gs = {make_gl(1, 1), make_gl(2, 1), make_gl(2, 2), make_gl(3, 0), make_sl(2, 1), make_sl(2, 2),
                           make_q(2),     make_q(3),     make_p(2),     make_p(3),     make_so(3),    make_sp(2),
                           make_sp(4),    make_abelian(2, 3)};
  for (const auto& g : gs) {
    auto r = verify_lie(g);
    CHECK_MESSAGE(r.pass, to_string(g.family().tag), " ", g.dim());
  }
}

TEST_CASE("verify_lie names a corrupted triple") {
  auto g = make_gl(2, 1);
  auto ad = g.ad_matrices();
  // [E12, E21] = E11 - E22; corrupt the E11 coefficient in both orders
  std::size_t i = g.index("E12"), j = g.index("E21"), k = g.index("E11");
  ad[i](k, j) = 2;
  ad[j](k, i) = -2;
  LieSA bad(g.space(), ad);
  auto r = verify_lie(bad);
  CHECK_FALSE(r.pass);
  REQUIRE_FALSE(r.violations.empty());
  CHECK(r.violations.front().find("jacobi") != std::string::npos);
}

TEST_CASE("split algebras") {
  auto gl1 = make_gl(1, 0);
  auto s1 = make_split(gl1, {Matrix{{1}}});
  CHECK(verify_lie(s1).pass);
  CHECK(s1.sdim() == SDim{1, 1});
  auto gl2 = make_gl(2, 0);
  std::vector<Matrix> nat;
  for (const auto& m : gl2.realization()->basis) nat.push_back(m);
  auto s3 = make_split(gl2, nat);
  CHECK(verify_lie(s3).pass);
  CHECK(s3.sdim() == SDim{4, 2});
  // a non-representation breaks Jacobi
  auto bad = make_split(gl2, {Matrix{{1, 0}, {0, 0}}, Matrix{{1, 0}, {0, 0}}, Matrix{{0, 0}, {0, 0}}, Matrix{{0, 1}, {0, 0}}});
  CHECK_FALSE(verify_lie(bad).pass);
}

TEST_CASE("centralizers and centers") {
  auto g = share(make_gl(4, 4));
  Matrix c = Matrix::diagonal(Vector{1, 1, -1, 0, 1, 1, -1, 0});
  auto cv = g->realization()->coordinates(c);
  auto z = centralizer(g, {cv});
  auto hb = homogeneous_basis(g->space(), z.span);
  CHECK(hb.sdim() == SDim{12, 12});
  CHECK(matrix_centralizer_sdim(*g, {c}) == SDim{12, 12});

  auto g11 = share(make_gl(1, 1));
  auto zc = center(whole_algebra(g11));
  CHECK(zc.dim() == 1);
  CHECK(zc.span.contains(g11->element("I")));

  auto q2 = share(make_q(2));
  auto zq = center(whole_algebra(q2));
  CHECK(homogeneous_basis(q2->space(), zq.span).sdim() == SDim{1, 0});
  CHECK(matrix_centralizer_sdim(*q2, q2->realization()->basis) == SDim{1, 0});
}

TEST_CASE("quotients") {
  auto g = make_gl(1, 1);
  auto q = quotient_algebra(g, Subspace::span(4, {g.element("I")}));
  CHECK(q.algebra.sdim() == SDim{1, 2});
  CHECK(verify_lie(q.algebra).pass);
  auto id = quotient_algebra(g, Subspace(4));
  CHECK(id.algebra == g);
  CHECK_THROWS_AS(quotient_algebra(g, Subspace::span(4, {g.element("E")})), Error);
  auto ab = make_abelian(2, 2);
  auto qa = quotient_algebra(ab, Subspace::span(4, {{1, 0, 1, 0}}));
  CHECK(qa.algebra.dim() == 3);
}

TEST_CASE("subalgebra closure") {
  auto g = share(make_gl(1, 1));
  CHECK(subalgebra_closure(g, {g->element("E")}).dim() == 1);
  auto ef = subalgebra_closure(g, {g->element("E"), g->element("F")});
  CHECK(ef.dim() == 3);
  CHECK(ef.span.contains(g->element("I")));
  auto sp2 = share(make_sp(2));
  CHECK(subalgebra_closure(sp2, {sp2->element("B11"), sp2->element("C11")}).dim() == 3);
}

TEST_CASE("property: centralizer monotone, center inside every centralizer") {
  std::mt19937 rng(3);
  for (auto g0 : {make_gl(2, 1), make_q(2), make_p(2)}) {
    auto g = share(g0);
    auto zg = center(whole_algebra(g));
    CHECK(centralizer(g, {}).dim() == g->dim());
    for (int t = 0; t < 6; ++t) {
      std::vector<Vector> s;
      std::size_t k = 1 + rng() % 3;
      for (std::size_t i = 0; i < k; ++i) s.push_back(g->basis_vector(rng() % g->dim()));
      auto c1 = centralizer(g, s);
      s.push_back(g->basis_vector(rng() % g->dim()));
      auto c2 = centralizer(g, s);
      CHECK(c1.span.contains(c2.span));
      CHECK(c2.span.contains(zg.span));
    }
  }
}

TEST_CASE("property: quotient projection is a bracket homomorphism") {
  auto g = make_gl(2, 2);
  Vector id(g.dim(), Scalar(0));
  for (const auto& h : g.cartan()) id = add(id, h);
  auto q = quotient_algebra(g, Subspace::span(g.dim(), {id}));
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = 0; j < g.dim(); ++j) {
      Vector lhs = q.projection.apply(g.bracket(g.basis_vector(i), g.basis_vector(j)));
      Vector rhs = q.algebra.bracket(q.projection.column(i), q.projection.column(j));
      CHECK(lhs == rhs);
    }
}

TEST_CASE("Cartan elements are toral") {
  for (auto g : {make_gl(1, 1), make_gl(2, 2), make_q(3), make_p(3)}) {
    for (const auto& h : g.cartan()) CHECK(is_toral(g, h));
    CHECK(g.space().has_weights());
  }
  auto g = make_gl(1, 1);
  CHECK_FALSE(is_toral(g, g.element("E")));
}

TEST_CASE("subalgebra as a standalone algebra") {
  auto g = share(make_gl(2, 2));
  auto c = centralizer(g, {g->element("E13")});
  auto a = as_algebra(c);
  CHECK(verify_lie(a.algebra).pass);
  CHECK(a.algebra.dim() == c.dim());
}
