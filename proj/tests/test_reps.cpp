#include <functional>
#include <random>

#include "doctest.h"
#include "dslab/rep.hpp"

using namespace dslab;

namespace {

AlgebraPtr share(LieSA g) { return std::make_shared<const LieSA>(std::move(g)); }

// Random module expression of bounded depth and dimension.
Rep random_rep(std::mt19937& rng, AlgebraPtr g, int depth) {
  int choice = depth == 0 ? static_cast<int>(rng() % 3) : static_cast<int>(rng() % 6);
  switch (choice) {
    case 0: return natural_rep(g);
    case 1: return trivial_rep(g, static_cast<int>(rng() % 2));
    case 2: return g->dim() <= 9 ? adjoint_rep(g) : natural_rep(g);
    case 3: return dual_rep(random_rep(rng, g, depth - 1));
    case 4: return parity_shift_rep(random_rep(rng, g, depth - 1));
    default: {
      Rep a = random_rep(rng, g, depth - 1);
      Rep b = random_rep(rng, g, depth - 1);
      if (a.dim() * b.dim() > 40) return a;
      return tensor_rep(a, b);
    }
  }
}

// Even endomorphisms supercommuting with every action matrix (equivariant maps).
std::size_t equivariant_endomorphisms(const Rep& r) {
  const std::size_t n = r.dim();
  std::vector<std::size_t> even_slots;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (r.space.parity(i) == r.space.parity(j)) even_slots.push_back(i * n + j);
  Matrix sys(n * n * r.action.size(), even_slots.size());
  for (std::size_t s = 0; s < even_slots.size(); ++s) {
    Matrix X(n, n);
    X(even_slots[s] / n, even_slots[s] % n) = 1;
    for (std::size_t a = 0; a < r.action.size(); ++a) {
      Matrix c = r.action[a] * X - X * r.action[a];
      for (std::size_t k = 0; k < n * n; ++k) sys(a * n * n + k, s) = c(k / n, k % n);
    }
  }
  return even_slots.size() - rank(sys);
}

}  // namespace

TEST_CASE("basic modules") {
  auto g = share(make_gl(2, 1));
  auto nat = natural_rep(g);
  CHECK(nat.space.sdim() == SDim{2, 1});
  CHECK(nat.action[g->index("E13")] == g->realization()->basis[g->index("E13")]);
  CHECK(verify_rep(nat).pass);

  auto g11 = share(make_gl(1, 1));
  auto vv = tensor_rep(natural_rep(g11), dual_rep(natural_rep(g11)));
  CHECK(vv.space.sdim() == SDim{2, 2});
  CHECK(verify_rep(vv).pass);
  CHECK(invariants(vv, whole_algebra(g11)).dim() == 1);
  CHECK(equivariant_endomorphisms(natural_rep(g11)) == 1);

  auto pt = parity_shift_rep(trivial_rep(g11));
  CHECK(pt.space.sdim() == SDim{0, 1});
  CHECK(verify_rep(pt).pass);

  auto ad = adjoint_rep(g11);
  CHECK(verify_rep(ad).pass);
  auto E = g11->index("E"), F = g11->index("F"), h = g11->index("h"), I = g11->index("I");
  CHECK(ad.action[E].column(F) == unit_vector(4, I));
  CHECK(ad.action[E].column(h) == scale(Scalar(-2), unit_vector(4, E)));

  CHECK(verify_rep(adjoint_rep(share(make_abelian(2, 1)))).pass);
  auto sl2 = adjoint_rep(share(make_sl(2, 0)));
  for (const auto& m : sl2.action) CHECK(trace(m) == 0);
  CHECK_THROWS_AS(tensor_rep(natural_rep(g), natural_rep(g11)), Error);
}

TEST_CASE("verify_rep detects a corrupted matrix") {
  auto g = share(make_gl(1, 1));
  auto r = natural_rep(g);
  r.action[g->index("h")](0, 0) = 3;
  auto rep = verify_rep(r);
  CHECK_FALSE(rep.pass);
  REQUIRE_FALSE(rep.violations.empty());
}

TEST_CASE("property: every constructed module is a representation") {
  std::mt19937 rng(42);
  for (auto g : {share(make_gl(1, 1)), share(make_gl(2, 1)), share(make_q(2))})
    for (int t = 0; t < 12; ++t) {
      Rep r = random_rep(rng, g, 3);
      CHECK(verify_rep(r).pass);
    }
}

TEST_CASE("invariants") {
  auto gl2 = share(make_gl(2, 0));
  auto so2 = matrix_subalgebra(gl2, make_so(2));
  CHECK(invariants(trivial_rep(gl2), so2).dim() == 1);
  CHECK(invariants(natural_rep(gl2), so2).dim() == 0);
  CHECK(invariants(gl_simple(gl2, {2, 0}), so2).dim() == 1);
  // generator set vs its closure
  auto g = share(make_gl(1, 1));
  auto r = tensor_rep(natural_rep(g), dual_rep(natural_rep(g)));
  std::vector<Vector> gens = {g->element("E"), g->element("F")};
  CHECK(invariants(r, gens) == invariants(r, subalgebra_closure(g, gens)));
}

TEST_CASE("c-invariants") {
  auto g = share(make_gl(1, 1));
  auto nat = natural_rep(g);
  auto zero = c_invariants(nat, Vector(4, Scalar(0)));
  CHECK(zero.rep.dim() == 2);
  CHECK(zero.centralizer.algebra.dim() == 4);
  Vector c = scale(Scalar(2), g->element("I"));
  CHECK(c_invariants(nat, c).rep.dim() == 0);
  auto g0 = degree_zero(g);
  auto K = kac_induce(g, trivial_rep(share(g0.algebra)), KacDirection::Thin);
  CHECK(c_invariants(K.rep, c).rep.dim() == 2);
  // a nilpotent "c" is rejected
  CHECK_THROWS_AS(c_invariants(nat, g->element("E")), Error);
}

TEST_CASE("simple gl(n)-modules") {
  auto gl2 = share(make_gl(2, 0));
  auto gl3 = share(make_gl(3, 0));
  CHECK(gl_simple(gl2, {1, 0}).dim() == 2);
  CHECK(gl_simple(gl2, {1, 1}).dim() == 1);
  CHECK(gl_simple(gl3, {2, 0, 0}).dim() == 6);
  CHECK_THROWS_AS(gl_simple(gl2, {0, 1}), Error);
  for (long a = 0; a <= 3; ++a)
    for (long b = 0; b <= a; ++b)
      for (long c = -1; c <= b; ++c) {
        std::vector<long> l = {a, b, c};
        auto r = gl_simple(gl3, l);
        CHECK(mpz_class(static_cast<unsigned long>(r.dim())) == weyl_dimension(l));
        CHECK(verify_rep(r).pass);
      }
}

TEST_CASE("Kac modules") {
  auto g = share(make_gl(1, 1));
  auto g0 = degree_zero(g);
  auto K = kac_induce(g, trivial_rep(share(g0.algebra)), KacDirection::Thin);
  CHECK(K.rep.space.sdim() == SDim{1, 1});
  CHECK(K.rep.action[g->index("E")].is_zero());
  CHECK(K.rep.action[g->index("F")] == Matrix{{0, 0}, {1, 0}});
  CHECK(verify_rep(K.rep).pass);

  auto g22 = share(make_gl(2, 2));
  auto g22_0 = degree_zero(g22);
  auto K22 = kac_induce(g22, trivial_rep(share(g22_0.algebra)), KacDirection::Thin);
  CHECK(K22.rep.space.sdim() == SDim{8, 8});
  CHECK(verify_rep(K22.rep).pass);

  auto gl2 = share(make_gl(2, 0));
  auto nat2 = natural_rep(gl2);
  auto dnat2 = dual_rep(nat2);
  auto l0 = block_pullback(*g22, g22_0, &nat2, &dnat2);
  CHECK(l0.dim() == 4);
  CHECK(verify_rep(l0).pass);
  auto Kn = kac_induce(g22, l0, KacDirection::Thin);
  CHECK(Kn.rep.dim() == 64);
  CHECK(verify_rep(Kn.rep).pass);

  for (std::size_t n : {2, 3}) {
    auto p = share(make_p(n));
    auto p0 = degree_zero(p);
    auto thin = kac_induce(p, trivial_rep(share(p0.algebra)), KacDirection::Thin);
    auto thick = kac_induce(p, trivial_rep(share(p0.algebra)), KacDirection::Thick);
    CHECK(thin.rep.dim() == (std::size_t(1) << (n * (n - 1) / 2)));
    CHECK(thick.rep.dim() == (std::size_t(1) << (n * (n + 1) / 2)));
    CHECK(verify_rep(thin.rep).pass);
    CHECK(verify_rep(thick.rep).pass);
  }
  CHECK_THROWS_AS(kac_induce(share(make_q(2)), trivial_rep(g), KacDirection::Thin), Error);
}

TEST_CASE("exterior monomial order") {
  auto m = exterior_monomials(3);
  CHECK(m == std::vector<unsigned>{0, 1, 2, 4, 3, 5, 6, 7});
  CHECK(wedge_sort({1, 0}) == std::pair<int, unsigned>{-1, 3});
  CHECK(wedge_sort({0, 0}).first == 0);
}

TEST_CASE("property: sphericality of so(n) and sp(2) in gl(n)") {
  for (std::size_t n : {2, 3}) {
    auto gl = share(make_gl(n, 0));
    auto so = matrix_subalgebra(gl, make_so(n));
    std::vector<long> l(n, 0);
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
      if (i == n) {
        bool even = true;
        for (std::size_t k = 0; k + 1 < n; ++k) even &= (l[k] - l[k + 1]) % 2 == 0;
        auto d = invariants(gl_simple(gl, l), so).dim();
        CHECK(d <= 1);
        CHECK((d == 1) == even);
        return;
      }
      for (long v = 0; v <= (i ? l[i - 1] : 4); ++v) {
        l[i] = v;
        rec(i + 1);
      }
    };
    rec(0);
  }
  auto gl2 = share(make_gl(2, 0));
  auto sp = matrix_subalgebra(gl2, make_sp(2));
  for (long a = 0; a <= 4; ++a)
    for (long b = 0; b <= a; ++b) {
      auto d = invariants(gl_simple(gl2, {a, b}), sp).dim();
      CHECK(d <= 1);
      CHECK((d == 1) == (a == b));
    }
}
