#include <random>

#include "doctest.h"
#include "dslab/normal_forms.hpp"

using namespace dslab;

namespace {

AlgebraPtr share(LieSA g) { return std::make_shared<const LieSA>(std::move(g)); }

Matrix random_invertible(std::mt19937& rng, std::size_t n) {
  Matrix a(n, n);
  do {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) a(i, j) = static_cast<long>(rng() % 5) - 2;
  } while (rank(a) < n);
  return a;
}

// Random even base change preserving the family's defining structure.
Matrix random_even(std::mt19937& rng, const LieSA& g) {
  const std::size_t m = g.family().m, n = g.family().n;
  switch (g.family().tag) {
    case Family::Q: {
      Matrix a = random_invertible(rng, m);
      return direct_sum(a, a);
    }
    case Family::P: {
      Matrix a = random_invertible(rng, m);
      return direct_sum(a, inverse(a).transpose());
    }
    default: return direct_sum(random_invertible(rng, m), random_invertible(rng, n));
  }
}

Vector from_natural(const LieSA& g, const Matrix& U) { return g.realization()->coordinates(U); }

// Every admissible rank datum with small coefficient choices.
std::vector<RankData> admissible(const LieSA& g) {
  std::vector<RankData> out;
  const long m = static_cast<long>(g.family().m), n = static_cast<long>(g.family().n);
  std::vector<Scalar> pool = {Scalar(1), Scalar(-2), Scalar(1) / 3};
  switch (g.family().tag) {
    case Family::Q:
      for (long r = 0; 2 * r <= m; ++r)
        for (long k = 0; 2 * r + k <= m; ++k) {
          RankData d{Family::Q, r, k};
          for (long j = 0; j < k; ++j) d.coefficients.push_back(pool[j % 3]);
          out.push_back(d);
        }
      break;
    case Family::P:
      for (long dd = 0; dd <= 1; ++dd)
        for (long r = 0; 2 * r + dd <= m; ++r)
          for (long s = 0; 2 * s <= m; ++s) {
            if (dd && (2 * r >= m || 2 * s >= m)) continue;
            RankData d{Family::P, r, 0, s, dd};
            for (long j = 0; j < s; ++j) d.coefficients.push_back(j < r ? pool[j % 3] : Scalar(1));
            out.push_back(d);
          }
      break;
    default:
      for (long r = 0; r <= std::min(m, n); ++r)
        for (long s = 0; s <= r; ++s)
          for (long k = 0; k + s <= r; ++k) {
            RankData d{g.family().tag, r, k, s};
            for (long j = 0; j < k; ++j) d.coefficients.push_back(pool[j % 3]);
            out.push_back(d);
          }
  }
  return out;
}

}  // namespace

TEST_CASE("square and homogeneity") {
  auto g = share(make_gl(1, 1));
  CHECK(is_zero(square(*g, g->element("E"))));
  CHECK(is_homogeneous(*g, g->element("E")));
  Vector ef = add(g->element("E"), g->element("F"));
  // oracle: c = 2 u^2 as a matrix
  Matrix U = g->realization()->element(ef);
  CHECK(square(*g, ef) == from_natural(*g, Scalar(2) * (U * U)));
  CHECK(square(*g, ef) == scale(Scalar(2), g->element("I")));
  CHECK(is_homogeneous(*g, ef));
  CHECK_THROWS_AS(square(*g, g->element("h")), Error);

  auto q2 = share(make_q(2));
  CHECK(is_zero(square(*q2, q2->element("T_E12"))));
  CHECK(is_homogeneous(*q2, q2->element("T_E12")));

  // E13 + E32 in gl(2|1): u^2 = E12 is nilpotent
  auto g21 = share(make_gl(2, 1));
  Vector bad = add(g21->element("E13"), g21->element("E32"));
  CHECK_FALSE(is_homogeneous(*g21, bad));
  CHECK_THROWS_AS(rank_of(*g21, bad), Error);
}

TEST_CASE("rank examples") {
  auto g = share(make_gl(4, 4));
  Matrix U(8, 8);
  for (std::size_t i = 0; i < 4; ++i) U(i, 4 + i) = 1;
  U(4, 0) = 1;
  U(5, 1) = 1;
  U(6, 2) = -1;
  auto d = rank_of(*g, from_natural(*g, U));
  CHECK(d.rank() == 4);
  CHECK(d.coefficients == std::vector<Scalar>{-1, 1, 1});
  CHECK(d.s == 0);

  auto q2 = share(make_q(2));
  CHECK(rank_of(*q2, q2->element("T_E12")).rank() == 1);

  auto p3 = share(make_p(3));
  auto dp = rank_of(*p3, p_plus(*p3));
  CHECK(dp.r == 1);
  CHECK(dp.s == 0);
  CHECK(dp.d == 1);
  CHECK(dp.t() == 1);

  // B^2 = 2: eigenvalues ±√2
  auto irr = from_natural(*q2, Matrix{{0, 0, 0, 2}, {0, 0, 1, 0}, {0, 2, 0, 0}, {1, 0, 0, 0}});
  CHECK(is_homogeneous(*q2, irr));
  CHECK_THROWS_WITH_AS(rank_of(*q2, irr), doctest::Contains("rational"), Error);
}

TEST_CASE("normalize examples") {
  auto g = share(make_gl(2, 2));
  Vector u = add(g->element("E13"), g->element("E24"));
  auto nz = normalize(g, u);
  CHECK(nz.conjugator == Matrix::identity(4));
  CHECK(nz.standard.coords == u);

  auto q2 = share(make_q(2));
  Vector tb = scale(Scalar(2), q2->element("T_E12"));
  auto nq = normalize(q2, tb);
  CHECK(nq.standard.coords == q2->element("T_E12"));
  CHECK(conjugate(*q2, nq.conjugator, tb) == nq.standard.coords);

  auto p2 = share(make_p(2));
  Matrix B(4, 4);
  B(0, 3) = B(1, 2) = 1;
  Vector pb = from_natural(*p2, B);
  auto np = normalize(p2, pb);
  CHECK(np.standard.rank->r == 1);
  CHECK(np.standard.rank->d == 0);
  CHECK(np.standard.coords == pb);

  // x^2 + y^2 has no rational isotropic vector
  Matrix Bi(4, 4);
  Bi(0, 2) = Bi(1, 3) = 1;
  Vector pi = from_natural(*p2, Bi);
  CHECK(rank_of(*p2, pi).r == 1);
  CHECK_THROWS_AS(normalize(p2, pi), Error);
}

TEST_CASE("standard elements") {
  auto g = share(make_gl(3, 3));
  Vector u = standard_u(*g, {Family::GL, 3});
  CHECK(u == add(add(g->element("E14"), g->element("E25")), g->element("E36")));
  CHECK(is_zero(square(*g, u)));

  auto p4 = share(make_p(4));
  Vector um = p_minus(*p4);
  Vector c = square(*p4, um);
  for (std::size_t i = 0; i < p4->dim(); ++i) CHECK(is_zero(p4->bracket(c, p4->basis_vector(i))));

  auto q3 = share(make_q(3));
  Vector uq = standard_u(*q3, {Family::Q, 1, 1, 0, 0, {Scalar(1)}});
  CHECK(uq == add(q3->element("T_E12"), q3->element("T_E33")));
  Matrix Uq = q3->realization()->element(uq);
  CHECK(square(*q3, uq) == from_natural(*q3, Scalar(2) * (Uq * Uq)));
  CHECK(square(*q3, uq) == scale(Scalar(2), q3->element("T^E33")));
  CHECK(is_homogeneous(*q3, uq));

  CHECK_THROWS_AS(standard_u(*q3, {Family::Q, 1, 2, 0, 0, {1, 1}}), Error);
  CHECK_THROWS_AS(standard_u(*share(make_gl(2, 1)), {Family::GL, 2}), Error);
  CHECK_THROWS_AS(standard_u(*share(make_p(3)), {Family::P, 2, 0, 0, 0}), Error);
}

TEST_CASE("property: rank data round trip and conjugation invariance") {
  std::mt19937 rng(11);
  std::vector<AlgebraPtr> algs = {share(make_gl(1, 1)), share(make_gl(2, 1)), share(make_gl(2, 2)), share(make_gl(3, 2)),
                                  share(make_sl(2, 1)), share(make_q(2)), share(make_q(3)), share(make_q(4)),
                                  share(make_p(2)), share(make_p(3)), share(make_p(4))};
  for (const auto& g : algs)
    for (const auto& d : admissible(*g)) {
      Vector u = standard_u(*g, d);
      CHECK(is_homogeneous(*g, u));
      RankData want = canonical(*g, d);
      CHECK_MESSAGE(rank_of(*g, u) == want, to_string(d));
      for (int t = 0; t < 2; ++t) {
        Matrix P = random_even(rng, *g);
        Vector v = conjugate(*g, P, u);
        CHECK_MESSAGE(rank_of(*g, v) == want, to_string(d));
      }
    }
  for (std::size_t n : {2, 3, 4}) {
    auto p = share(make_p(n));
    Vector u = p_plus(*p);
    auto d = rank_of(*p, u);
    CHECK(d.t() == static_cast<long>(n / 2));
    CHECK(rank_of(*p, conjugate(*p, random_even(rng, *p), u)) == d);
  }
}

TEST_CASE("property: normalize round trip") {
  std::mt19937 rng(5);
  std::vector<AlgebraPtr> algs = {share(make_gl(2, 2)), share(make_gl(3, 2)), share(make_q(3)), share(make_q(4)),
                                  share(make_p(3)), share(make_p(4))};
  for (const auto& g : algs)
    for (const auto& d : admissible(*g)) {
      Matrix P = random_even(rng, *g);
      Vector u = conjugate(*g, P, standard_u(*g, d));
      auto nz = normalize(g, u);
      CHECK(nz.standard.coords == standard_u(*g, canonical(*g, d)));
      CHECK(conjugate(*g, inverse(nz.conjugator), nz.standard.coords) == u);
      // the conjugator is even and preserves the algebra
      const auto& Q = nz.conjugator;
      const std::size_t m = g->realization()->natural.sdim().even;
      for (std::size_t i = 0; i < Q.rows(); ++i)
        for (std::size_t j = 0; j < Q.cols(); ++j)
          if ((i < m) != (j < m)) CHECK(is_zero(Q(i, j)));
      for (std::size_t i = 0; i < g->dim(); ++i) CHECK_NOTHROW(conjugate(*g, Q, g->basis_vector(i)));
    }
}

TEST_CASE("property: gl rank with c = 0 equals rank B + rank C") {
  std::mt19937 rng(3);
  for (auto [m, n] : {std::pair<std::size_t, std::size_t>{2, 2}, {3, 2}, {2, 3}}) {
    auto g = share(make_gl(m, n));
    for (const auto& d : admissible(*g)) {
      if (d.k) continue;
      Vector u = conjugate(*g, random_even(rng, *g), standard_u(*g, d));
      Matrix U = g->realization()->element(u);
      std::vector<std::size_t> ev, od;
      for (std::size_t i = 0; i < m; ++i) ev.push_back(i);
      for (std::size_t i = 0; i < n; ++i) od.push_back(m + i);
      auto plain = rank(U.submatrix(ev, od)) + rank(U.submatrix(od, ev));
      CHECK(rank_of(*g, u).rank() == static_cast<long>(plain));
    }
  }
}
