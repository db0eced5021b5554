#include <algorithm>
#include <bit>

#include "dslab/rep.hpp"

namespace dslab {

const char* to_string(KacDirection d) { return d == KacDirection::Thin ? "thin" : "thick"; }

std::vector<unsigned> exterior_monomials(std::size_t p) {
  std::vector<unsigned> out;
  for (unsigned m = 0; m < (1u << p); ++m) out.push_back(m);
  auto tuple = [](unsigned m) {
    std::vector<int> t;
    for (int i = 0; m >> i; ++i)
      if (m >> i & 1) t.push_back(i);
    return t;
  };
  std::sort(out.begin(), out.end(), [&](unsigned a, unsigned b) {
    int pa = std::popcount(a), pb = std::popcount(b);
    if (pa != pb) return pa < pb;
    return tuple(a) < tuple(b);
  });
  return out;
}

std::pair<int, unsigned> wedge_sort(const std::vector<std::size_t>& idx) {
  unsigned mask = 0;
  int inversions = 0;
  for (std::size_t a = 0; a < idx.size(); ++a) {
    if (mask >> idx[a] & 1) return {0, 0};
    mask |= 1u << idx[a];
    for (std::size_t b = a + 1; b < idx.size(); ++b)
      if (idx[a] > idx[b]) ++inversions;
  }
  return {inversions % 2 ? -1 : 1, mask};
}

SubalgebraAlgebra degree_zero(AlgebraPtr g) {
  if (!g->zgrading()) throw Error(ErrorKind::GradingViolation, "algebra carries no Z-grading");
  std::vector<Vector> vecs;
  for (std::size_t i = 0; i < g->dim(); ++i)
    if ((*g->zgrading())[i] == 0) vecs.push_back(g->basis_vector(i));
  const std::size_t d = g->dim();
  return as_algebra(make_subalgebra(std::move(g), Subspace::span(d, vecs)));
}

Rep block_pullback(const LieSA& g, const SubalgebraAlgebra& g0, const Rep* top, const Rep* bottom) {
  if (!g.realization()) throw Error(ErrorKind::InvalidParams, "block pullback needs a matrix realization");
  const auto& R = *g.realization();
  const std::size_t p = R.natural.sdim().even, N = R.natural.dim();
  std::vector<std::size_t> ti(p), bi(N - p);
  for (std::size_t i = 0; i < p; ++i) ti[i] = i;
  for (std::size_t i = p; i < N; ++i) bi[i - p] = i;
  const std::size_t dt = top ? top->dim() : 1, db = bottom ? bottom->dim() : 1;
  Matrix it = Matrix::identity(dt), ib = Matrix::identity(db);
  std::vector<Matrix> act;
  for (std::size_t a = 0; a < g0.algebra.dim(); ++a) {
    Matrix x = R.element(g0.embedding.row(a));
    Matrix m(dt * db, dt * db);
    if (top) m += kron(top->act(top->algebra->realization()->coordinates(x.submatrix(ti, ti))), ib);
    if (bottom) m += kron(it, bottom->act(bottom->algebra->realization()->coordinates(x.submatrix(bi, bi))));
    act.push_back(std::move(m));
  }
  SuperSpace st = top ? SuperSpace(top->space.labels(), top->space.parities()) : SuperSpace({"1"}, {0});
  SuperSpace sb = bottom ? SuperSpace(bottom->space.labels(), bottom->space.parities()) : SuperSpace({"1"}, {0});
  SuperSpace sp = !top ? sb : !bottom ? st : tensor(st, sb);
  return with_weights(Rep{std::make_shared<const LieSA>(g0.algebra), std::move(sp), std::move(act)});
}

KacModule kac_induce(AlgebraPtr gp, const Rep& l0, KacDirection dir) {
  const LieSA& g = *gp;
  if (!g.zgrading()) throw Error(ErrorKind::GradingViolation, "algebra carries no Z-grading");
  const auto& deg = *g.zgrading();
  for (std::size_t i = 0; i < g.dim(); ++i) {
    if (deg[i] < -1 || deg[i] > 1) throw Error(ErrorKind::GradingViolation, "degree outside {-1,0,1}");
    if ((deg[i] == 0) != (g.parity(i) == 0)) throw Error(ErrorKind::GradingViolation, "degree and parity disagree");
  }
  SubalgebraAlgebra g0 = degree_zero(gp);
  require_same_algebra(g0.algebra, *l0.algebra);
  // parent index of each degree-zero basis element
  std::vector<std::size_t> zero_idx;
  std::vector<long> local(g.dim(), -1);
  for (std::size_t a = 0; a < g0.algebra.dim(); ++a)
    for (std::size_t i = 0; i < g.dim(); ++i)
      if (sgn(g0.embedding(a, i)) != 0) {
        zero_idx.push_back(i);
        local[i] = static_cast<long>(a);
      }

  KacModule K;
  const int free_deg = dir == KacDirection::Thin ? -1 : 1;
  std::vector<long> free_pos(g.dim(), -1);
  for (std::size_t i = 0; i < g.dim(); ++i) {
    if (deg[i] == free_deg) {
      free_pos[i] = static_cast<long>(K.free.size());
      K.free.push_back(i);
    } else if (deg[i] == -free_deg) {
      K.opposite.push_back(i);
    }
  }
  const std::size_t p = K.free.size(), L = l0.dim();
  if (p > 20) throw Error(ErrorKind::InvalidParams, "exterior algebra too large");
  K.monomials = exterior_monomials(p);
  K.position.assign(std::size_t(1) << p, 0);
  for (std::size_t t = 0; t < K.monomials.size(); ++t) K.position[K.monomials[t]] = t;
  K.l0_dim = L;
  const std::size_t D = K.monomials.size() * L;

  auto members = [](unsigned m) {
    std::vector<std::size_t> t;
    for (std::size_t i = 0; m >> i; ++i)
      if (m >> i & 1) t.push_back(i);
    return t;
  };

  std::vector<Matrix> act(g.dim(), Matrix(D, D));
  // exterior multiplication by free generators
  for (std::size_t a = 0; a < p; ++a) {
    Matrix& m = act[K.free[a]];
    for (unsigned S : K.monomials) {
      if (S >> a & 1) continue;
      int sign = (std::popcount(S & ((1u << a) - 1)) % 2) ? -1 : 1;
      for (std::size_t v = 0; v < L; ++v) m(K.index(S | (1u << a), v), K.index(S, v)) = sign;
    }
  }
  // degree zero: derivation on the wedge plus the action on L0
  for (std::size_t z : zero_idx) {
    Matrix& m = act[z];
    const Matrix& adz = g.ad(z);
    const Matrix& rl = l0.action[local[z]];
    for (unsigned S : K.monomials) {
      auto s = members(S);
      for (std::size_t q = 0; q < s.size(); ++q)
        for (std::size_t t = 0; t < p; ++t) {
          const Scalar& coef = adz(K.free[t], K.free[s[q]]);
          if (sgn(coef) == 0) continue;
          auto repl = s;
          repl[q] = t;
          auto [sign, mask] = wedge_sort(repl);
          if (sign == 0) continue;
          for (std::size_t v = 0; v < L; ++v) m(K.index(mask, v), K.index(S, v)) += sign * coef;
        }
      for (std::size_t v = 0; v < L; ++v)
        for (std::size_t w = 0; w < L; ++w)
          if (sgn(rl(w, v)) != 0) m(K.index(S, w), K.index(S, v)) += rl(w, v);
    }
  }
  // opposite odd part: x(y Y' ⊗ v) = [x, y](Y' ⊗ v) - y x(Y' ⊗ v), x(1 ⊗ v) = 0
  for (std::size_t x : K.opposite) {
    Matrix& m = act[x];
    for (unsigned S : K.monomials) {
      if (S == 0) continue;
      std::size_t s1 = static_cast<std::size_t>(std::countr_zero(S));
      unsigned rest = S & ~(1u << s1);
      Vector br = g.ad(x).column(K.free[s1]);
      for (std::size_t i = 0; i < g.dim(); ++i)
        if (sgn(br[i]) != 0 && local[i] < 0)
          throw Error(ErrorKind::GradingViolation, "bracket of opposite odd parts leaves degree zero");
      const Matrix& ys = act[K.free[s1]];
      for (std::size_t v = 0; v < L; ++v) {
        std::size_t src = K.index(rest, v);
        Vector col(D, Scalar(0));
        for (std::size_t i = 0; i < g.dim(); ++i)
          if (sgn(br[i]) != 0) axpy(col, br[i], act[i].column(src));
        Vector yxr = ys.apply(m.column(src));
        for (std::size_t r = 0; r < D; ++r) m(r, K.index(S, v)) = col[r] - yxr[r];
      }
    }
  }

  std::vector<std::string> labels;
  std::vector<int> par;
  for (unsigned S : K.monomials) {
    std::string mono;
    for (auto i : members(S)) mono += (mono.empty() ? "" : "∧") + g.space().labels()[K.free[i]];
    if (mono.empty()) mono = "1";
    for (std::size_t v = 0; v < L; ++v) {
      labels.push_back(mono + "⊗" + l0.space.labels()[v]);
      par.push_back((std::popcount(S) + l0.space.parity(v)) % 2);
    }
  }
  K.rep = with_weights(Rep{std::move(gp), SuperSpace(labels, par), std::move(act)});
  return K;
}

}  // namespace dslab
