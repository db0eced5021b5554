#include <algorithm>
#include <deque>
#include <map>

#include "dslab/rep.hpp"

namespace dslab {

namespace {

using Word = std::vector<unsigned char>;
using Sparse = std::map<Word, Scalar>;
using Combo = std::map<std::size_t, Scalar>;

void add_to(Sparse& v, const Word& w, const Scalar& c) {
  auto [it, ins] = v.emplace(w, c);
  if (!ins) {
    it->second += c;
    if (sgn(it->second) == 0) v.erase(it);
  }
}

// E_{ij} on the a-th tensor power of the natural module
Sparse apply_unit(const Sparse& v, unsigned char i, unsigned char j) {
  Sparse out;
  for (const auto& [w, c] : v)
    for (std::size_t p = 0; p < w.size(); ++p)
      if (w[p] == j) {
        Word x = w;
        x[p] = i;
        add_to(out, x, c);
      }
  return out;
}

std::vector<long> weight_of(const Word& w, std::size_t n) {
  std::vector<long> out(n, 0);
  for (auto l : w) out[l]++;
  return out;
}

struct Echelon {
  struct Row {
    Word pivot;
    Sparse vec;
    Combo combo;  // vec = Σ combo[t] basis[t]
  };
  std::map<std::vector<long>, std::vector<Row>> rows;
  std::size_t n;

  // Reduces v in place; returns the accumulated combination subtracted.
  Combo reduce(Sparse& v) const {
    Combo used;
    if (v.empty()) return used;
    auto it = rows.find(weight_of(v.begin()->first, n));
    if (it == rows.end()) return used;
    for (const auto& r : it->second) {
      auto f = v.find(r.pivot);
      if (f == v.end()) continue;
      Scalar c = f->second;
      for (const auto& [w, a] : r.vec) add_to(v, w, -c * a);
      for (const auto& [t, a] : r.combo) {
        used[t] += c * a;
      }
    }
    return used;
  }

  // Adds basis vector number t (value v); false if dependent.
  bool insert(const Sparse& v, std::size_t t) {
    Sparse r = v;
    Combo used = reduce(r);
    if (r.empty()) return false;
    Combo combo;
    combo[t] = 1;
    for (const auto& [k, a] : used) combo[k] -= a;
    Scalar inv = 1 / r.begin()->second;
    for (auto& [w, a] : r) a *= inv;
    for (auto& [k, a] : combo) a *= inv;
    Word piv = r.begin()->first;
    rows[weight_of(piv, n)].push_back({piv, std::move(r), std::move(combo)});
    return true;
  }
};

}  // namespace

mpz_class weyl_dimension(const std::vector<long>& lambda) {
  Scalar d = 1;
  for (std::size_t i = 0; i < lambda.size(); ++i)
    for (std::size_t j = i + 1; j < lambda.size(); ++j)
      d *= Scalar(lambda[i] - lambda[j] + static_cast<long>(j - i)) / static_cast<long>(j - i);
  return d.get_num();
}

Rep gl_simple(AlgebraPtr gln, const std::vector<long>& lambda) {
  const auto& g = *gln;
  if (g.family().tag != Family::GL || g.family().n != 0) throw Error(ErrorKind::InvalidParams, "gl_simple needs gl(n|0)");
  const std::size_t n = g.family().m;
  if (lambda.size() != n) throw Error(ErrorKind::InvalidParams, "highest weight length");
  for (std::size_t i = 0; i + 1 < n; ++i)
    if (lambda[i] < lambda[i + 1]) throw Error(ErrorKind::NotDominant, "weight is not dominant");
  const long b = lambda[n - 1];
  Word start;
  for (std::size_t i = 0; i < n; ++i)
    for (long k = 0; k < lambda[i] - b; ++k) start.push_back(static_cast<unsigned char>(i));

  // (i, j) of each basis matrix unit
  std::vector<std::pair<unsigned char, unsigned char>> units;
  for (const auto& m : g.realization()->basis)
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c)
        if (sgn(m(r, c)) != 0) units.emplace_back(r, c);

  // highest-weight vector: weight-λ words killed by every raising operator
  std::vector<Word> words;
  Word w = start;
  do words.push_back(w);
  while (std::next_permutation(w.begin(), w.end()));
  std::map<Word, std::size_t> target;
  std::vector<std::vector<std::pair<std::size_t, Scalar>>> cols(words.size());
  for (std::size_t c = 0; c < words.size(); ++c)
    for (unsigned char i = 0; i + 1 < n; ++i)
      for (const auto& [x, a] : apply_unit(Sparse{{words[c], Scalar(1)}}, i, i + 1)) {
        auto [it, ins] = target.emplace(x, target.size());
        cols[c].emplace_back(it->second, a);
      }
  Matrix raise(target.size(), words.size());
  for (std::size_t c = 0; c < words.size(); ++c)
    for (const auto& [r, a] : cols[c]) raise(r, c) += a;
  Subspace hw = kernel(raise);
  if (hw.dim() == 0) throw Error(ErrorKind::InvalidParams, "no highest-weight vector found");
  Sparse v0;
  for (std::size_t c = 0; c < words.size(); ++c)
    if (sgn(hw.basis()(0, c)) != 0) v0[words[c]] = hw.basis()(0, c);

  Echelon ech;
  ech.n = n;
  std::vector<Sparse> basis;
  std::deque<std::size_t> queue;
  basis.push_back(v0);
  ech.insert(v0, 0);
  queue.push_back(0);
  while (!queue.empty()) {
    std::size_t t = queue.front();
    queue.pop_front();
    for (unsigned char i = 0; i + 1 < n; ++i) {
      Sparse x = apply_unit(basis[t], i + 1, i);
      if (x.empty()) continue;
      if (ech.insert(x, basis.size())) {
        basis.push_back(std::move(x));
        queue.push_back(basis.size() - 1);
      }
    }
  }

  const std::size_t d = basis.size();
  std::vector<Matrix> act;
  for (const auto& [i, j] : units) {
    Matrix m(d, d);
    for (std::size_t t = 0; t < d; ++t) {
      Sparse x = apply_unit(basis[t], i, j);
      Combo c = ech.reduce(x);
      if (!x.empty()) throw Error(ErrorKind::InvalidParams, "module not closed under gl(n)");
      for (const auto& [k, a] : c) m(k, t) += a;
      if (i == j) m(t, t) += b;
    }
    act.push_back(std::move(m));
  }
  std::vector<std::string> labels;
  for (std::size_t t = 0; t < d; ++t) labels.push_back("w" + std::to_string(t + 1));
  return with_weights(Rep{std::move(gln), SuperSpace(labels, std::vector<int>(d, 0)), std::move(act)});
}

Subalgebra matrix_subalgebra(AlgebraPtr g, const LieSA& sub) {
  if (!g->realization() || !sub.realization()) throw Error(ErrorKind::InvalidParams, "matrix realization required");
  std::vector<Vector> vecs;
  for (const auto& m : sub.realization()->basis) vecs.push_back(g->realization()->coordinates(m));
  const std::size_t d = g->dim();
  return make_subalgebra(std::move(g), Subspace::span(d, vecs));
}

}  // namespace dslab
