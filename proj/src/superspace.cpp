#include "dslab/superspace.hpp"

#include <map>
#include <set>

namespace dslab {

std::string to_string(const SDim& d) {
  return "(" + std::to_string(d.even) + "|" + std::to_string(d.odd) + ")";
}

SuperSpace::SuperSpace(std::vector<std::string> labels, std::vector<int> parities,
                       std::optional<std::vector<Weight>> weights)
    : labels_(std::move(labels)), parities_(std::move(parities)), weights_(std::move(weights)) {
  if (labels_.size() != parities_.size()) throw Error(ErrorKind::DimensionMismatch, "labels vs parities");
  std::set<std::string> seen;
  for (const auto& l : labels_)
    if (!seen.insert(l).second) throw Error(ErrorKind::DuplicateLabel, "label '" + l + "' repeated");
  for (int p : parities_)
    if (p != 0 && p != 1) throw Error(ErrorKind::InvalidParams, "parity must be 0 or 1");
  if (weights_) {
    if (weights_->size() != labels_.size()) throw Error(ErrorKind::WeightArityMismatch, "one weight per basis vector");
    for (const auto& w : *weights_)
      if (w.size() != weights_->front().size()) throw Error(ErrorKind::WeightArityMismatch, "weights of unequal length");
  }
}

SuperSpace SuperSpace::standard(std::size_t p, std::size_t q, const std::string& prefix) {
  std::vector<std::string> labels;
  std::vector<int> par;
  for (std::size_t i = 0; i < p + q; ++i) {
    labels.push_back(prefix + std::to_string(i + 1));
    par.push_back(i < p ? 0 : 1);
  }
  return SuperSpace(std::move(labels), std::move(par));
}

SDim SuperSpace::sdim() const {
  SDim d;
  for (int p : parities_) (p ? d.odd : d.even)++;
  return d;
}

std::vector<std::size_t> SuperSpace::indices_of_parity(int p) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < parities_.size(); ++i)
    if (parities_[i] == p) out.push_back(i);
  return out;
}

long sdim(const SuperSpace& v) { return v.sdim().signed_dim(); }

namespace {

void check_weight_compat(const SuperSpace& v, const SuperSpace& w) {
  if (v.has_weights() != w.has_weights())
    throw Error(ErrorKind::WeightArityMismatch, "weights present on only one factor");
  if (v.has_weights() && v.dim() && w.dim() && v.weight_arity() != w.weight_arity())
    throw Error(ErrorKind::WeightArityMismatch, "weight lengths differ");
}

}  // namespace

SuperSpace tensor(const SuperSpace& v, const SuperSpace& w) {
  check_weight_compat(v, w);
  std::vector<std::string> labels;
  std::vector<int> par;
  std::optional<std::vector<Weight>> wts;
  if (v.has_weights()) wts.emplace();
  for (std::size_t i = 0; i < v.dim(); ++i)
    for (std::size_t j = 0; j < w.dim(); ++j) {
      labels.push_back(v.labels()[i] + "⊗" + w.labels()[j]);
      par.push_back((v.parity(i) + w.parity(j)) % 2);
      if (wts) {
        Weight s = v.weights()[i];
        for (std::size_t a = 0; a < s.size(); ++a) s[a] += w.weights()[j][a];
        wts->push_back(std::move(s));
      }
    }
  return SuperSpace(std::move(labels), std::move(par), std::move(wts));
}

SuperSpace dual(const SuperSpace& v) {
  std::vector<std::string> labels;
  for (const auto& l : v.labels()) {
    // double dual returns the original labels
    if (l.size() > 2 && l.compare(l.size() - 2, 2, "^*") == 0) labels.push_back(l.substr(0, l.size() - 2));
    else labels.push_back(l + "^*");
  }
  std::optional<std::vector<Weight>> wts;
  if (v.has_weights()) {
    wts = v.weights();
    for (auto& w : *wts)
      for (auto& x : w) x = -x;
  }
  return SuperSpace(std::move(labels), v.parities(), std::move(wts));
}

SuperSpace parity_shift(const SuperSpace& v) {
  std::vector<std::string> labels;
  for (const auto& l : v.labels()) labels.push_back("Π" + l);
  std::vector<int> par;
  for (int p : v.parities()) par.push_back(1 - p);
  std::optional<std::vector<Weight>> wts;
  if (v.has_weights()) wts = v.weights();
  return SuperSpace(std::move(labels), std::move(par), std::move(wts));
}

SuperSpace direct_sum(const SuperSpace& v, const SuperSpace& w) {
  check_weight_compat(v, w);
  std::set<std::string> left(v.labels().begin(), v.labels().end());
  bool clash = false;
  for (const auto& l : w.labels()) clash |= left.count(l) > 0;
  std::vector<std::string> labels;
  for (const auto& l : v.labels()) labels.push_back(clash ? "1:" + l : l);
  for (const auto& l : w.labels()) labels.push_back(clash ? "2:" + l : l);
  std::vector<int> par = v.parities();
  par.insert(par.end(), w.parities().begin(), w.parities().end());
  std::optional<std::vector<Weight>> wts;
  if (v.has_weights()) {
    wts = v.weights();
    wts->insert(wts->end(), w.weights().begin(), w.weights().end());
  }
  return SuperSpace(std::move(labels), std::move(par), std::move(wts));
}

std::optional<int> vector_parity(const SuperSpace& s, std::span<const Scalar> v) {
  bool has[2] = {false, false};
  for (std::size_t i = 0; i < v.size(); ++i)
    if (sgn(v[i]) != 0) has[s.parity(i)] = true;
  if (has[0] && has[1]) return std::nullopt;
  if (has[0]) return 0;
  if (has[1]) return 1;
  return -1;
}

std::optional<int> map_parity(const SuperSpace& source, const SuperSpace& target, const Matrix& m) {
  if (m.rows() != target.dim() || m.cols() != source.dim())
    throw Error(ErrorKind::DimensionMismatch, "map shape vs spaces");
  bool has[2] = {false, false};
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (sgn(m(r, c)) != 0) has[(target.parity(r) + source.parity(c)) % 2] = true;
  if (has[0] && has[1]) return std::nullopt;
  if (has[0]) return 0;
  if (has[1]) return 1;
  return -1;
}

GradedBasis homogeneous_basis(const SuperSpace& s, const Subspace& sub) {
  if (sub.ambient() != s.dim()) throw Error(ErrorKind::DimensionMismatch, "subspace ambient vs space");
  std::vector<Vector> parts[2];
  for (std::size_t i = 0; i < sub.dim(); ++i) {
    Vector v = sub.vector(i);
    for (int p = 0; p < 2; ++p) {
      Vector w = v;
      for (std::size_t k = 0; k < w.size(); ++k)
        if (s.parity(k) != p) w[k] = 0;
      if (is_zero(std::span<const Scalar>(w))) continue;
      if (!sub.contains(w)) throw Error(ErrorKind::NotGraded, "subspace is not spanned by homogeneous vectors");
      parts[p].push_back(std::move(w));
    }
  }
  GradedBasis g;
  g.even = Subspace::span(s.dim(), parts[0]).basis();
  g.odd = Subspace::span(s.dim(), parts[1]).basis();
  return g;
}

std::vector<std::vector<std::size_t>> weight_decompose(const SuperSpace& v, const std::vector<Matrix>& maps) {
  for (const auto& m : maps) {
    if (m.rows() != v.dim() || m.cols() != v.dim()) throw Error(ErrorKind::DimensionMismatch, "diagonal map shape");
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c)
        if (r != c && sgn(m(r, c)) != 0) throw Error(ErrorKind::NotDiagonal, "off-diagonal entry in weight map");
  }
  std::map<std::vector<Scalar>, std::size_t> block_of;
  std::vector<std::vector<std::size_t>> blocks;
  for (std::size_t i = 0; i < v.dim(); ++i) {
    std::vector<Scalar> key;
    for (const auto& m : maps) key.push_back(m(i, i));
    auto [it, inserted] = block_of.emplace(key, blocks.size());
    if (inserted) blocks.emplace_back();
    blocks[it->second].push_back(i);
  }
  return blocks;
}

}  // namespace dslab
