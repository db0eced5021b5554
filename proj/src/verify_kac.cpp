#include "dslab/suites.hpp"

namespace dslab {

namespace {

AlgebraPtr share(LieSA g) { return std::make_shared<const LieSA>(std::move(g)); }

Rep trace_character(AlgebraPtr gl, int sign) {
  std::vector<Scalar> v;
  for (const auto& b : gl->realization()->basis) v.push_back(Scalar(sign) * trace(b));
  return character_rep(gl, v, sign > 0 ? "det" : "det^-1");
}

std::size_t total(const Report& r, const std::string& name) {
  for (const auto& [n, d] : r.dims)
    if (n == name) return d.even + d.odd;
  throw Error(ErrorKind::InvalidParams, "report has no dimension " + name);
}

// checks already present by name are not repeated
void absorb(Report& into, const Report& from) {
  for (const auto& c : from.checks)
    if (std::none_of(into.checks.begin(), into.checks.end(), [&](const Check& x) { return x.name == c.name; }))
      into.checks.push_back(c);
  for (const auto& d : from.dims) into.dims.push_back(d);
}

// k = [u, g_{∓1}] in g0 coordinates, computed straight from the bracket
std::vector<Vector> kac_k(AlgebraPtr g, const OddElem& u, KacDirection dir) {
  const auto& deg = *g->zgrading();
  const int want = dir == KacDirection::Thin ? -1 : 1;
  SubalgebraAlgebra g0 = degree_zero(g);
  std::vector<Vector> out;
  for (std::size_t i = 0; i < g->dim(); ++i)
    if (deg[i] == want) out.push_back(g0.coords.coordinates_or_throw(g->bracket(u.coords, g->basis_vector(i)), ErrorKind::ImageMismatch));
  return out;
}

}  // namespace

const char* to_string(KacL0 l) {
  switch (l) {
    case KacL0::Trivial: return "trivial";
    case KacL0::NaturalDual: return "natural-dual";
    case KacL0::DetDet: return "det-det";
  }
  return "?";
}

KacL0 kac_l0_from_string(const std::string& s) {
  for (auto l : {KacL0::Trivial, KacL0::NaturalDual, KacL0::DetDet})
    if (s == to_string(l)) return l;
  throw Error(ErrorKind::InvalidParams, "unknown L0 " + s);
}

Rep kac_l0(AlgebraPtr g, KacL0 which) {
  SubalgebraAlgebra g0 = degree_zero(g);
  if (which == KacL0::Trivial) return trivial_rep(share(g0.algebra));
  if (g->family().tag != Family::GL) throw Error(ErrorKind::InvalidParams, "this L0 is defined for gl(m|n)");
  auto top = share(make_gl(g->family().m, 0)), bottom = share(make_gl(g->family().n, 0));
  if (which == KacL0::NaturalDual) {
    Rep a = natural_rep(top), b = dual_rep(natural_rep(bottom));
    return block_pullback(*g, g0, &a, &b);
  }
  Rep a = trace_character(top, 1), b = trace_character(bottom, -1);
  return block_pullback(*g, g0, &a, &b);
}

OddElem kac_u(AlgebraPtr g) {
  RankData d;
  d.family = g->family().tag;
  d.r = static_cast<long>(std::min(g->family().m, g->family().n));
  return standard_elem(g, d);
}

Report verify_kac_freeness(AlgebraPtr g, KacL0 which) {
  Rep l0 = kac_l0(g, which);
  OddElem u = kac_u(g);
  Report rep = r_freeness(g, l0, KacDirection::Thin, u);
  rep.id = std::string("kac-freeness gl(") + std::to_string(g->family().m) + "|" + std::to_string(g->family().n) + ") " +
           to_string(which);
  if (!rep.pass() && rep.dims.empty()) return rep;
  const std::size_t R = total(rep, "R"), want = std::size_t{1} << u.rank->r;
  rep.add("dim R = " + std::to_string(want), R == want, std::to_string(R));
  Subspace inv = invariants(l0, kac_k(g, u, KacDirection::Thin));
  rep.add("rank = dim L0^k by invariants", total(rep, "DS K(L0)") == R * inv.dim(),
          std::to_string(total(rep, "DS K(L0)")) + " vs " + std::to_string(R) + "·" + std::to_string(inv.dim()));
  return rep;
}

Report verify_p_kac(std::size_t n, KacDirection dir) {
  auto g = share(make_p(n));
  Rep l0 = trivial_rep(share(degree_zero(g).algebra));
  OddElem u = make_odd(g, dir == KacDirection::Thin ? p_plus(*g) : p_minus(*g));
  Report rep = kac_differential_compare(g, l0, dir, u);
  rep.id = "p-kac p(" + std::to_string(n) + ") " + to_string(dir);
  absorb(rep, r_freeness(g, l0, dir, u));
  const std::size_t want = std::size_t{1} << (n / 2);
  bool has_r = std::any_of(rep.dims.begin(), rep.dims.end(), [](const auto& d) { return d.first == "R"; });
  std::size_t R = has_r ? total(rep, "R") : 0;
  rep.add("dim R = 2^⌊n/2⌋", R == want, std::to_string(R) + " vs " + std::to_string(want));
  return rep;
}

Report verify_kac_multiplicity(AlgebraPtr g, const Rep& l0, KacDirection dir, const OddElem& u) {
  DSResult d = ds(kac_induce(g, l0, dir).rep, u);
  Report rep = multiplicity_pairing_check(d, gu_algebra(g, u));
  rep.id = "multiplicity";
  rep.dim("DS K(L0)", d.cohomology.sdim());
  return rep;
}

}  // namespace dslab
