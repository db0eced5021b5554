#include "dslab/suites.hpp"

#include <atomic>
#include <chrono>
#include <random>
#include <thread>

namespace dslab {

namespace {

AlgebraPtr share(LieSA g) { return std::make_shared<const LieSA>(std::move(g)); }

Json family_json(const LieSA& g) {
  return {{"family", to_string(g.family().tag)}, {"m", g.family().m}, {"n", g.family().n}};
}

Json rank_params(const LieSA& g, const RankData& d) {
  Json j = family_json(g);
  j["rank"] = to_json(d);
  return j;
}

std::vector<Scalar> ones_to(long k) {
  std::vector<Scalar> c;
  for (long j = 1; j <= k; ++j) c.emplace_back(j);
  return c;
}

void thm3_cases(Suite& s) {
  for (auto [m, n] : std::vector<std::pair<std::size_t, std::size_t>>{{1, 1}, {2, 1}, {2, 2}, {3, 2}}) {
    auto g = share(make_gl(m, n));
    for (long r = 1; r <= static_cast<long>(std::min(m, n)); ++r)
      for (long sl = 0; sl <= r; ++sl)
        for (long k = 0; k + sl <= r; ++k) {
          RankData d{Family::GL, r, k, sl, 0, ones_to(k)};
          s.cases.push_back({"gl(" + std::to_string(m) + "|" + std::to_string(n) + ") " + to_string(d), rank_params(*g, d),
                             [g, d] { return verify_thm3(g, d); }});
        }
  }
}

void q_cases(Suite& s) {
  for (std::size_t n : {2, 3, 4}) {
    auto g = share(make_q(n));
    for (long r = 0; 2 * r <= static_cast<long>(n); ++r)
      for (long k = 0; 2 * r + k <= static_cast<long>(n); ++k) {
        if (r + k == 0) continue;
        RankData d{Family::Q, r, k, 0, 0, ones_to(k)};
        s.cases.push_back({"q(" + std::to_string(n) + ") " + to_string(d), rank_params(*g, d),
                           [g, d] { return verify_q_prop(g, d); }});
      }
  }
}

void p_cases(Suite& s) {
  for (std::size_t n : {3, 4}) {
    auto g = share(make_p(n));
    for (long r = 0; r <= 2; ++r)
      for (long sl = 0; sl <= 2; ++sl)
        for (long d = 0; d <= 1; ++d) {
          if (r + sl + d == 0) continue;
          RankData rd{Family::P, r, 0, sl, d, std::vector<Scalar>(static_cast<std::size_t>(sl), Scalar(1))};
          try {
            canonical(*g, rd);
          } catch (const Error&) {
            continue;  // not admissible for this n
          }
          s.cases.push_back({"p(" + std::to_string(n) + ") " + to_string(rd), rank_params(*g, rd),
                             [g, rd] { return verify_p_prop(g, rd); }});
        }
  }
}

struct KacCase {
  std::string id;
  Json params;
  AlgebraPtr g;
  std::function<Rep()> l0;
  KacDirection dir;
  std::function<OddElem()> u;
};

std::vector<KacCase> kac_cases() {
  std::vector<KacCase> out;
  for (std::size_t m : {1, 2}) {
    auto g = share(make_gl(m, m));
    for (auto l : {KacL0::Trivial, KacL0::NaturalDual, KacL0::DetDet}) {
      Json p = family_json(*g);
      p["l0"] = to_string(l);
      p["direction"] = "thin";
      out.push_back({"gl(" + std::to_string(m) + "|" + std::to_string(m) + ") " + to_string(l), p, g,
                     [g, l] { return kac_l0(g, l); }, KacDirection::Thin, [g] { return kac_u(g); }});
    }
  }
  for (auto [n, dir] : std::vector<std::pair<std::size_t, KacDirection>>{
           {2, KacDirection::Thin}, {3, KacDirection::Thin}, {2, KacDirection::Thick}}) {
    auto g = share(make_p(n));
    Json p = family_json(*g);
    p["l0"] = "trivial";
    p["direction"] = to_string(dir);
    out.push_back({"p(" + std::to_string(n) + ") " + to_string(dir), p, g,
                   [g] { return trivial_rep(share(degree_zero(g).algebra)); }, dir,
                   [g, dir] { return make_odd(g, dir == KacDirection::Thin ? p_plus(*g) : p_minus(*g)); }});
  }
  return out;
}

// module pools for the randomized DS property suite
struct Pool {
  std::string algebra;
  AlgebraPtr g;
  std::vector<std::pair<std::string, std::function<Rep()>>> modules;
  std::vector<RankData> us;
};

std::vector<Pool> pools() {
  std::vector<Pool> out;
  {
    auto g = share(make_gl(1, 1));
    auto kac = [g] { return kac_induce(g, trivial_rep(share(degree_zero(g).algebra)), KacDirection::Thin).rep; };
    out.push_back({"gl(1|1)", g,
                   {{"trivial", [g] { return trivial_rep(g); }},
                    {"natural", [g] { return natural_rep(g); }},
                    {"dual-natural", [g] { return dual_rep(natural_rep(g)); }},
                    {"adjoint", [g] { return adjoint_rep(g); }},
                    {"ber", [g] { return berezinian_rep(g, 1); }},
                    {"ber^-2", [g] { return berezinian_rep(g, -2); }},
                    {"pi-natural", [g] { return parity_shift_rep(natural_rep(g)); }},
                    {"kac-trivial", kac}},
                   {RankData{Family::GL, 1, 0, 0, 0, {}}, RankData{Family::GL, 1, 1, 0, 0, {Scalar(1)}},
                    RankData{Family::GL, 1, 0, 1, 0, {}}}});
  }
  {
    auto g = share(make_gl(2, 1));
    auto kac = [g] { return kac_induce(g, trivial_rep(share(degree_zero(g).algebra)), KacDirection::Thin).rep; };
    out.push_back({"gl(2|1)", g,
                   {{"trivial", [g] { return trivial_rep(g); }},
                    {"natural", [g] { return natural_rep(g); }},
                    {"dual-natural", [g] { return dual_rep(natural_rep(g)); }},
                    {"adjoint", [g] { return adjoint_rep(g); }},
                    {"ber", [g] { return berezinian_rep(g, 1); }},
                    {"natural^2", [g] { return tensor_rep(natural_rep(g), natural_rep(g)); }},
                    {"kac-trivial", kac}},
                   {RankData{Family::GL, 1, 0, 0, 0, {}}, RankData{Family::GL, 1, 1, 0, 0, {Scalar(2)}},
                    RankData{Family::GL, 1, 0, 1, 0, {}}}});
  }
  {
    auto g = share(make_q(2));
    out.push_back({"q(2)", g,
                   {{"trivial", [g] { return trivial_rep(g); }},
                    {"natural", [g] { return natural_rep(g); }},
                    {"dual-natural", [g] { return dual_rep(natural_rep(g)); }},
                    {"pi-natural", [g] { return parity_shift_rep(natural_rep(g)); }},
                    {"adjoint", [g] { return adjoint_rep(g); }}},
                   {RankData{Family::Q, 1, 0, 0, 0, {}}, RankData{Family::Q, 0, 1, 0, 0, {Scalar(1)}},
                    RankData{Family::Q, 0, 2, 0, 0, {Scalar(1), Scalar(2)}}}});
  }
  return out;
}

void tensor_les_cases(Suite& s) {
  auto ps = pools();
  std::mt19937_64 rng(s.seed);
  auto pick = [&rng](std::size_t n) { return static_cast<std::size_t>(rng() % n); };
  for (int i = 0; i < 24; ++i) {
    const Pool& p = ps[pick(ps.size())];
    const auto& a = p.modules[pick(p.modules.size())];
    const auto& b = p.modules[pick(p.modules.size())];
    const RankData& d = p.us[pick(p.us.size())];
    Json params = rank_params(*p.g, d);
    params["v"] = a.first;
    params["w"] = b.first;
    char id[16];
    std::snprintf(id, sizeof id, "pair %02d ", i);
    AlgebraPtr g = p.g;
    s.cases.push_back({id + p.algebra + " " + a.first + " ⊗ " + b.first, params, [g, fa = a.second, fb = b.second, d] {
                         return verify_tensor_pair(fa(), fb(), standard_elem(g, d));
                       }});
  }

  auto g11 = share(make_gl(1, 1));
  auto u11 = [g11] { return make_odd(g11, g11->element("E")); };
  auto kac = [g11] { return kac_induce(g11, trivial_rep(share(degree_zero(g11).algebra)), KacDirection::Thin).rep; };
  auto ses = [&](const std::string& id, Json params, std::function<Report()> f) { s.cases.push_back({"ses " + id, params, f}); };
  ses("gl(1|1) odd line in K(C)", {{"family", "gl"}, {"m", 1}, {"n", 1}, {"sub", "F.1"}},
      [kac, u11] { return verify_les(kac(), Subspace::span(2, {unit_vector(2, 1)}), u11()); });
  ses("gl(1|1) K(C) in K(C) ⊕ natural", {{"family", "gl"}, {"m", 1}, {"n", 1}, {"sub", "K(C)"}}, [g11, kac, u11] {
    return verify_les(direct_sum_rep(kac(), natural_rep(g11)), Subspace::span(4, {unit_vector(4, 0), unit_vector(4, 1)}), u11());
  });
  ses("gl(1|1) trivial line in natural ⊗ dual", {{"family", "gl"}, {"m", 1}, {"n", 1}, {"sub", "invariants"}}, [g11, u11] {
    Rep nd = tensor_rep(natural_rep(g11), dual_rep(natural_rep(g11)));
    return verify_les(nd, invariants(nd, whole_algebra(g11)), u11());
  });
  ses("gl(2|1) derived ideal in adjoint", {{"family", "gl"}, {"m", 2}, {"n", 1}, {"sub", "[g,g]"}}, [] {
    auto g = share(make_gl(2, 1));
    Subspace all = Subspace::whole(g->dim());
    return verify_les(adjoint_rep(g), bracket_span(*g, all, all), make_odd(g, g->element("E13")));
  });
  ses("q(2) derived ideal in adjoint", {{"family", "q"}, {"m", 2}, {"n", 2}, {"sub", "[g,g]"}}, [] {
    auto g = share(make_q(2));
    Subspace all = Subspace::whole(g->dim());
    return verify_les(adjoint_rep(g), bracket_span(*g, all, all), standard_elem(g, RankData{Family::Q, 1, 0, 0, 0, {}}));
  });
}

void spherical_cases(Suite& s) {
  for (std::size_t n : {2, 3}) {
    std::vector<long> lam(n, 0);
    // dominant weights with entries in [0, 4], largest first
    std::function<void(std::size_t, long)> rec = [&](std::size_t i, long top) {
      if (i == n) {
        std::string id = "gl(" + std::to_string(n) + ") L(";
        for (std::size_t j = 0; j < n; ++j) id += (j ? "," : "") + std::to_string(lam[j]);
        s.cases.push_back({id + ")", {{"family", "gl"}, {"m", n}, {"n", 0}, {"weight", lam}},
                           [n, l = lam] { return verify_spherical(n, l); }});
        return;
      }
      for (long v = top; v >= 0; --v) {
        lam[i] = v;
        rec(i + 1, v);
      }
    };
    rec(0, 4);
  }
}

Suite build(const std::string& name, std::uint64_t seed) {
  Suite s;
  s.name = name;
  s.seed = seed;
  if (name == "gl11-catalog") {
    s.title = "gl(1|1) catalog";
    for (long n = -3; n <= 3; ++n)
      for (const char* mod : {"ber", "pi-ber", "kac-ber"})
        s.cases.push_back({std::string(mod) + " " + std::to_string(n), {{"module", mod}, {"n", n}},
                           [mod = std::string(mod), n] { return verify_gl11_catalog(mod, n); }});
    for (auto lam : std::vector<std::vector<Scalar>>{{1, 0}, {2, 1}, {3, -1}})
      s.cases.push_back({"typical (" + to_string(lam[0]) + "," + to_string(lam[1]) + ")",
                         {{"module", "typical"}, {"weight", {to_string(lam[0]), to_string(lam[1])}}},
                         [lam] { return verify_gl11_catalog("typical", 0, lam); }});
  } else if (name == "thm3") {
    s.title = "symmetry algebra of gl(m|n)";
    thm3_cases(s);
  } else if (name == "q-prop") {
    s.title = "symmetry algebra of q(n)";
    q_cases(s);
  } else if (name == "p-prop") {
    s.title = "symmetry algebra of p(n)";
    p_cases(s);
  } else if (name == "kac-freeness") {
    s.title = "Kac freeness";
    for (auto& c : kac_cases())
      if (c.g->family().tag == Family::GL)
        s.cases.push_back({c.id, c.params, [g = c.g, l = kac_l0_from_string(c.params["l0"])] { return verify_kac_freeness(g, l); }});
  } else if (name == "p-kac") {
    s.title = "p(n) Kac modules";
    for (auto& c : kac_cases())
      if (c.g->family().tag == Family::P)
        s.cases.push_back({c.id, c.params, [n = c.g->family().m, d = c.dir] { return verify_p_kac(n, d); }});
  } else if (name == "dualpair") {
    s.title = "invariants of ∧gl(r)";
    for (std::size_t r : {1, 2, 3})
      s.cases.push_back({"gl(" + std::to_string(r) + ")", {{"family", "gl"}, {"m", r}, {"n", 0}},
                         [r] { return verify_dualpair(r); }});
  } else if (name == "tensor-les") {
    s.title = "DS functor properties";
    tensor_les_cases(s);
  } else if (name == "split") {
    s.title = "split algebras";
    for (int e : {1, 2, 3})
      s.cases.push_back({"example " + std::to_string(e), {{"example", e}}, [e] { return verify_split(e); }});
  } else if (name == "spherical") {
    s.title = "sphericality";
    spherical_cases(s);
  } else if (name == "multiplicity") {
    s.title = "multiplicity pairing";
    for (auto& c : kac_cases())
      s.cases.push_back({c.id, c.params, [c] { return verify_kac_multiplicity(c.g, c.l0(), c.dir, c.u()); }});
  } else {
    throw Error(ErrorKind::InvalidParams, "unknown suite " + name);
  }
  return s;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"gl11-catalog", "thm3",       "q-prop", "p-prop", "kac-freeness", "p-kac",
                                              "dualpair",     "tensor-les", "split",  "spherical", "multiplicity"};
  return names;
}

Suite make_suite(const std::string& name, std::uint64_t seed) { return build(name, seed); }

bool SuiteRun::pass() const { return failed() == 0; }

std::size_t SuiteRun::failed() const {
  return static_cast<std::size_t>(std::count_if(cases.begin(), cases.end(), [](const CaseResult& c) { return !c.report.pass(); }));
}

Json case_document(const std::string& suite, const CaseSpec& c, const Report& r) {
  return document("report", {{"suite", suite}, {"case", c.id}, {"params", c.params}, {"report", to_json(r)}});
}

SuiteRun run_suite(const Suite& s, unsigned jobs) {
  using clock = std::chrono::steady_clock;
  SuiteRun run{s.name, s.title, s.seed, std::vector<CaseResult>(s.cases.size())};
  auto t0 = clock::now();
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < s.cases.size();) {
      const CaseSpec& c = s.cases[i];
      auto c0 = clock::now();
      Report r;
      try {
        r = c.run();
      } catch (const std::exception& e) {
        r.id = c.id;
        r.add("completed", false, e.what());
      }
      CaseResult& out = run.cases[i];
      out.id = c.id;
      out.params = c.params;
      out.text = canonical(case_document(s.name, c, r));
      out.digest = fnv1a_hex(out.text);
      out.report = std::move(r);
      out.seconds = std::chrono::duration<double>(clock::now() - c0).count();
    }
  };
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(s.cases.size())));
  std::vector<std::jthread> pool;
  for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  pool.clear();
  run.seconds = std::chrono::duration<double>(clock::now() - t0).count();
  return run;
}

Json manifest(const SuiteRun& run) {
  Json cases = Json::array();
  for (const auto& c : run.cases)
    cases.push_back({{"id", c.id}, {"params", c.params}, {"digest", c.digest}, {"pass", c.report.pass()}});
  return document("manifest", {{"suite", run.name},
                               {"version", kArtifactVersion},
                               {"seed", run.seed},
                               {"cases", cases},
                               {"pass", run.pass()}});
}

}  // namespace dslab
