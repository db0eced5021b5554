#include "cli.hpp"

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>

#include "CLI11.hpp"
#include "dslab/suites.hpp"

namespace dslab {

namespace {

namespace fs = std::filesystem;

struct Opts {
  std::string family = "gl";
  std::size_t m = 1, n = 1;
  std::string rank;
  std::string coeffs;
  std::string module;
  std::string u;
  std::string out = "reports";
  std::uint64_t seed = 1;
  unsigned jobs = 1;
};

// bad input from the command line, as opposed to a failed check
struct ArgError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

AlgebraPtr share(LieSA g) { return std::make_shared<const LieSA>(std::move(g)); }

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else if (ch != ' ') {
      cur += ch;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

std::vector<Scalar> parse_coeffs(const std::string& s) {
  std::vector<Scalar> out;
  for (const auto& t : split(s, ',')) out.push_back(parse_scalar(t));
  return out;
}

long parse_long(const std::string& s) {
  std::size_t used = 0;
  long v = std::stol(s, &used);
  if (used != s.size()) throw ArgError("not an integer: " + s);
  return v;
}

AlgebraPtr algebra_of(const Opts& o) { return share(make_family(family_from_string(o.family), o.m, o.n)); }

// "2" means r = 2; otherwise comma-separated r=, s=, k=, d= entries
RankData rank_of_opts(const Opts& o, Family tag) {
  RankData d;
  d.family = tag;
  if (o.rank.empty()) throw ArgError("--rank is required");
  if (o.rank.find('=') == std::string::npos) {
    d.r = parse_long(o.rank);
  } else {
    for (const auto& kv : split(o.rank, ',')) {
      auto eq = kv.find('=');
      if (eq == std::string::npos) throw ArgError("bad --rank entry " + kv);
      std::string key = kv.substr(0, eq);
      long v = parse_long(kv.substr(eq + 1));
      if (key == "r") d.r = v;
      else if (key == "s") d.s = v;
      else if (key == "k") d.k = v;
      else if (key == "d") d.d = v;
      else throw ArgError("unknown --rank key " + key);
    }
  }
  d.coefficients = parse_coeffs(o.coeffs);
  if (tag == Family::Q || tag == Family::GL || tag == Family::SL) {
    if (d.k != 0 && d.k != static_cast<long>(d.coefficients.size())) throw ArgError("k differs from the number of --coeffs");
  } else if (d.coefficients.empty()) {
    d.coefficients.assign(static_cast<std::size_t>(d.s), Scalar(1));
  }
  return d;
}

// "E13+E24", "2*E+F", "-1/2*E"
Vector parse_element(const LieSA& g, const std::string& s) {
  Vector v(g.dim(), Scalar(0));
  std::string text;
  for (char ch : s)
    if (ch != ' ') text += ch;
  std::size_t i = 0;
  while (i < text.size()) {
    Scalar sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      if (text[i] == '-') sign = -1;
      ++i;
    }
    std::size_t j = i;
    while (j < text.size() && text[j] != '+' && !(text[j] == '-' && j > i && text[j - 1] != '*' && text[j - 1] != '/')) ++j;
    std::string term = text.substr(i, j - i);
    Scalar c = 1;
    auto star = term.find('*');
    if (star != std::string::npos) {
      c = parse_scalar(term.substr(0, star));
      term = term.substr(star + 1);
    }
    if (term.empty()) throw ArgError("empty term in --u");
    v = add(v, scale(sign * c, g.element(term)));
    i = j;
  }
  return v;
}

Rep module_of(AlgebraPtr g, const std::string& name) {
  if (name.empty() || name == "trivial") return trivial_rep(g);
  if (name == "natural") return natural_rep(g);
  if (name == "dual-natural") return dual_rep(natural_rep(g));
  if (name == "adjoint") return adjoint_rep(g);
  if (name == "ber") return berezinian_rep(g, 1);
  if (name == "kac-trivial" || name == "kac-thick")
    return kac_induce(g, trivial_rep(share(degree_zero(g).algebra)),
                      name == "kac-trivial" ? KacDirection::Thin : KacDirection::Thick)
        .rep;
  throw ArgError("unknown --module " + name);
}

std::string slug(const std::string& s) {
  std::string out;
  for (unsigned char ch : s) {
    if (std::isalnum(ch)) out += static_cast<char>(ch);
    else if (!out.empty() && out.back() != '-') out += '-';
  }
  while (!out.empty() && out.back() == '-') out.pop_back();
  return out;
}

void write_file(const fs::path& p, const std::string& text) {
  fs::create_directories(p.parent_path());
  std::ofstream f(p, std::ios::binary);
  f << text;
  if (!f) throw std::runtime_error("cannot write " + p.string());
}

// writes one file per case plus the manifest; prints the summary in case order
bool emit(const SuiteRun& run, const Opts& o, std::ostream& out) {
  fs::path dir = fs::path(o.out) / run.name;
  for (std::size_t i = 0; i < run.cases.size(); ++i) {
    const auto& c = run.cases[i];
    char prefix[8];
    std::snprintf(prefix, sizeof prefix, "%03zu-", i);
    write_file(dir / (prefix + slug(c.id) + ".json"), c.text);
  }
  write_file(dir / "manifest.json", canonical(manifest(run)));
  for (const auto& c : run.cases) {
    out << (c.report.pass() ? "PASS " : "FAIL ") << run.name << " / " << c.id;
    for (const auto& [name, d] : c.report.dims) out << "  " << name << "=" << to_string(d);
    out << "\n";
    if (!c.report.pass()) out << "     " << c.report.failures() << "\n";
  }
  out << run.name << ": " << (run.cases.size() - run.failed()) << "/" << run.cases.size() << " cases pass in "
      << std::fixed << std::setprecision(2) << run.seconds << " s\n";
  return run.pass();
}

Suite single(const std::string& name, const std::string& id, Json params, std::function<Report()> f) {
  Suite s;
  s.name = name;
  s.title = name;
  s.cases.push_back({id, std::move(params), std::move(f)});
  return s;
}

Json opts_params(const Opts& o) {
  return {{"family", o.family}, {"m", o.m}, {"n", o.n}, {"rank", o.rank}, {"coeffs", o.coeffs}, {"module", o.module}, {"u", o.u}};
}

int run_verify(const std::string& what, const Opts& o, std::ostream& out) {
  std::vector<Suite> suites;
  if (what == "thm3") {
    auto g = algebra_of(o);
    RankData d = rank_of_opts(o, g->family().tag);
    canonical(*g, d);
    suites.push_back(single("thm3", to_string(d), opts_params(o), [g, d] { return verify_thm3(g, d); }));
  } else if (what == "q-prop" || what == "p-prop") {
    Opts q = o;
    q.family = what == "q-prop" ? "q" : "p";
    auto g = algebra_of(q);
    RankData d = rank_of_opts(q, g->family().tag);
    canonical(*g, d);
    suites.push_back(single(what, to_string(d), opts_params(q), [g, d, what] {
      return what == "q-prop" ? verify_q_prop(g, d) : verify_p_prop(g, d);
    }));
  } else if (what == "kac-freeness") {
    auto g = algebra_of(o);
    KacL0 l = kac_l0_from_string(o.module.empty() ? "trivial" : o.module);
    suites.push_back(single(what, to_string(l), opts_params(o), [g, l] { return verify_kac_freeness(g, l); }));
  } else if (what == "p-kac") {
    KacDirection dir = o.module == "thick" ? KacDirection::Thick : KacDirection::Thin;
    if (!o.module.empty() && o.module != "thin" && o.module != "thick") throw ArgError("--module is thin or thick");
    std::size_t n = o.n;
    if (dir == KacDirection::Thick && n % 2) throw ArgError("thick Kac modules use u- and need even n");
    suites.push_back(single(what, "p(" + std::to_string(n) + ") " + to_string(dir), opts_params(o),
                            [n, dir] { return verify_p_kac(n, dir); }));
  } else if (what == "dualpair") {
    std::size_t r = o.n;
    suites.push_back(single(what, "gl(" + std::to_string(r) + ")", opts_params(o), [r] { return verify_dualpair(r); }));
  } else if (what == "split") {
    suites.push_back(make_suite("split"));
  } else if (what == "spherical") {
    if (!o.coeffs.empty()) {
      std::vector<long> lam;
      for (const auto& t : split(o.coeffs, ',')) lam.push_back(parse_long(t));
      if (lam.size() != o.n) throw ArgError("weight length differs from --n");
      std::size_t n = o.n;
      suites.push_back(single(what, "gl(" + std::to_string(n) + ")", opts_params(o), [n, lam] { return verify_spherical(n, lam); }));
    } else {
      Suite s = make_suite("spherical");
      std::erase_if(s.cases, [&](const CaseSpec& c) { return c.params["m"] != o.n; });
      if (s.cases.empty()) throw ArgError("spherical runs for n = 2 or 3");
      suites.push_back(std::move(s));
    }
  } else if (what == "tensor-les") {
    suites.push_back(make_suite("tensor-les", o.seed));
  } else {
    throw ArgError("unknown verification " + what);
  }
  bool ok = true;
  for (const auto& s : suites) ok = emit(run_suite(s, o.jobs), o, out) && ok;
  return ok ? kExitPass : kExitCheckFailed;
}

int run_suites(const std::string& which, const Opts& o, std::ostream& out) {
  std::vector<std::string> names;
  if (which == "all") names = suite_names();
  else names = {which};
  std::vector<Suite> suites;
  for (const auto& n : names) suites.push_back(make_suite(n, o.seed));  // unknown names fail before any work
  std::size_t failed = 0;
  for (const auto& s : suites)
    if (!emit(run_suite(s, o.jobs), o, out)) ++failed;
  out << (failed ? "FAILED: " + std::to_string(failed) + " suite(s) with failing checks" : "all suites pass") << "\n";
  return failed ? kExitCheckFailed : kExitPass;
}

bool is_argument_error(ErrorKind k) {
  switch (k) {
    case ErrorKind::InvalidParams:
    case ErrorKind::RankOutOfRange:
    case ErrorKind::NotOdd:
    case ErrorKind::NotDominant:
    case ErrorKind::SchemaViolation:
      return true;
    default:
      return false;
  }
}

}  // namespace

int cli_run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Duflo-Serganova functor laboratory"};
  app.require_subcommand(1);
  Opts o;
  std::string suite_name = "all";

  auto flags = [&o](CLI::App* c) {
    c->add_option("--family", o.family, "gl, sl, q or p");
    c->add_option("--m", o.m, "even size (gl, sl)");
    c->add_option("--n", o.n, "odd size, or the size of q(n), p(n), gl(n)");
    c->add_option("--rank", o.rank, "r, or r=..,s=..,k=..,d=..");
    c->add_option("--coeffs", o.coeffs, "comma-separated rationals");
    c->add_option("--module", o.module, "module or L0 name");
    c->add_option("--u", o.u, "odd element, e.g. E13+E24");
    c->add_option("--out", o.out, "report directory");
    c->add_option("--seed", o.seed, "seed for randomized suites");
    c->add_option("--jobs", o.jobs, "worker threads")->check(CLI::Range(1u, 256u));
  };

  auto* algebra = app.add_subcommand("algebra", "algebra data");
  algebra->require_subcommand(1);
  auto* info = algebra->add_subcommand("info", "dimensions and family metadata");
  flags(info);

  auto* dsc = app.add_subcommand("ds", "DS functor");
  dsc->require_subcommand(1);
  auto* compute = dsc->add_subcommand("compute", "cohomology of a module");
  flags(compute);

  auto* verify = app.add_subcommand("verify", "single verifications");
  verify->require_subcommand(1);
  std::vector<std::pair<std::string, CLI::App*>> verifiers;
  for (const char* v : {"thm3", "q-prop", "p-prop", "kac-freeness", "p-kac", "tensor-les", "dualpair", "split", "spherical"}) {
    auto* c = verify->add_subcommand(v);
    flags(c);
    verifiers.emplace_back(v, c);
  }

  auto* suite = app.add_subcommand("suite", "acceptance suites");
  suite->add_option("name", suite_name, "all or a suite name");
  flags(suite);

  std::vector<const char*> args;
  for (const auto& a : argv) args.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(args.size()), args.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err) == 0 ? kExitPass : kExitBadArguments;
  } catch (const CLI::ParseError& e) {
    err << "invalid arguments: " << e.what() << "\n";
    return kExitBadArguments;
  }

  try {
    if (info->parsed()) {
      auto g = algebra_of(o);
      Json j = to_json(*g);
      out << to_string(g->family().tag) << " m=" << g->family().m << " n=" << g->family().n << " sdim " << to_string(g->sdim())
          << " jacobi " << (verify_lie(*g).pass ? "ok" : "FAILS") << "\n";
      write_file(fs::path(o.out) / "algebra.json", canonical(document("algebra", j)));
      return kExitPass;
    }
    if (compute->parsed()) {
      auto g = algebra_of(o);
      OddElem u;
      if (!o.u.empty()) u = make_odd(g, parse_element(*g, o.u));
      else u = standard_elem(g, rank_of_opts(o, g->family().tag));
      Rep m = module_of(g, o.module);
      DSResult d = ds(m, u);
      out << "M sdim " << to_string(m.space.sdim()) << "  M_u sdim " << to_string(d.cohomology.sdim()) << "\n";
      write_file(fs::path(o.out) / "ds.json", canonical(document("ds", to_json(d))));
      return kExitPass;
    }
    for (const auto& [name, c] : verifiers)
      if (c->parsed()) return run_verify(name, o, out);
    if (suite->parsed()) return run_suites(suite_name, o, out);
  } catch (const ArgError& e) {
    err << "invalid arguments: " << e.what() << "\n";
    return kExitBadArguments;
  } catch (const Error& e) {
    if (is_argument_error(e.kind())) {
      err << "invalid arguments: " << e.what() << "\n";
      return kExitBadArguments;
    }
    err << "check failed: " << e.what() << "\n";
    return kExitCheckFailed;
  } catch (const std::invalid_argument& e) {
    err << "invalid arguments: " << e.what() << "\n";
    return kExitBadArguments;
  }
  return kExitBadArguments;
}

}  // namespace dslab
