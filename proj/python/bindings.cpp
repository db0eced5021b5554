#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cli.hpp"
#include "dslab/suites.hpp"

#include <sstream>

namespace py = pybind11;
using namespace dslab;

namespace {

py::object fraction(const Scalar& s) { return py::module_::import("fractions").attr("Fraction")(to_string(s)); }

// int, str "p/q", or anything whose str() parses (Fraction does)
Scalar scalar_of(const py::handle& h) { return parse_scalar(py::str(h).cast<std::string>()); }

Vector vector_of(const py::sequence& s) {
  Vector v;
  for (auto h : s) v.push_back(scalar_of(h));
  return v;
}

py::list fractions(std::span<const Scalar> v) {
  py::list l;
  for (const auto& s : v) l.append(fraction(s));
  return l;
}

const RankData& rank_data(const OddElem& u) {
  if (!u.rank) throw Error(ErrorKind::NotStandardForm, "verifications take an element built by standard()");
  return *u.rank;
}

py::tuple sdim_tuple(SDim d) { return py::make_tuple(d.even, d.odd); }

std::string dumps(const Json& j) { return canonical(j); }

Vector element_of(const LieSA& g, const py::object& x) {
  if (py::isinstance<py::str>(x)) return g.element(x.cast<std::string>());
  if (py::isinstance<py::dict>(x)) {
    Vector v(g.dim(), Scalar(0));
    for (auto [k, c] : x.cast<py::dict>()) v = add(v, scale(scalar_of(c), g.element(k.cast<std::string>())));
    return v;
  }
  return vector_of(x.cast<py::sequence>());
}

}  // namespace

PYBIND11_MODULE(_dslab, m) {
  m.doc() = "Exact Duflo-Serganova functor computations";

  py::register_exception<Error>(m, "DslabError", PyExc_ValueError);

  py::class_<LieSA, std::shared_ptr<LieSA>>(m, "Algebra")
      .def_property_readonly("dim", &LieSA::dim)
      .def_property_readonly("sdim", [](const LieSA& g) { return sdim_tuple(g.sdim()); })
      .def_property_readonly("labels", [](const LieSA& g) { return g.space().labels(); })
      .def_property_readonly("family", [](const LieSA& g) { return std::string(to_string(g.family().tag)); })
      .def("element", [](const LieSA& g, const std::string& l) { return fractions(g.element(l)); })
      .def("bracket", [](const LieSA& g, const py::object& x, const py::object& y) {
        return fractions(g.bracket(element_of(g, x), element_of(g, y)));
      })
      .def("is_lie", [](const LieSA& g) { return verify_lie(g).pass; })
      .def("to_json", [](const LieSA& g) { return dumps(document("algebra", to_json(g))); })
      .def("__repr__", [](const LieSA& g) {
        return "<Algebra " + std::string(to_string(g.family().tag)) + " sdim " + to_string(g.sdim()) + ">";
      });

  m.def("algebra", [](const std::string& family, std::size_t mm, std::size_t n) {
        return std::make_shared<LieSA>(make_family(family_from_string(family), mm, n));
      }, py::arg("family"), py::arg("m") = 1, py::arg("n") = 1);
  m.def("algebra_from_json", [](const std::string& text) {
    return std::make_shared<LieSA>(algebra_from_json(open_document(parse_json(text), "algebra")));
  });

  py::class_<Rep>(m, "Rep")
      .def_property_readonly("dim", &Rep::dim)
      .def_property_readonly("sdim", [](const Rep& r) { return sdim_tuple(r.space.sdim()); })
      .def("is_rep", [](const Rep& r) { return verify_rep(r).pass; })
      .def("to_json", [](const Rep& r) { return dumps(document("rep", to_json(r))); });

  auto cast = [](const std::shared_ptr<LieSA>& g) { return AlgebraPtr(g); };
  m.def("trivial", [cast](const std::shared_ptr<LieSA>& g) { return trivial_rep(cast(g)); });
  m.def("natural", [cast](const std::shared_ptr<LieSA>& g) { return natural_rep(cast(g)); });
  m.def("adjoint", [cast](const std::shared_ptr<LieSA>& g) { return adjoint_rep(cast(g)); });
  m.def("berezinian", [cast](const std::shared_ptr<LieSA>& g, long k) { return berezinian_rep(cast(g), k); });
  m.def("dual", &dual_rep);
  m.def("tensor", &tensor_rep);
  m.def("parity_shift", &parity_shift_rep);
  m.def("direct_sum", &direct_sum_rep);
  m.def("kac_module", [cast](const std::shared_ptr<LieSA>& g, const std::string& l0, const std::string& dir) {
        KacDirection d = dir == "thick" ? KacDirection::Thick : KacDirection::Thin;
        if (dir != "thin" && dir != "thick") throw Error(ErrorKind::InvalidParams, "direction is thin or thick");
        return kac_induce(cast(g), kac_l0(cast(g), kac_l0_from_string(l0)), d).rep;
      }, py::arg("algebra"), py::arg("l0") = "trivial", py::arg("direction") = "thin");

  py::class_<OddElem>(m, "OddElem")
      .def_property_readonly("coords", [](const OddElem& u) { return fractions(u.coords); })
      .def_property_readonly("square", [](const OddElem& u) { return fractions(u.c); })
      .def_property_readonly("homogeneous", [](const OddElem& u) { return u.homogeneous; })
      .def_property_readonly("rank", [](const OddElem& u) {
        RankData d = u.rank ? *u.rank : rank_of(*u.parent, u.coords);
        return fraction(d.rank());
      })
      .def("to_json", [](const OddElem& u) { return dumps(document("odd", to_json(u))); });

  m.def("odd", [cast](const std::shared_ptr<LieSA>& g, const py::object& x) { return make_odd(cast(g), element_of(*g, x)); });
  m.def("standard", [cast](const std::shared_ptr<LieSA>& g, long r, long s, long d, const py::sequence& coeffs) {
        RankData data;
        data.family = g->family().tag;
        data.r = r;
        data.s = s;
        data.d = d;
        data.coefficients = vector_of(coeffs);
        data.k = data.family == Family::P ? 0 : static_cast<long>(data.coefficients.size());
        return standard_elem(cast(g), data);
      }, py::arg("algebra"), py::arg("r") = 0, py::arg("s") = 0, py::arg("d") = 0, py::arg("coeffs") = py::list());

  py::class_<DSResult>(m, "DSResult")
      .def_property_readonly("sdim", [](const DSResult& d) { return sdim_tuple(d.cohomology.sdim()); })
      .def_property_readonly("dim", &DSResult::dim)
      .def_property_readonly("labels", [](const DSResult& d) { return d.cohomology.labels(); })
      .def("to_json", [](const DSResult& d) { return dumps(document("ds", to_json(d))); });
  m.def("ds", &ds);
  m.def("ds_from_json", [](const std::string& text) { return ds_from_json(open_document(parse_json(text), "ds")); });

  py::class_<Report>(m, "Report")
      .def_readonly("id", &Report::id)
      .def_property_readonly("passed", &Report::pass)
      .def_property_readonly("checks", [](const Report& r) {
        py::list l;
        for (const auto& c : r.checks) l.append(py::make_tuple(c.name, c.pass, c.witness));
        return l;
      })
      .def_property_readonly("dims", [](const Report& r) {
        py::dict d;
        for (const auto& [n, s] : r.dims) d[py::str(n)] = sdim_tuple(s);
        return d;
      })
      .def("to_json", [](const Report& r) { return dumps(to_json(r)); })
      .def("__repr__", [](const Report& r) { return "<Report " + r.id + (r.pass() ? " pass>" : " FAIL>"); });

  m.def("gu_sdim", [](const OddElem& u) { return sdim_tuple(gu_algebra(u.parent, u).algebra->sdim()); });
  m.def("tensor_iso_check", &tensor_iso_check);
  m.def("les_check", [](const Rep& v, const py::sequence& rows, const OddElem& u) {
    std::vector<Vector> vs;
    for (auto r : rows) vs.push_back(vector_of(r.cast<py::sequence>()));
    return les_check(v, Subspace::span(v.dim(), vs), u);
  });
  m.def("verify_thm3", [cast](const std::shared_ptr<LieSA>& g, const OddElem& u) { return verify_thm3(cast(g), rank_data(u)); });
  m.def("verify_q_prop", [cast](const std::shared_ptr<LieSA>& g, const OddElem& u) { return verify_q_prop(cast(g), rank_data(u)); });
  m.def("verify_p_prop", [cast](const std::shared_ptr<LieSA>& g, const OddElem& u) { return verify_p_prop(cast(g), rank_data(u)); });
  m.def("verify_kac_freeness", [cast](const std::shared_ptr<LieSA>& g, const std::string& l0) {
    return verify_kac_freeness(cast(g), kac_l0_from_string(l0));
  }, py::arg("algebra"), py::arg("l0") = "trivial");
  m.def("verify_dualpair", &verify_dualpair);
  m.def("verify_split", &verify_split);
  m.def("verify_spherical", &verify_spherical);

  m.def("suite_names", &suite_names);
  m.def("run_suite", [](const std::string& name, std::uint64_t seed, unsigned jobs) {
        SuiteRun run;
        {
          py::gil_scoped_release release;
          run = run_suite(make_suite(name, seed), jobs);
        }
        py::list reports;
        for (const auto& c : run.cases) reports.append(c.report);
        return py::make_tuple(run.pass(), reports, dumps(manifest(run)));
      }, py::arg("name"), py::arg("seed") = 1, py::arg("jobs") = 1);

  m.def("cli", [](std::vector<std::string> args) {
    args.insert(args.begin(), "dslab");
    std::ostringstream out, err;
    int code = cli_run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  });
}
