#include "dslab/serialize.hpp"

#include <cstdio>

namespace dslab {

namespace {

[[noreturn]] void violation(const std::string& path, const std::string& what) {
  throw Error(ErrorKind::SchemaViolation, path + ": " + what);
}

const Json& field(const Json& j, const std::string& key, const std::string& path) {
  if (!j.is_object()) violation(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) violation(path + "." + key, "missing key");
  return *it;
}

Scalar scalar_at(const Json& j, const std::string& path) {
  if (!j.is_string()) violation(path, "expected a rational string");
  try {
    return parse_scalar(j.get<std::string>());
  } catch (const std::exception&) {
    violation(path, "not a rational: " + j.get<std::string>());
  }
}

template <class T>
T get_at(const Json& j, const std::string& path) {
  try {
    return j.get<T>();
  } catch (const std::exception&) {
    violation(path, "wrong type");
  }
}

const Json& array_at(const Json& j, const std::string& path) {
  if (!j.is_array()) violation(path, "expected an array");
  return j;
}

Vector vector_at(const Json& j, const std::string& path) {
  Vector v;
  const auto& a = array_at(j, path);
  for (std::size_t i = 0; i < a.size(); ++i) v.push_back(scalar_at(a[i], path + "[" + std::to_string(i) + "]"));
  return v;
}

Json vector_json(std::span<const Scalar> v) {
  Json a = Json::array();
  for (const auto& s : v) a.push_back(to_json(s));
  return a;
}

Matrix matrix_at(const Json& j, const std::string& path) {
  auto r = get_at<std::size_t>(field(j, "rows", path), path + ".rows");
  auto c = get_at<std::size_t>(field(j, "cols", path), path + ".cols");
  const auto& e = array_at(field(j, "entries", path), path + ".entries");
  if (e.size() != r) violation(path + ".entries", "row count differs from rows");
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    std::string p = path + ".entries[" + std::to_string(i) + "]";
    Vector row = vector_at(e[i], p);
    if (row.size() != c) violation(p, "row length differs from cols");
    for (std::size_t k = 0; k < c; ++k) m(i, k) = row[k];
  }
  return m;
}

std::vector<Matrix> matrices_at(const Json& j, const std::string& path) {
  std::vector<Matrix> out;
  const auto& a = array_at(j, path);
  for (std::size_t i = 0; i < a.size(); ++i) out.push_back(matrix_at(a[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

SuperSpace space_at(const Json& j, const std::string& path) {
  auto labels = get_at<std::vector<std::string>>(field(j, "labels", path), path + ".labels");
  auto parities = get_at<std::vector<int>>(field(j, "parities", path), path + ".parities");
  std::optional<std::vector<Weight>> w;
  if (j.contains("weights")) w = get_at<std::vector<Weight>>(j["weights"], path + ".weights");
  try {
    return SuperSpace(std::move(labels), std::move(parities), std::move(w));
  } catch (const Error& e) {
    violation(path, e.what());
  }
}

Subspace subspace_at(const Json& j, std::size_t ambient, const std::string& path) {
  Matrix b = matrix_at(j, path);
  if (b.cols() != ambient) violation(path, "ambient dimension mismatch");
  Subspace s = b.rows() ? Subspace::span_rows(b) : Subspace(ambient);
  if (s.dim() != b.rows() || !(s.basis() == b)) violation(path, "basis is not in canonical echelon form");
  return s;
}

Json subspace_json(const Subspace& s) { return to_json(s.dim() ? s.basis() : Matrix(0, s.ambient())); }

RankData rank_at(const Json& j, const std::string& path) {
  RankData d;
  d.family = family_from_string(get_at<std::string>(field(j, "family", path), path + ".family"));
  d.r = get_at<long>(field(j, "r", path), path + ".r");
  d.k = get_at<long>(field(j, "k", path), path + ".k");
  d.s = get_at<long>(field(j, "s", path), path + ".s");
  d.d = get_at<long>(field(j, "d", path), path + ".d");
  d.coefficients = vector_at(field(j, "coefficients", path), path + ".coefficients");
  return d;
}

LieSA algebra_at(const Json& j, const std::string& path) {
  SuperSpace sp = space_at(field(j, "space", path), path + ".space");
  auto ad = matrices_at(field(j, "ad", path), path + ".ad");
  const Json& f = field(j, "family", path);
  FamilyParams fam;
  fam.tag = family_from_string(get_at<std::string>(field(f, "tag", path + ".family"), path + ".family.tag"));
  fam.m = get_at<std::size_t>(field(f, "m", path + ".family"), path + ".family.m");
  fam.n = get_at<std::size_t>(field(f, "n", path + ".family"), path + ".family.n");
  LieSA g;
  try {
    g = LieSA(std::move(sp), std::move(ad), fam);
  } catch (const Error& e) {
    violation(path, e.what());
  }
  if (j.contains("realization")) {
    const Json& r = j["realization"];
    g.set_realization(MatrixRealization(space_at(field(r, "natural", path + ".realization"), path + ".realization.natural"),
                                        matrices_at(field(r, "basis", path + ".realization"), path + ".realization.basis")));
  }
  if (j.contains("zgrading")) g.set_zgrading(get_at<std::vector<int>>(j["zgrading"], path + ".zgrading"));
  if (j.contains("cartan")) {
    std::vector<Vector> h;
    const auto& a = array_at(j["cartan"], path + ".cartan");
    for (std::size_t i = 0; i < a.size(); ++i) h.push_back(vector_at(a[i], path + ".cartan[" + std::to_string(i) + "]"));
    g.set_cartan(std::move(h));
  }
  return g;
}

Rep rep_at(const Json& j, const std::string& path) {
  auto g = std::make_shared<const LieSA>(algebra_at(field(j, "algebra", path), path + ".algebra"));
  Rep r{g, space_at(field(j, "space", path), path + ".space"), matrices_at(field(j, "action", path), path + ".action")};
  if (r.action.size() != g->dim()) violation(path + ".action", "one matrix per algebra basis element expected");
  return r;
}

OddElem odd_at(const Json& j, AlgebraPtr g, const std::string& path) {
  OddElem u;
  u.parent = std::move(g);
  u.coords = vector_at(field(j, "u", path), path + ".u");
  u.c = vector_at(field(j, "c", path), path + ".c");
  u.homogeneous = get_at<bool>(field(j, "homogeneous", path), path + ".homogeneous");
  if (j.contains("rank")) u.rank = rank_at(j["rank"], path + ".rank");
  if (u.coords.size() != u.parent->dim()) violation(path + ".u", "dimension mismatch");
  return u;
}

}  // namespace

Json to_json(const Scalar& s) { return to_string(s); }

Json to_json(const Matrix& m) {
  Json e = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) e.push_back(vector_json(m.row(i)));
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", e}};
}

Json to_json(const SuperSpace& s) {
  Json j = {{"labels", s.labels()}, {"parities", s.parities()}};
  if (s.has_weights()) j["weights"] = s.weights();
  return j;
}

Json to_json(const LieSA& g) {
  Json ad = Json::array();
  for (const auto& m : g.ad_matrices()) ad.push_back(to_json(m));
  Json j = {{"space", to_json(g.space())},
            {"ad", ad},
            {"family", {{"tag", to_string(g.family().tag)}, {"m", g.family().m}, {"n", g.family().n}}}};
  if (g.realization()) {
    Json b = Json::array();
    for (const auto& m : g.realization()->basis) b.push_back(to_json(m));
    j["realization"] = {{"natural", to_json(g.realization()->natural)}, {"basis", b}};
  }
  if (g.zgrading()) j["zgrading"] = *g.zgrading();
  if (!g.cartan().empty()) {
    Json h = Json::array();
    for (const auto& v : g.cartan()) h.push_back(vector_json(v));
    j["cartan"] = h;
  }
  return j;
}

Json to_json(const Rep& r) {
  Json act = Json::array();
  for (const auto& m : r.action) act.push_back(to_json(m));
  return {{"algebra", to_json(*r.algebra)}, {"space", to_json(r.space)}, {"action", act}};
}

Json to_json(const RankData& d) {
  return {{"family", to_string(d.family)}, {"r", d.r},          {"k", d.k},
          {"s", d.s},                      {"d", d.d},          {"coefficients", vector_json(d.coefficients)},
          {"rank", to_json(d.rank())}};
}

Json to_json(const OddElem& u) {
  Json j = {{"algebra", to_json(*u.parent)},
            {"u", vector_json(u.coords)},
            {"c", vector_json(u.c)},
            {"homogeneous", u.homogeneous}};
  if (u.rank) j["rank"] = to_json(*u.rank);
  return j;
}

Json to_json(const DSResult& d) {
  Json u = to_json(d.u);
  u.erase("algebra");  // same as the source algebra
  return {{"source", to_json(d.source)},
          {"u", u},
          {"invariant", subspace_json(d.invariant)},
          {"kernel", subspace_json(d.kernel)},
          {"image", subspace_json(d.image)},
          {"cohomology", to_json(d.cohomology)},
          {"representatives", to_json(d.quotient.reps.rows() ? d.quotient.reps : Matrix(0, d.source.dim()))},
          {"sdim", {{"even", d.cohomology.sdim().even}, {"odd", d.cohomology.sdim().odd}}}};
}

Json to_json(const Report& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json e = {{"name", c.name}, {"pass", c.pass}};
    if (!c.witness.empty()) e["witness"] = c.witness;
    checks.push_back(e);
  }
  Json dims = Json::array();
  for (const auto& [n, d] : r.dims) dims.push_back({{"name", n}, {"even", d.even}, {"odd", d.odd}});
  return {{"id", r.id}, {"pass", r.pass()}, {"checks", checks}, {"dims", dims}};
}

LieSA algebra_from_json(const Json& j) { return algebra_at(j, "$"); }
Rep rep_from_json(const Json& j) { return rep_at(j, "$"); }

OddElem odd_from_json(const Json& j) {
  auto g = std::make_shared<const LieSA>(algebra_at(field(j, "algebra", "$"), "$.algebra"));
  return odd_at(j, g, "$");
}

DSResult ds_from_json(const Json& j) {
  Rep src = rep_at(field(j, "source", "$"), "$.source");
  DSResult d{src, odd_at(field(j, "u", "$"), src.algebra, "$.u")};
  const std::size_t n = src.dim();
  d.invariant = subspace_at(field(j, "invariant", "$"), n, "$.invariant");
  d.kernel = subspace_at(field(j, "kernel", "$"), n, "$.kernel");
  d.image = subspace_at(field(j, "image", "$"), n, "$.image");
  if (!d.kernel.contains(d.image)) violation("$.image", "image is not inside the kernel");
  d.quotient = quotient(d.kernel, d.image);
  d.cohomology = space_at(field(j, "cohomology", "$"), "$.cohomology");
  Matrix reps = matrix_at(field(j, "representatives", "$"), "$.representatives");
  if (d.cohomology.dim() != d.quotient.dim()) violation("$.cohomology", "dimension differs from kernel/image");
  if (!(reps == (d.quotient.dim() ? d.quotient.reps : Matrix(0, n))))
    violation("$.representatives", "not the canonical representatives");
  return d;
}

Report report_from_json(const Json& j) {
  Report r;
  r.id = get_at<std::string>(field(j, "id", "$"), "$.id");
  const auto& checks = array_at(field(j, "checks", "$"), "$.checks");
  for (std::size_t i = 0; i < checks.size(); ++i) {
    std::string p = "$.checks[" + std::to_string(i) + "]";
    Check c{get_at<std::string>(field(checks[i], "name", p), p + ".name"), get_at<bool>(field(checks[i], "pass", p), p + ".pass")};
    if (checks[i].contains("witness")) c.witness = get_at<std::string>(checks[i]["witness"], p + ".witness");
    r.checks.push_back(std::move(c));
  }
  const auto& dims = array_at(field(j, "dims", "$"), "$.dims");
  for (std::size_t i = 0; i < dims.size(); ++i) {
    std::string p = "$.dims[" + std::to_string(i) + "]";
    r.dim(get_at<std::string>(field(dims[i], "name", p), p + ".name"),
          SDim{get_at<std::size_t>(field(dims[i], "even", p), p + ".even"),
               get_at<std::size_t>(field(dims[i], "odd", p), p + ".odd")});
  }
  return r;
}

Json document(const std::string& kind, Json payload) {
  return {{"schema", kSchemaVersion}, {"kind", kind}, {"data", std::move(payload)}};
}

const Json& open_document(const Json& doc, const std::string& kind) {
  if (get_at<int>(field(doc, "schema", "$"), "$.schema") != kSchemaVersion) violation("$.schema", "unsupported version");
  if (get_at<std::string>(field(doc, "kind", "$"), "$.kind") != kind) violation("$.kind", "expected " + kind);
  return field(doc, "data", "$");
}

std::string canonical(const Json& j) { return j.dump(2) + "\n"; }

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    violation("$", std::string("malformed JSON: ") + e.what());
  }
}

std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace dslab
