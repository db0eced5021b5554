// One line per acceptance criterion; nonzero exit if any criterion fails.
#include <cstdio>
#include <iostream>

#include "dslab/suites.hpp"

using namespace dslab;

namespace {

struct Criterion {
  int number;
  const char* suite;
  const char* what;
  double limit;  // seconds; 0 for none
};

const Criterion kCriteria[] = {
    {1, "gl11-catalog", "gl(1|1) catalog", 1},
    {2, "thm3", "gl(m|n) symmetry algebra", 60},
    {3, "q-prop", "q(n) symmetry algebra", 60},
    {4, "p-prop", "p(n) symmetry algebra", 120},
    {5, "kac-freeness", "Kac freeness", 120},
    {6, "p-kac", "p(n) Kac modules", 120},
    {7, "dualpair", "invariants of the exterior algebra of gl(r)", 180},
    {8, "tensor-les", "DS functor properties", 60},
    {9, "split", "split algebras", 1},
    {10, "spherical", "sphericality", 60},
    {11, "multiplicity", "multiplicity pairing", 0},
};

}  // namespace

int main() {
  int failed = 0;
  for (const auto& c : kCriteria) {
    SuiteRun run = run_suite(make_suite(c.suite, 1), 1);
    bool in_time = c.limit == 0 || run.seconds < c.limit;
    bool ok = run.pass() && in_time;
    char line[256];
    std::snprintf(line, sizeof line, "criterion %2d %-44s %s  %zu/%zu cases  %.2f s", c.number, c.what, ok ? "PASS" : "FAIL",
                  run.cases.size() - run.failed(), run.cases.size(), run.seconds);
    std::cout << line;
    if (c.limit > 0) std::cout << " (limit " << c.limit << " s)";
    std::cout << "\n";
    if (!in_time) std::cout << "    over the time limit\n";
    for (const auto& r : run.cases)
      if (!r.report.pass()) {
        std::cout << "    " << r.id << ": " << r.report.failures();
        for (const auto& [n, d] : r.report.dims) std::cout << "  " << n << "=" << to_string(d);
        std::cout << "\n";
      }
    if (!ok) ++failed;
  }
  std::cout << (failed ? std::to_string(failed) + " criterion failing" : std::string("all criteria pass")) << "\n";
  return failed ? 1 : 0;
}
