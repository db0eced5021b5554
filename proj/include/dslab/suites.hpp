#pragma once

#include <cstdint>
#include <functional>
#include <string>

#include "dslab/serialize.hpp"
#include "dslab/symmetry.hpp"

namespace dslab {

inline constexpr const char* kArtifactVersion = "dslab-0.1.0";

// Single verifications; each returns a report whose pass() is the verdict.

/// gl(1|1) catalog entry: module in {ber, pi-ber, kac-ber, typical} with
/// integer n (Berezinian power) or weight (l1, l2) for the typical family.
Report verify_gl11_catalog(const std::string& module, long n, const std::vector<Scalar>& lambda = {});
/// g(u, t') for the standard u of the rank data against g_u × C^{0|r}; gl/sl.
Report verify_thm3(AlgebraPtr g, const RankData& d);
/// q(n): graded dimension q(n-2r-k) + (0|r+k) and the product structure.
Report verify_q_prop(AlgebraPtr g, const RankData& d);
/// p(n): graded dimension p(n-t-d) + (0|t) and the product structure. The
/// report also carries the observed p(n-2t-d) comparison as its own check.
Report verify_p_prop(AlgebraPtr g, const RankData& d);

enum class KacL0 { Trivial, NaturalDual, DetDet };
const char* to_string(KacL0 l);
KacL0 kac_l0_from_string(const std::string& s);
/// L0 as a g0-module for gl(m|n): trivial, V_m ⊠ V_n^*, det ⊠ det^{-1}.
Rep kac_l0(AlgebraPtr g, KacL0 which);
/// Standard u of rank min(m, n) on gl(m|n).
OddElem kac_u(AlgebraPtr g);
Report verify_kac_freeness(AlgebraPtr g, KacL0 which);
/// p(n) with L0 trivial: thin with u+, or thick with u- (even n).
Report verify_p_kac(std::size_t n, KacDirection dir);
/// DS of the Kac module, g_u action, pairing of weight multiplicities.
Report verify_kac_multiplicity(AlgebraPtr g, const Rep& l0, KacDirection dir, const OddElem& u);

/// Invariants of ∧gl(r): dimension, Poincaré polynomial, duality pairing.
Report verify_dualpair(std::size_t r);
/// Split example 1, 2 or 3.
Report verify_split(int example);
/// gl(n) ⊃ so(n) and (n = 2) sp(2) on L(λ).
Report verify_spherical(std::size_t n, const std::vector<long>& lambda);
/// Tensor, Π, dual and sdim compatibility of DS on a pair of modules.
Report verify_tensor_pair(const Rep& v, const Rep& w, const OddElem& u);
Report verify_les(const Rep& v, const Subspace& sub, const OddElem& u);

// Suites

struct CaseSpec {
  std::string id;
  Json params;
  std::function<Report()> run;
};

struct Suite {
  std::string name;
  std::string title;
  std::uint64_t seed = 0;
  std::vector<CaseSpec> cases;
};

/// Suite names in acceptance order.
const std::vector<std::string>& suite_names();
/// Throws InvalidParams for an unknown name.
Suite make_suite(const std::string& name, std::uint64_t seed = 1);

struct CaseResult {
  std::string id;
  Json params;
  Report report;
  std::string text;    // canonical report document
  std::string digest;  // FNV-1a of text
  double seconds = 0;
};

struct SuiteRun {
  std::string name;
  std::string title;
  std::uint64_t seed = 0;
  std::vector<CaseResult> cases;  // in case order
  double seconds = 0;
  bool pass() const;
  std::size_t failed() const;
};

/// Runs cases on up to `jobs` threads; results keep case order. A case that
/// throws is reported as a failed check carrying the message.
SuiteRun run_suite(const Suite& s, unsigned jobs = 1);

/// Report document of one case; no timing, so byte-stable.
Json case_document(const std::string& suite, const CaseSpec& c, const Report& r);
/// suite, version, seed, case params and digests.
Json manifest(const SuiteRun& run);

}  // namespace dslab
