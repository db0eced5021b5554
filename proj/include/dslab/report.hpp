#pragma once

#include <string>
#include <utility>
#include <vector>

#include "dslab/superspace.hpp"

namespace dslab {

struct Check {
  std::string name;
  bool pass = true;
  std::string witness;
};

/// Result of a verification: named checks plus graded dimensions of interest.
struct Report {
  std::string id;
  std::vector<Check> checks;
  std::vector<std::pair<std::string, SDim>> dims;

  bool pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
  void add(std::string name, bool ok, std::string witness = {}) {
    checks.push_back({std::move(name), ok, std::move(witness)});
  }
  void dim(std::string name, SDim d) { dims.emplace_back(std::move(name), d); }
  /// Names of failed checks, comma separated.
  std::string failures() const {
    std::string out;
    for (const auto& c : checks)
      if (!c.pass) out += (out.empty() ? "" : ", ") + c.name;
    return out;
  }
};

}  // namespace dslab
