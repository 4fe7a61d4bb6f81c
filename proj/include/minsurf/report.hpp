#pragma once

#include <string>
#include <vector>

#include "minsurf/serialize.hpp"

namespace minsurf {

struct CheckEntry {
  std::string name;         // stable identifier, e.g. "factorization.primary"
  std::string description;  // what was checked
  std::string anchor;       // the identity in formula form
  double residual = 0;
  double tolerance = 0;
  bool pass = false;
  double ms = 0;
};

struct VerificationReport {
  std::vector<CheckEntry> checks;

  bool overall_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }

  // Deterministic apart from the timing fields, which can be dropped.
  json to_json(bool include_timing = true) const;
};

}  // namespace minsurf
