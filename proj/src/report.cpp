#include "minsurf/report.hpp"

namespace minsurf {

json VerificationReport::to_json(bool include_timing) const {
  json out;
  out["schema"] = 1;
  out["overall_pass"] = overall_pass();
  json arr = json::array();
  for (const auto& c : checks) {
    json e;
    e["name"] = c.name;
    e["description"] = c.description;
    e["anchor"] = c.anchor;
    e["residual"] = c.residual;
    e["tolerance"] = c.tolerance;
    e["pass"] = c.pass;
    if (include_timing) e["ms"] = c.ms;
    arr.push_back(std::move(e));
  }
  out["checks"] = std::move(arr);
  return out;
}

}  // namespace minsurf
