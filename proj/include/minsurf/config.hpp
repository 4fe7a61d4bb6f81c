#pragma once

#include <optional>
#include <string>
#include <vector>

#include "minsurf/cycles.hpp"
#include "minsurf/serialize.hpp"

namespace minsurf {

// One JSON file drives every subcommand; no environment variables.
struct RunConfig {
  real_t precision = default_period_precision();  // absolute error per period
  real_t tol_algebraic = real_t("1e-12");
  real_t tol_numeric = real_t("1e-8");
  bigint_t max_height = 1000000;
  std::string out_path;
  std::string format = "json";  // json | csv | obj
  json raw;                     // full document, for command sections

  void validate() const;

  // curve / differentials / cycles with builtin defaults
  TrigonalCurve curve() const;
  std::vector<Differential> differentials() const;
  std::vector<Cycle> cycles(const TrigonalCurve& curve) const;

  // matrix override hook (fault injection, alternative certificates)
  std::optional<IntMat> override_intmat(const std::string& key) const;
};

RunConfig default_config();
RunConfig load_config(const std::string& path);
RunConfig config_from_json(const json& doc);

Differential differential_from_json(const json& j);
Cycle cycle_from_json(const json& j);
json cycle_to_json(const Cycle& c);

}  // namespace minsurf
