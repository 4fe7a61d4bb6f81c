#include "minsurf/config.hpp"

#include <fstream>

#include "minsurf/builtin.hpp"

namespace minsurf {

void RunConfig::validate() const {
  if (!(tol_algebraic > 0)) throw ConfigError("tol_algebraic must be positive");
  if (!(tol_algebraic <= tol_numeric)) throw ConfigError("tol_algebraic must be <= tol_numeric");
  if (!(precision <= tol_numeric)) throw ConfigError("precision must be <= tol_numeric");
  if (format != "json" && format != "csv" && format != "obj") {
    throw ConfigError("format must be json, csv or obj");
  }
}

TrigonalCurve RunConfig::curve() const {
  if (raw.contains("curve")) {
    const auto& c = raw.at("curve");
    if (!c.contains("roots")) throw ConfigError("curve needs a roots array");
    std::vector<complex_t> roots;
    for (const auto& r : c.at("roots")) roots.push_back(complex_from_json(r));
    return curve_from_roots(roots);
  }
  return builtin::curve();
}

Differential differential_from_json(const json& j) {
  Differential d;
  std::vector<complex_t> coeffs;
  for (const auto& c : j.at("numerator")) coeffs.push_back(complex_from_json(c));
  d.numerator = Poly(std::move(coeffs));
  d.w_power = j.at("w_power").get<int>();
  if (d.w_power != 1 && d.w_power != 2) throw ConfigError("w_power must be 1 or 2");
  d.label = j.value("label", std::string("form"));
  return d;
}

std::vector<Differential> RunConfig::differentials() const {
  if (raw.contains("differentials")) {
    std::vector<Differential> out;
    for (const auto& j : raw.at("differentials")) out.push_back(differential_from_json(j));
    if (out.empty()) throw ConfigError("differentials array is empty");
    return out;
  }
  return builtin::phi();
}

Cycle cycle_from_json(const json& j) {
  Cycle c;
  c.name = j.value("name", std::string("cycle"));
  for (const auto& s : j.at("segments")) {
    CycleSegment seg;
    const std::string kind = s.value("kind", std::string("circle_arc"));
    if (kind != "circle_arc") throw ConfigError("only circle_arc segments are configurable");
    const auto& tr = s.at("t_range");
    const real_t t0 = real_from_json(tr.at(0));
    const real_t t1 = real_from_json(tr.at(1));
    const int direction = s.at("direction").get<int>();
    if (direction != 1 && direction != -1) throw ConfigError("direction must be +1 or -1");
    complex_t center(0);
    real_t radius(1);
    if (s.contains("center")) center = complex_from_json(s.at("center"));
    if (s.contains("radius")) radius = real_from_json(s.at("radius"));
    seg.arc = Arc::circle(center, radius, direction, t0, t1);
    seg.multiplier = RootOfUnity::parse(s.at("multiplier").get<std::string>());
    seg.seed_t = real_from_json(s.at("seed").at("t"));
    seg.seed_w = complex_from_json(s.at("seed").at("w"));
    c.segments.push_back(std::move(seg));
  }
  if (c.segments.empty()) throw ConfigError("cycle has no segments");
  return c;
}

json cycle_to_json(const Cycle& c) {
  json out;
  out["name"] = c.name;
  json segs = json::array();
  for (const auto& s : c.segments) {
    json seg;
    seg["kind"] = "circle_arc";
    seg["direction"] = s.arc.direction();
    seg["t_range"] = json::array({to_string(s.arc.t0()), to_string(s.arc.t1())});
    if (cabs(s.arc.center()) != 0) seg["center"] = complex_to_json(s.arc.center());
    if (s.arc.radius() != 1) seg["radius"] = to_string(s.arc.radius());
    seg["multiplier"] = s.multiplier.str();
    seg["seed"] = json{{"t", to_string(s.seed_t)}, {"w", complex_to_json(s.seed_w)}};
    segs.push_back(std::move(seg));
  }
  out["segments"] = std::move(segs);
  return out;
}

std::vector<Cycle> RunConfig::cycles(const TrigonalCurve& cur) const {
  if (raw.contains("cycles") && !raw.at("cycles").is_string()) {
    std::vector<Cycle> out;
    for (const auto& j : raw.at("cycles")) out.push_back(cycle_from_json(j));
    return out;
  }
  return builtin_cycles(cur);
}

std::optional<IntMat> RunConfig::override_intmat(const std::string& key) const {
  if (raw.contains("overrides") && raw.at("overrides").contains(key)) {
    return intmat_from_json(raw.at("overrides").at(key));
  }
  return std::nullopt;
}

RunConfig config_from_json(const json& doc) {
  RunConfig c;
  c.raw = doc;
  if (doc.contains("precision")) c.precision = real_from_json(doc.at("precision"));
  if (doc.contains("tol_algebraic")) c.tol_algebraic = real_from_json(doc.at("tol_algebraic"));
  if (doc.contains("tol_numeric")) c.tol_numeric = real_from_json(doc.at("tol_numeric"));
  if (doc.contains("max_height")) {
    const auto& h = doc.at("max_height");
    c.max_height = h.is_string() ? bigint_t(h.get<std::string>()) : bigint_t(h.get<long long>());
  }
  if (doc.contains("output")) {
    c.out_path = doc.at("output").value("path", std::string());
    c.format = doc.at("output").value("format", std::string("json"));
  }
  c.validate();
  return c;
}

RunConfig default_config() { return config_from_json(json::object()); }

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  json doc;
  try {
    in >> doc;
  } catch (const std::exception& e) {
    throw ConfigError(std::string("config parse error: ") + e.what());
  }
  return config_from_json(doc);
}

}  // namespace minsurf
