#include "bhdimer/scenario.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include <json.hpp>

#include "bhdimer/error.hpp"
#include "bhdimer/revival.hpp"

namespace bhdimer {

namespace {

using nlohmann::json;
using std::numbers::pi;

double number_field(const json& doc, const char* key) {
  const auto& v = doc.at(key);
  if (!v.is_number()) throw ConfigError(std::string("scenario field '") + key + "' must be a number");
  return v.get<double>();
}

int integer_field(const json& doc, const char* key) {
  const auto& v = doc.at(key);
  if (!v.is_number_integer()) {
    throw ConfigError(std::string("scenario field '") + key + "' must be an integer");
  }
  return v.get<int>();
}

OutputSet parse_outputs(const json& v) {
  if (!v.is_array()) throw ConfigError("scenario field 'outputs' must be an array");
  OutputSet out{false, false, false};
  for (const auto& item : v) {
    const auto name = item.is_string() ? item.get<std::string>() : std::string();
    if (name == "exact") {
      out.exact = true;
    } else if (name == "semianalytic") {
      out.semianalytic = true;
    } else if (name == "closedform") {
      out.closedform = true;
    } else {
      throw ConfigError("unknown output '" + item.dump() + "'");
    }
  }
  return out;
}

}  // namespace

void Scenario::validate() const {
  if (!(std::isfinite(t_max) && t_max > 0.0)) throw ConfigError("t_max must be > 0");
  if (samples_per_rabi_period < 4) throw ConfigError("samples_per_rabi_period must be >= 4");
  if (!(alpha >= 0.0 && alpha <= pi / 2)) throw ConfigError("alpha must lie in [0, pi/2]");
}

double rabi_period(const ModelParams& params) {
  const double u = params.u();
  const double phi = params.J() * (2.0 + u * u / 8.0 + u / params.N());
  return 2.0 * pi / phi;
}

double default_t_max(const ModelParams& params) {
  if (params.u() > 0.0) return 4.5 * pi * params.N() / (params.u() * params.J());
  return 100.0 / params.J();
}

std::vector<std::string> builtin_scenario_names() { return {"fig1", "fig2", "rabi-only"}; }

bool is_builtin_scenario(std::string_view name) {
  return name == "fig1" || name == "fig2" || name == "rabi-only";
}

Scenario builtin_scenario(std::string_view name) {
  if (name == "fig1") {
    // J = 1, N = 100, u = 1/2, out past the blur time.
    ModelParams params(1.0, 0.005, 100);
    const auto s = revival_structure(params);
    return Scenario{"fig1", params, 0.0, 1.1 * s.blur_time, 20, {}};
  }
  if (name == "fig2") {
    // J = 1, N = 50, u = 1/20, revivals m <= 4.
    ModelParams params(1.0, 0.001, 50);
    return Scenario{"fig2", params, 0.0, default_t_max(params), 20, {}};
  }
  if (name == "rabi-only") {
    ModelParams params(1.0, 0.0, 100);
    return Scenario{"rabi-only", params, 0.0, 100.0, 20, {true, false, false}};
  }
  throw ConfigError("unknown builtin scenario '" + std::string(name) + "'");
}

Scenario parse_scenario_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("scenario is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ConfigError("scenario must be a JSON object");

  static const char* const known[] = {"label", "J", "U", "u", "N", "alpha", "t_max",
                                      "samples_per_rabi_period", "outputs"};
  for (const auto& [key, _] : doc.items()) {
    bool ok = false;
    for (const char* k : known) ok = ok || key == k;
    if (!ok) throw ConfigError("unknown scenario field '" + key + "'");
  }
  if (!doc.contains("N")) throw ConfigError("scenario requires 'N'");
  if (doc.contains("U") == doc.contains("u")) {
    throw ConfigError("scenario requires exactly one of 'U' and 'u'");
  }

  try {
    const double J = doc.contains("J") ? number_field(doc, "J") : 1.0;
    const int N = integer_field(doc, "N");
    const ModelParams params = doc.contains("U") ? ModelParams(J, number_field(doc, "U"), N)
                                                 : ModelParams::from_coupling(J, number_field(doc, "u"), N);
    Scenario s{doc.value("label", std::string("custom")), params, 0.0, default_t_max(params), 20, {}};
    if (doc.contains("alpha")) s.alpha = number_field(doc, "alpha");
    if (doc.contains("t_max")) s.t_max = number_field(doc, "t_max");
    if (doc.contains("samples_per_rabi_period")) {
      s.samples_per_rabi_period = integer_field(doc, "samples_per_rabi_period");
    }
    if (doc.contains("outputs")) s.outputs = parse_outputs(doc.at("outputs"));
    s.validate();
    return s;
  } catch (const json::exception& e) {
    throw ConfigError(std::string("malformed scenario: ") + e.what());
  }
}

Scenario load_scenario(std::string_view name_or_path) {
  if (is_builtin_scenario(name_or_path)) return builtin_scenario(name_or_path);
  std::ifstream in{std::string(name_or_path)};
  if (!in) {
    throw ConfigError("'" + std::string(name_or_path) +
                      "' is neither a builtin scenario nor a readable file");
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_scenario_json(buffer.str());
}

Scenario apply_overrides(const Scenario& base, const ScenarioOverrides& o) {
  if (o.U && o.u) throw ConfigError("--U and --u are mutually exclusive");
  const double J = o.J.value_or(base.params.J());
  const int N = o.N.value_or(base.params.N());
  const bool params_changed = o.J || o.N || o.U || o.u;
  ModelParams params = base.params;
  if (o.U) {
    params = ModelParams(J, *o.U, N);
  } else if (o.u) {
    params = ModelParams::from_coupling(J, *o.u, N);
  } else if (params_changed) {
    params = ModelParams(J, base.params.U(), N);
  }
  Scenario s = base;
  s.params = params;
  if (params_changed && !o.t_max) s.t_max = default_t_max(params);
  if (o.alpha) s.alpha = *o.alpha;
  if (o.t_max) s.t_max = *o.t_max;
  if (o.samples_per_rabi_period) s.samples_per_rabi_period = *o.samples_per_rabi_period;
  s.validate();
  return s;
}

std::vector<double> time_grid(const Scenario& scenario) {
  scenario.validate();
  const double dt = rabi_period(scenario.params) / scenario.samples_per_rabi_period;
  const auto count = static_cast<std::size_t>(std::floor(scenario.t_max / dt)) + 1;
  std::vector<double> times(count);
  for (std::size_t i = 0; i < count; ++i) times[i] = static_cast<double>(i) * dt;
  return times;
}

}  // namespace bhdimer
