#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bhdimer/model.hpp"

namespace bhdimer {

struct OutputSet {
  bool exact = true;
  bool semianalytic = true;
  bool closedform = true;
};

// A declarative run: model, initial state, time window and which series to
// produce. Builtins: "fig1", "fig2", "rabi-only".
struct Scenario {
  std::string label;
  ModelParams params;
  double alpha = 0.0;
  double t_max = 0.0;
  int samples_per_rabi_period = 20;
  OutputSet outputs;

  // Throws ConfigError on t_max <= 0, samples < 4 or alpha outside [0, pi/2].
  void validate() const;
};

// Per-field replacements, as given on the command line. U and u are
// mutually exclusive.
struct ScenarioOverrides {
  std::optional<double> J;
  std::optional<double> U;
  std::optional<double> u;
  std::optional<int> N;
  std::optional<double> alpha;
  std::optional<double> t_max;
  std::optional<int> samples_per_rabi_period;
};

// Fast oscillation period 2 pi / phi with phi = J (2 + u^2/8 + u/N); 2 pi / 2J
// at u = 0.
double rabi_period(const ModelParams& params);

// t_max used when a scenario does not give one: 4.5 T_R (four revivals)
// for u > 0, 100 / J otherwise.
double default_t_max(const ModelParams& params);

std::vector<std::string> builtin_scenario_names();
bool is_builtin_scenario(std::string_view name);
Scenario builtin_scenario(std::string_view name);

// Keys: label, J, U | u, N, alpha, t_max, samples_per_rabi_period, outputs.
// Unknown keys and malformed values throw ConfigError.
Scenario parse_scenario_json(std::string_view text);

// A builtin name, or a path to a JSON scenario file.
Scenario load_scenario(std::string_view name_or_path);

// Throws ConfigError when both U and u are set, InvalidParams for bad values.
Scenario apply_overrides(const Scenario& base, const ScenarioOverrides& overrides);

// t_i = i * rabi_period / samples_per_rabi_period for t_i <= t_max.
std::vector<double> time_grid(const Scenario& scenario);

}  // namespace bhdimer
