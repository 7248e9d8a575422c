#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bhdimer/analysis.hpp"
#include "bhdimer/evolution.hpp"
#include "bhdimer/revival.hpp"
#include "bhdimer/scenario.hpp"

namespace bhdimer {

struct TiltedRevival {
  double alpha = 0.0;
  double predicted_time = 0.0;
  bool found = false;
  double observed_time = 0.0;
  double observed_height = 0.0;
};

struct ComparisonReport {
  std::string label;
  std::optional<RevivalStructure> structure;  // empty when u == 0
  // Exact envelope against the closed-form envelope over the whole grid.
  std::optional<double> envelope_rmse;
  std::optional<double> envelope_max_abs_err;
  std::vector<PeakRecord> peaks;
  std::optional<double> fitted_collapse_time;
  std::vector<PhaseWindow> phase_windows;
  std::optional<TiltedRevival> tilted;
  // max |Delta_exact - cos(2Jt)/2| when u == 0 and the state starts all-left.
  std::optional<double> rabi_max_deviation;
  std::vector<std::string> notes;
};

struct ScenarioResult {
  Scenario scenario;
  std::vector<double> times;
  std::optional<TimeSeries> exact;
  std::optional<TimeSeries> semianalytic;
  std::optional<TimeSeries> closedform;
  ComparisonReport report;
};

struct RunOptions {
  unsigned threads = 1;
};

// Computes the requested series on one grid and fills the report with what
// those series allow. Engine errors propagate; analysis steps that cannot
// run (no revival structure, no decay) leave a note instead.
ScenarioResult run_scenario(const Scenario& scenario, const RunOptions& options = {});

// Exact and perturbative energies side by side, one row per level label n,
// n ascending. The exact level at ascending index j carries n = N/2 - j.
struct SpectrumRow {
  double n;
  double exact;
  double first_order;
  double second_order;
};

std::vector<SpectrumRow> spectrum_table(const ModelParams& params);

}  // namespace bhdimer
