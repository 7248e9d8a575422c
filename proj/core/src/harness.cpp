#include "bhdimer/harness.hpp"

#include <cmath>

#include "bhdimer/error.hpp"
#include "bhdimer/model.hpp"
#include "bhdimer/perturbative.hpp"
#include "bhdimer/tridiagonal_eigen.hpp"

namespace bhdimer {

namespace {

StateVector initial_state(const Scenario& s) {
  return s.alpha == 0.0 ? initial_state_all_left(s.params) : initial_state_tilted(s.params, s.alpha);
}

}  // namespace

ScenarioResult run_scenario(const Scenario& scenario, const RunOptions& options) {
  scenario.validate();
  ScenarioResult result{scenario, time_grid(scenario), {}, {}, {}, {}};
  auto& report = result.report;
  report.label = scenario.label;
  const auto& params = scenario.params;
  const bool coupled = params.u() > 0.0;

  if (coupled) {
    report.structure = revival_structure(params);
    if (!params.rabi_regime()) report.notes.push_back("u >= 1: outside the Rabi regime");
  } else {
    report.notes.push_back("u = 0: no collapse/revival structure");
  }

  if (scenario.outputs.exact) {
    const auto spectrum = eigendecompose(build_hamiltonian(params));
    EvolutionOptions evo;
    evo.threads = options.threads;
    result.exact = evolve_expectations(spectrum, initial_state(scenario), params, result.times, evo);
  }
  if (scenario.outputs.semianalytic) {
    result.semianalytic = delta_semianalytic(params, result.times);
  }
  if (scenario.outputs.closedform) {
    if (coupled) {
      result.closedform = delta_closed_form(params, result.times);
    } else {
      report.notes.push_back("closed form skipped: requires u > 0");
    }
  }

  if (result.exact) {
    const auto& exact = *result.exact;
    try {
      report.fitted_collapse_time = fit_collapse_time(exact);
    } catch (const InsufficientDecay& e) {
      report.notes.push_back(std::string("collapse fit: ") + e.what());
    }

    if (!coupled && scenario.alpha == 0.0) {
      double worst = 0.0;
      for (std::size_t i = 0; i < exact.size(); ++i) {
        const double t = exact.times()[i];
        worst = std::max(worst, std::abs(exact.values()[i] - 0.5 * std::cos(2.0 * params.J() * t)));
      }
      report.rabi_max_deviation = worst;
    }

    if (report.structure) {
      report.peaks = locate_revival_peaks(exact, *report.structure);
      for (const auto& p : report.peaks) {
        if (!p.found) report.notes.push_back("peak m=" + std::to_string(p.m) + " not found");
      }
      if (result.closedform) {
        const auto err = envelope_error(exact, *result.closedform);
        report.envelope_rmse = err.rmse;
        report.envelope_max_abs_err = err.max_abs;
        report.phase_windows = phase_errors(exact, *result.closedform, *report.structure);
      }
      if (scenario.alpha > 0.0) {
        TiltedRevival tilted;
        tilted.alpha = scenario.alpha;
        try {
          tilted.predicted_time = revival_time_tilted(params, scenario.alpha);
          const double half = 0.25 * report.structure->revival_time;
          const auto max = envelope_maximum(exact, tilted.predicted_time - half,
                                            tilted.predicted_time + half);
          tilted.found = max.found && max.interior;
          tilted.observed_time = max.time;
          tilted.observed_height = max.height;
          report.tilted = tilted;
        } catch (const DegenerateShift& e) {
          report.notes.push_back(std::string("tilted revival: ") + e.what());
        }
      }
    }
  }
  return result;
}

std::vector<SpectrumRow> spectrum_table(const ModelParams& params) {
  const auto spectrum = eigendecompose(build_hamiltonian(params));
  const std::size_t dim = params.dimension();
  std::vector<SpectrumRow> rows;
  rows.reserve(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    const std::size_t j = dim - 1 - i;
    const double n = level_label_for_index(params, j);
    rows.push_back({n, spectrum.eigenvalues[j],
                    energy_perturbative(params, n, PerturbationOrder::first),
                    energy_perturbative(params, n, PerturbationOrder::second)});
  }
  return rows;
}

}  // namespace bhdimer
