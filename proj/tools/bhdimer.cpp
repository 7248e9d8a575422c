// Command-line front end: exact spectra and dynamics of the Bose-Hubbard
// dimer, the closed-form collapse/revival prediction, and scenario
// comparisons written as CSV or JSON.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "bhdimer/error.hpp"
#include "bhdimer/harness.hpp"
#include "bhdimer/report_io.hpp"
#include "bhdimer/revival.hpp"
#include "bhdimer/scenario.hpp"

namespace {

using namespace bhdimer;

struct CommonArgs {
  std::optional<double> J;
  std::optional<double> U;
  std::optional<double> u;
  std::optional<int> N;
  std::optional<double> alpha;
  std::optional<double> t_max;
  std::optional<int> samples;
  std::string scenario;
  std::string out;
  std::string report;
  std::string format = "csv";
  unsigned threads = 1;
};

void add_common(CLI::App* cmd, CommonArgs& a, bool with_report) {
  cmd->add_option("--J", a.J, "Hopping energy J (> 0)");
  auto* U = cmd->add_option("--U", a.U, "On-site interaction U (>= 0)");
  auto* u = cmd->add_option("--u", a.u, "Dimensionless coupling u = UN/J (sets U = uJ/N)");
  U->excludes(u);
  cmd->add_option("--N", a.N, "Particle number N (>= 1)");
  cmd->add_option("--alpha", a.alpha, "Initial left occupation cos^2(alpha), alpha in [0, pi/2]");
  cmd->add_option("--tmax", a.t_max, "Last sampled time");
  cmd->add_option("--samples-per-period", a.samples, "Samples per fast oscillation period (>= 4)");
  cmd->add_option("--scenario", a.scenario, "Builtin (fig1, fig2, rabi-only) or JSON scenario file");
  cmd->add_option("--out", a.out, "Output file (default stdout)");
  if (with_report) {
    cmd->add_option("--report", a.report, "File for the JSON side document in csv mode");
  }
  cmd->add_option("--format", a.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--threads", a.threads, "Worker threads for the exact sweep")
      ->check(CLI::PositiveNumber);
}

Scenario resolve_scenario(const CommonArgs& a) {
  ScenarioOverrides o{a.J, a.U, a.u, a.N, a.alpha, a.t_max, a.samples};
  if (!a.scenario.empty()) return apply_overrides(load_scenario(a.scenario), o);
  if (!a.N) throw ConfigError("give --scenario or at least --N");
  const double J = a.J.value_or(1.0);
  const ModelParams params =
      a.u ? ModelParams::from_coupling(J, *a.u, *a.N) : ModelParams(J, a.U.value_or(0.0), *a.N);
  Scenario base{"custom", params, 0.0, default_t_max(params), 20, {}};
  o.J.reset();
  o.U.reset();
  o.u.reset();
  o.N.reset();
  return apply_overrides(base, o);
}

// Writes to --out, or stdout when it is empty.
template <typename Fn>
void emit(const std::string& path, Fn&& write) {
  if (path.empty()) {
    write(std::cout);
    std::cout.flush();
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw ConfigError("cannot open '" + path + "' for writing");
  write(file);
  if (!file) throw ConfigError("failed writing '" + path + "'");
}

// The side document goes to --report, else stdout when the main output went
// to a file, else stderr.
void emit_side(const CommonArgs& a, const std::string& text) {
  if (!a.report.empty()) {
    emit(a.report, [&](std::ostream& os) { os << text << '\n'; });
  } else if (!a.out.empty()) {
    std::cout << text << '\n';
  } else {
    std::cerr << text << '\n';
  }
}

void run_spectrum(const CommonArgs& a) {
  const auto s = resolve_scenario(a);
  const auto rows = spectrum_table(s.params);
  emit(a.out, [&](std::ostream& os) {
    if (a.format == "json") {
      os << spectrum_json(s.params, rows) << '\n';
    } else {
      write_spectrum_csv(os, rows);
    }
  });
}

void run_evolve(const CommonArgs& a) {
  auto s = resolve_scenario(a);
  s.outputs = {true, false, false};
  const auto result = run_scenario(s, {a.threads});
  emit(a.out, [&](std::ostream& os) {
    if (a.format == "json") {
      os << series_json(columns_of(result)) << '\n';
    } else {
      write_series_csv(os, columns_of(result));
    }
  });
}

void run_analytic(const CommonArgs& a) {
  auto s = resolve_scenario(a);
  const auto structure = revival_structure(s.params);
  const auto times = time_grid(s);
  const auto closed = delta_closed_form(s.params, times);
  SeriesColumns columns;
  columns.times = times;
  columns.closedform = &closed;
  if (a.format == "json") {
    emit(a.out, [&](std::ostream& os) { os << analytic_json(structure, columns) << '\n'; });
  } else {
    emit(a.out, [&](std::ostream& os) { write_series_csv(os, columns); });
    emit_side(a, structure_json(structure));
  }
}

void run_compare(const CommonArgs& a) {
  const auto s = resolve_scenario(a);
  const auto result = run_scenario(s, {a.threads});
  if (a.format == "json") {
    emit(a.out, [&](std::ostream& os) { os << compare_json(result) << '\n'; });
  } else {
    emit(a.out, [&](std::ostream& os) { write_series_csv(os, columns_of(result)); });
    emit_side(a, report_json(result.report));
  }
}

void run_timescales(const CommonArgs& a) {
  const auto s = resolve_scenario(a);
  const auto t = compute_timescales(s.params, s.alpha);
  emit(a.out, [&](std::ostream& os) {
    if (a.format == "json") {
      os << timescales_json(t) << '\n';
    } else {
      write_timescales_csv(os, t);
    }
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-site Bose-Hubbard collapse and revival calculator"};
  app.require_subcommand(1);

  CommonArgs args;
  auto* spectrum = app.add_subcommand("spectrum", "Exact and perturbative energies");
  auto* evolve = app.add_subcommand("evolve", "Exact Delta(t) and its envelope");
  auto* analytic = app.add_subcommand("analytic", "Closed-form Delta(t) and revival structure");
  auto* compare = app.add_subcommand("compare", "Full scenario with comparison report");
  auto* timescales = app.add_subcommand("timescales", "T_R, T_c, m_max, T_B, phi, tilted T_R");
  add_common(spectrum, args, false);
  add_common(evolve, args, false);
  add_common(analytic, args, true);
  add_common(compare, args, true);
  add_common(timescales, args, false);

  CLI11_PARSE(app, argc, argv);

  try {
    if (spectrum->parsed()) run_spectrum(args);
    if (evolve->parsed()) run_evolve(args);
    if (analytic->parsed()) run_analytic(args);
    if (compare->parsed()) run_compare(args);
    if (timescales->parsed()) run_timescales(args);
  } catch (const bhdimer::Error& e) {
    std::cerr << "bhdimer: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
