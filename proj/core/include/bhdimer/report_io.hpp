#pragma once

#include <optional>
#include <ostream>
#include <span>
#include <string>

#include "bhdimer/harness.hpp"

namespace bhdimer {

// Non-owning view of the series written to one CSV/JSON file. Any of the
// series may be absent.
struct SeriesColumns {
  std::span<const double> times;
  const TimeSeries* exact = nullptr;
  const TimeSeries* semianalytic = nullptr;
  const TimeSeries* closedform = nullptr;
};

SeriesColumns columns_of(const ScenarioResult& result);

// 17 significant digits, enough for every double to round-trip.
std::string format_number(double value);

// Header "t,delta_exact,env_exact,delta_semianalytic,delta_closedform,env_closedform",
// then one row per time. Absent series leave their fields empty.
void write_series_csv(std::ostream& out, const SeriesColumns& columns);

std::string series_json(const SeriesColumns& columns);
std::string structure_json(const RevivalStructure& structure);
std::string report_json(const ComparisonReport& report);

// {"structure": ..., "series": ...}
std::string analytic_json(const RevivalStructure& structure, const SeriesColumns& columns);
// {"report": ..., "series": ...}
std::string compare_json(const ScenarioResult& result);

// Header "n,exact,first_order,second_order".
void write_spectrum_csv(std::ostream& out, std::span<const SpectrumRow> rows);
std::string spectrum_json(const ModelParams& params, std::span<const SpectrumRow> rows);

struct Timescales {
  ModelParams params;
  std::optional<RevivalStructure> structure;
  double alpha = 0.0;
  std::optional<double> tilted_revival_time;
};

Timescales compute_timescales(const ModelParams& params, double alpha);

// key,value lines for csv; a flat object for json.
void write_timescales_csv(std::ostream& out, const Timescales& t);
std::string timescales_json(const Timescales& t);

}  // namespace bhdimer
