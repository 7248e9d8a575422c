#include "bhdimer/report_io.hpp"

#include <array>
#include <charconv>
#include <cmath>

#include <json.hpp>

#include "bhdimer/error.hpp"

namespace bhdimer {

namespace {

using nlohmann::ordered_json;

ordered_json number(double v) {
  if (!std::isfinite(v)) return nullptr;
  return v;
}

template <typename T>
ordered_json optional_number(const std::optional<T>& v) {
  if (!v) return nullptr;
  return number(*v);
}

ordered_json to_json(const RevivalStructure& s) {
  ordered_json peaks = ordered_json::array();
  for (const auto& p : s.peaks) {
    peaks.push_back({{"m", p.m},
                     {"center", number(p.center)},
                     {"width", number(p.width)},
                     {"amplitude", number(p.amplitude)}});
  }
  return {{"T_R", number(s.revival_time)},
          {"T_c", number(s.collapse_time)},
          {"m_max", number(s.m_max)},
          {"T_B", number(s.blur_time)},
          {"phi", number(s.phi)},
          {"last_peak", s.last_peak},
          {"peaks", std::move(peaks)}};
}

ordered_json to_json(const ComparisonReport& r) {
  ordered_json peaks = ordered_json::array();
  for (const auto& p : r.peaks) {
    peaks.push_back({{"m", p.m},
                     {"found", p.found},
                     {"exact_peak_time", number(p.exact_peak_time)},
                     {"predicted_center", number(p.predicted_center)},
                     {"exact_peak_height", number(p.exact_peak_height)},
                     {"predicted_height", number(p.predicted_height)},
                     {"trough_ratio", number(p.trough_ratio)},
                     {"mixing", p.mixing}});
  }
  ordered_json phases = ordered_json::array();
  for (const auto& w : r.phase_windows) {
    phases.push_back({{"m", w.m},
                      {"crossings", w.crossings},
                      {"max_time_error", number(w.max_time_error)},
                      {"mean_time_error", number(w.mean_time_error)},
                      {"max_phase_error", number(w.max_phase_error)}});
  }
  ordered_json out;
  out["label"] = r.label;
  out["structure"] = r.structure ? to_json(*r.structure) : ordered_json(nullptr);
  out["envelope_rmse"] = optional_number(r.envelope_rmse);
  out["envelope_max_abs_err"] = optional_number(r.envelope_max_abs_err);
  out["fitted_T_c"] = optional_number(r.fitted_collapse_time);
  out["peaks"] = std::move(peaks);
  out["phase_error_series"] = std::move(phases);
  if (r.tilted) {
    out["tilted"] = {{"alpha", number(r.tilted->alpha)},
                     {"predicted_time", number(r.tilted->predicted_time)},
                     {"found", r.tilted->found},
                     {"observed_time", number(r.tilted->observed_time)},
                     {"observed_height", number(r.tilted->observed_height)}};
  } else {
    out["tilted"] = nullptr;
  }
  out["rabi_max_deviation"] = optional_number(r.rabi_max_deviation);
  out["notes"] = r.notes;
  return out;
}

ordered_json to_json(const SeriesColumns& c) {
  auto column = [&c](const TimeSeries* s, bool envelope) -> ordered_json {
    if (s == nullptr) return nullptr;
    ordered_json a = ordered_json::array();
    const auto& v = envelope ? s->envelope() : s->values();
    for (double x : v) a.push_back(number(x));
    return a;
  };
  ordered_json out;
  out["t"] = ordered_json(std::vector<double>(c.times.begin(), c.times.end()));
  out["delta_exact"] = column(c.exact, false);
  out["env_exact"] = column(c.exact, true);
  out["delta_semianalytic"] = column(c.semianalytic, false);
  out["delta_closedform"] = column(c.closedform, false);
  out["env_closedform"] = column(c.closedform, true);
  return out;
}

void check_columns(const SeriesColumns& c) {
  for (const TimeSeries* s : {c.exact, c.semianalytic, c.closedform}) {
    if (s != nullptr && s->size() != c.times.size()) {
      throw DimensionMismatch("series length differs from the time grid");
    }
  }
}

}  // namespace

SeriesColumns columns_of(const ScenarioResult& result) {
  SeriesColumns c;
  c.times = result.times;
  c.exact = result.exact ? &*result.exact : nullptr;
  c.semianalytic = result.semianalytic ? &*result.semianalytic : nullptr;
  c.closedform = result.closedform ? &*result.closedform : nullptr;
  return c;
}

std::string format_number(double value) {
  std::array<char, 64> buf{};
  const auto r = std::to_chars(buf.data(), buf.data() + buf.size(), value,
                               std::chars_format::general, 17);
  return std::string(buf.data(), r.ptr);
}

void write_series_csv(std::ostream& out, const SeriesColumns& c) {
  check_columns(c);
  out << "t,delta_exact,env_exact,delta_semianalytic,delta_closedform,env_closedform\n";
  std::string line;
  for (std::size_t i = 0; i < c.times.size(); ++i) {
    line.clear();
    line += format_number(c.times[i]);
    line += ',';
    if (c.exact) line += format_number(c.exact->values()[i]);
    line += ',';
    if (c.exact) line += format_number(c.exact->envelope()[i]);
    line += ',';
    if (c.semianalytic) line += format_number(c.semianalytic->values()[i]);
    line += ',';
    if (c.closedform) line += format_number(c.closedform->values()[i]);
    line += ',';
    if (c.closedform) line += format_number(c.closedform->envelope()[i]);
    line += '\n';
    out << line;
  }
}

std::string series_json(const SeriesColumns& columns) {
  check_columns(columns);
  return to_json(columns).dump(2);
}

std::string structure_json(const RevivalStructure& structure) { return to_json(structure).dump(2); }

std::string report_json(const ComparisonReport& report) { return to_json(report).dump(2); }

std::string analytic_json(const RevivalStructure& structure, const SeriesColumns& columns) {
  check_columns(columns);
  ordered_json out;
  out["structure"] = to_json(structure);
  out["series"] = to_json(columns);
  return out.dump(2);
}

std::string compare_json(const ScenarioResult& result) {
  ordered_json out;
  out["report"] = to_json(result.report);
  out["series"] = to_json(columns_of(result));
  return out.dump(2);
}

void write_spectrum_csv(std::ostream& out, std::span<const SpectrumRow> rows) {
  out << "n,exact,first_order,second_order\n";
  for (const auto& r : rows) {
    out << format_number(r.n) << ',' << format_number(r.exact) << ','
        << format_number(r.first_order) << ',' << format_number(r.second_order) << '\n';
  }
}

std::string spectrum_json(const ModelParams& params, std::span<const SpectrumRow> rows) {
  ordered_json levels = ordered_json::array();
  for (const auto& r : rows) {
    levels.push_back({{"n", number(r.n)},
                      {"exact", number(r.exact)},
                      {"first_order", number(r.first_order)},
                      {"second_order", number(r.second_order)}});
  }
  ordered_json out;
  out["J"] = params.J();
  out["U"] = params.U();
  out["N"] = params.N();
  out["u"] = params.u();
  out["levels"] = std::move(levels);
  return out.dump(2);
}

Timescales compute_timescales(const ModelParams& params, double alpha) {
  Timescales t{params, std::nullopt, alpha, std::nullopt};
  if (params.u() > 0.0) {
    t.structure = revival_structure(params);
    t.tilted_revival_time = revival_time_tilted(params, alpha);
  }
  return t;
}

void write_timescales_csv(std::ostream& out, const Timescales& t) {
  auto row = [&out](const char* key, std::optional<double> v) {
    out << key << ',' << (v ? format_number(*v) : std::string()) << '\n';
  };
  const auto* s = t.structure ? &*t.structure : nullptr;
  out << "key,value\n";
  row("J", t.params.J());
  row("U", t.params.U());
  row("N", t.params.N());
  row("u", t.params.u());
  row("T_R", s ? std::optional(s->revival_time) : std::nullopt);
  row("T_c", s ? std::optional(s->collapse_time) : std::nullopt);
  row("m_max", s ? std::optional(s->m_max) : std::nullopt);
  row("T_B", s ? std::optional(s->blur_time) : std::nullopt);
  row("phi", s ? std::optional(s->phi) : std::nullopt);
  row("alpha", t.alpha);
  row("T_R_tilted", t.tilted_revival_time);
}

std::string timescales_json(const Timescales& t) {
  const auto* s = t.structure ? &*t.structure : nullptr;
  auto field = [](const RevivalStructure* s, double RevivalStructure::*member) -> ordered_json {
    return s ? number(s->*member) : ordered_json(nullptr);
  };
  ordered_json out;
  out["J"] = t.params.J();
  out["U"] = t.params.U();
  out["N"] = t.params.N();
  out["u"] = t.params.u();
  out["T_R"] = field(s, &RevivalStructure::revival_time);
  out["T_c"] = field(s, &RevivalStructure::collapse_time);
  out["m_max"] = field(s, &RevivalStructure::m_max);
  out["T_B"] = field(s, &RevivalStructure::blur_time);
  out["phi"] = field(s, &RevivalStructure::phi);
  out["alpha"] = t.alpha;
  out["T_R_tilted"] = optional_number(t.tilted_revival_time);
  return out.dump(2);
}

}  // namespace bhdimer
