#include "bhdimer/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "bhdimer/error.hpp"

namespace bhdimer {

namespace {

struct Crossing {
  double time;
  bool rising;
};

std::vector<Crossing> zero_crossings(const TimeSeries& s, double lo, double hi) {
  const auto& t = s.times();
  const auto& y = s.values();
  std::vector<Crossing> out;
  for (std::size_t i = 0; i + 1 < t.size(); ++i) {
    if (t[i] < lo || t[i + 1] > hi) continue;
    const bool a = y[i] >= 0.0;
    const bool b = y[i + 1] >= 0.0;
    if (a == b) continue;
    const double frac = y[i] / (y[i] - y[i + 1]);
    out.push_back({t[i] + frac * (t[i + 1] - t[i]), !a});
  }
  return out;
}

void require_envelope(const TimeSeries& s) {
  if (!s.has_envelope()) throw ConfigError("series has no envelope");
}

}  // namespace

double fit_collapse_time(const TimeSeries& series) {
  require_envelope(series);
  const auto& t = series.times();
  const auto& env = series.envelope();
  if (env.empty() || !(env.front() > 0.0)) {
    throw InsufficientDecay("envelope is empty or starts at zero");
  }
  const double e0 = env.front();
  if (std::none_of(env.begin(), env.end(), [e0](double e) { return e < 0.5 * e0; })) {
    throw InsufficientDecay("envelope never falls below half of its initial value");
  }

  double sxx = 0.0;
  double sxy = 0.0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    const double r = env[i] / e0;
    if (r < 0.1) break;
    if (r > 0.9) continue;
    const double x = t[i] * t[i];
    sxx += x * x;
    sxy += x * std::log(r);
  }
  if (!(sxx > 0.0) || !(sxy < 0.0)) {
    throw InsufficientDecay("no samples in the fit region");
  }
  return 1.0 / std::sqrt(-sxy / sxx);
}

EnvelopeMaximum envelope_maximum(const TimeSeries& series, double lo, double hi) {
  require_envelope(series);
  const auto& t = series.times();
  const auto& env = series.envelope();
  const auto first = std::lower_bound(t.begin(), t.end(), lo);
  const auto last = std::upper_bound(t.begin(), t.end(), hi);
  EnvelopeMaximum out;
  if (first >= last) return out;
  const auto b = static_cast<std::size_t>(first - t.begin());
  const auto e = static_cast<std::size_t>(last - t.begin());
  std::size_t best = b;
  for (std::size_t i = b; i < e; ++i) {
    if (env[i] > env[best]) best = i;
  }
  out.found = true;
  out.time = t[best];
  out.height = env[best];
  out.interior = best > b && best + 1 < e;
  return out;
}

std::vector<PeakRecord> locate_revival_peaks(const TimeSeries& series, const RevivalStructure& s) {
  require_envelope(series);
  const auto& t = series.times();
  const auto& env = series.envelope();
  if (t.empty()) return {};
  const double t_end = t.back();
  const double half_window = 0.25 * s.revival_time;

  std::vector<PeakRecord> records;
  for (const auto& p : s.peaks) {
    if (p.m < 1) continue;
    if (p.center >= t_end) break;
    PeakRecord r;
    r.m = p.m;
    r.predicted_center = p.center;
    r.predicted_height = 0.5 * p.amplitude;
    const auto max = envelope_maximum(series, p.center - half_window, p.center + half_window);
    r.found = max.found && max.interior;
    if (max.found) {
      r.exact_peak_time = max.time;
      r.exact_peak_height = max.height;
    }

    // Trough before this peak: the middle quarter of the gap to the previous
    // predicted center.
    const double previous = s.peaks[static_cast<std::size_t>(p.m - 1)].center;
    const double mid = 0.5 * (previous + p.center);
    const double trough_half = 0.125 * s.revival_time;
    double sum = 0.0;
    std::size_t count = 0;
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (std::abs(t[i] - mid) <= trough_half) {
        sum += env[i];
        ++count;
      }
    }
    if (r.found && count > 0 && r.exact_peak_height > 0.0) {
      r.trough_ratio = sum / static_cast<double>(count) / r.exact_peak_height;
      r.mixing = r.trough_ratio >= kMixingTroughRatio;
    }
    records.push_back(r);
  }
  return records;
}

std::vector<PhaseWindow> phase_errors(const TimeSeries& exact, const TimeSeries& predicted,
                                      const RevivalStructure& s) {
  if (exact.times() != predicted.times()) {
    throw DimensionMismatch("phase_errors: series are on different grids");
  }
  std::vector<PhaseWindow> out;
  if (exact.size() == 0) return out;
  const double t_end = exact.times().back();
  const double half_period = std::numbers::pi / s.phi;
  for (const auto& p : s.peaks) {
    const double lo = std::max(0.0, p.center - p.width);
    const double hi = p.center + p.width;
    if (hi > t_end) break;
    const auto ref = zero_crossings(exact, lo, hi);
    // Partners of crossings near the window edges may lie just outside it.
    const auto pred = zero_crossings(predicted, lo - half_period, hi + half_period);
    PhaseWindow w;
    w.m = p.m;
    w.crossings = ref.size();
    double sum = 0.0;
    for (const auto& c : ref) {
      double best = std::numeric_limits<double>::infinity();
      for (const auto& q : pred) {
        if (q.rising == c.rising) best = std::min(best, std::abs(q.time - c.time));
      }
      w.max_time_error = std::max(w.max_time_error, best);
      sum += best;
    }
    if (!ref.empty()) w.mean_time_error = sum / static_cast<double>(ref.size());
    w.max_phase_error = s.phi * w.max_time_error;
    out.push_back(w);
  }
  return out;
}

EnvelopeError envelope_error(const TimeSeries& a, const TimeSeries& b) {
  return envelope_error(a, b, -std::numeric_limits<double>::infinity(),
                        std::numeric_limits<double>::infinity());
}

EnvelopeError envelope_error(const TimeSeries& a, const TimeSeries& b, double lo, double hi) {
  require_envelope(a);
  require_envelope(b);
  if (a.times() != b.times()) throw DimensionMismatch("envelope_error: series are on different grids");
  EnvelopeError out;
  double sum = 0.0;
  std::size_t count = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double t = a.times()[i];
    if (t < lo || t > hi) continue;
    const double d = std::abs(a.envelope()[i] - b.envelope()[i]);
    out.max_abs = std::max(out.max_abs, d);
    sum += d * d;
    ++count;
  }
  if (count > 0) out.rmse = std::sqrt(sum / static_cast<double>(count));
  return out;
}

}  // namespace bhdimer
