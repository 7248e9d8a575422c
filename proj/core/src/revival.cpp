#include "bhdimer/revival.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "bhdimer/error.hpp"

namespace bhdimer {

namespace {

using std::numbers::pi;

double peak_growth(double u, int m) {
  // 1 + (9/16) u^2 m^2 pi^2
  return 1.0 + 9.0 / 16.0 * u * u * m * m * pi * pi;
}

struct PeakSum {
  double envelope;
  double value;
};

PeakSum evaluate(const ModelParams& params, const RevivalStructure& s, double t, int m_lo,
                 int m_hi) {
  double envelope = 0.0;
  for (int m = m_lo; m <= m_hi; ++m) {
    const auto& p = s.peaks[static_cast<std::size_t>(m)];
    const double x = (t - p.center) / p.width;
    const double g = std::exp(-x * x);
    if (g > kPeakTruncation) envelope += 0.5 * p.amplitude * g;
  }
  const double phase = slow_phase(params, s, t) - s.phi * t;
  return {envelope, envelope * std::cos(phase)};
}

TimeSeries sample(const ModelParams& params, std::span<const double> times, int m_lo, int m_hi) {
  validate_time_grid(times);
  const auto s = revival_structure(params);
  if (m_lo < 0 || m_hi > s.last_peak) {
    throw OutOfRange("peak index outside [0, " + std::to_string(s.last_peak) + "]");
  }
  std::vector<double> values(times.size());
  std::vector<double> envelope(times.size());
  for (std::size_t i = 0; i < times.size(); ++i) {
    const auto r = evaluate(params, s, times[i], m_lo, m_hi);
    values[i] = r.value;
    envelope[i] = r.envelope;
  }
  return TimeSeries({times.begin(), times.end()}, std::move(values), std::move(envelope));
}

}  // namespace

double RevivalStructure::quarter_rabi_period() const { return 0.25 * 2.0 * pi / phi; }

RevivalPeak revival_peak(const ModelParams& params, int m) {
  const double J = params.J();
  const double u = params.u();
  const double N = params.N();
  if (u == 0.0) throw ZeroCoupling();
  if (m < 0) throw OutOfRange("peak index must be >= 0");
  const double revival_time = pi * N / (u * J);
  const double growth = peak_growth(u, m);
  RevivalPeak p;
  p.m = m;
  p.center = m * revival_time - 3.0 * m * pi / (2.0 * J);
  p.width = std::sqrt(2.0 * N * growth) / (J * u);
  p.amplitude = std::exp(-u * u / 32.0) / std::pow(growth, 0.25) *
                std::exp((2.0 + 4.5 * u * u * m * m * pi * pi) / (4.0 * N * growth));
  return p;
}

RevivalStructure revival_structure(const ModelParams& params) {
  const double J = params.J();
  const double u = params.u();
  const double N = params.N();
  if (u == 0.0) throw ZeroCoupling();

  RevivalStructure s;
  s.revival_time = pi * N / (u * J);
  s.collapse_time = std::sqrt(2.0 * N) / (J * u);
  s.m_max = std::sqrt(2.0 * (pi * pi * N - 8.0)) / (3.0 * u * pi);
  s.blur_time = s.m_max * s.revival_time;
  s.phi = J * (2.0 + u * u / 8.0 + u / N);
  s.last_peak = static_cast<int>(std::ceil(s.m_max));
  s.peaks.reserve(static_cast<std::size_t>(s.last_peak) + 1);
  for (int m = 0; m <= s.last_peak; ++m) s.peaks.push_back(revival_peak(params, m));
  return s;
}

double slow_phase(const ModelParams& params, const RevivalStructure& s, double t) {
  const double J = params.J();
  const double u = params.u();
  const double N = params.N();
  const double m = std::clamp(std::round(t / s.revival_time), 0.0,
                              static_cast<double>(s.last_peak));
  const double tau = t - m * s.revival_time;
  return u * u / 8.0 * (2.0 * J * tau + 1.5 * m * pi) +
         u * (J * tau / N + 0.375 * (m * pi + J / N * u * tau));
}

TimeSeries delta_closed_form(const ModelParams& params, std::span<const double> times) {
  const auto s = revival_structure(params);
  return sample(params, times, 0, s.last_peak);
}

TimeSeries delta_closed_form_peak(const ModelParams& params, std::span<const double> times, int m) {
  return sample(params, times, m, m);
}

TimeSeries delta_short_time(const ModelParams& params, std::span<const double> times) {
  validate_time_grid(times);
  const auto s = revival_structure(params);
  const double J = params.J();
  const double u = params.u();
  const double N = params.N();
  std::vector<double> values(times.size());
  std::vector<double> envelope(times.size());
  for (std::size_t i = 0; i < times.size(); ++i) {
    const double t = times[i];
    // phi_1 in the m = 0 window: tau = t.
    const double phi1 = u * u / 8.0 * (2.0 * J * t) + u * (J * t / N + 0.375 * (J / N * u * t));
    envelope[i] = 0.5 * std::exp(-J * J * u * u * t * t / (2.0 * N));
    values[i] = envelope[i] * std::cos(s.phi * t - phi1);
  }
  return TimeSeries({times.begin(), times.end()}, std::move(values), std::move(envelope));
}

double revival_time_tilted(const ModelParams& params, double alpha) {
  if (params.u() == 0.0) throw ZeroCoupling();
  if (!(alpha >= 0.0 && alpha <= pi / 2)) {
    throw InvalidParams("alpha must lie in [0, pi/2], got " + std::to_string(alpha));
  }
  const double revival_time = pi * params.N() / (params.u() * params.J());
  const double denominator = 1.0 - 0.75 * params.u() * std::sin(2.0 * alpha);
  if (!(denominator > 0.0)) {
    throw DegenerateShift("1 - 3/4 u sin(2 alpha) = " + std::to_string(denominator) +
                          " is not positive");
  }
  return revival_time / denominator;
}

}  // namespace bhdimer
