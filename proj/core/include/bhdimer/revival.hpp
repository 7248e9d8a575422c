#pragma once

#include <span>
#include <vector>

#include "bhdimer/evolution.hpp"
#include "bhdimer/model.hpp"

namespace bhdimer {

// One Gaussian revival peak of the closed-form Delta(t).
struct RevivalPeak {
  int m;
  double center;     // m T_R - 3 m pi / (2J)
  double width;      // sqrt(2N (1 + 9/16 u^2 m^2 pi^2)) / (J u)
  double amplitude;  // A_m; the envelope height is A_m / 2
};

// Timescales of the collapse/revival picture for u > 0.
struct RevivalStructure {
  double revival_time;   // T_R = pi N / (u J)
  double collapse_time;  // T_c = sqrt(2N) / (J u), equal to the m = 0 width
  double m_max;          // peak index where the width reaches T_R / 2
  double blur_time;      // T_B = m_max T_R
  double phi;            // fast angular frequency J (2 + u^2/8 + u/N)
  int last_peak;         // ceil(m_max)
  std::vector<RevivalPeak> peaks;  // m = 0 .. last_peak

  // A quarter of the fast oscillation period 2 pi / phi.
  double quarter_rabi_period() const;
};

// Throws ZeroCoupling when u == 0.
RevivalStructure revival_structure(const ModelParams& params);

// Peak m >= 0 evaluated from the closed-form width and amplitude laws.
RevivalPeak revival_peak(const ModelParams& params, int m);

// Window-local slow phase phi_1. The window is m = round(t / T_R) clamped to
// [0, last_peak] and tau = t - m T_R.
double slow_phase(const ModelParams& params, const RevivalStructure& s, double t);

// Gaussian factors below this are dropped from the peak sum.
inline constexpr double kPeakTruncation = 1e-12;

// Delta(t) = 1/2 sum_m A_m exp(-(t - center_m)^2 / width_m^2) cos(phi_1 - phi t).
// envelope[i] is the same sum without the cosine.
TimeSeries delta_closed_form(const ModelParams& params, std::span<const double> times);

// The closed form with the peak sum restricted to a single m.
TimeSeries delta_closed_form_peak(const ModelParams& params, std::span<const double> times, int m);

// Short-time collapse law 1/2 exp(-J^2 u^2 t^2 / (2N)) cos(phi t - phi_1),
// with phi_1 taken in the m = 0 window.
TimeSeries delta_short_time(const ModelParams& params, std::span<const double> times);

// Revival period for the coherent state with left occupation cos^2(alpha):
// T_R / (1 - 3/4 u sin(2 alpha)). Throws ZeroCoupling for u == 0,
// DegenerateShift if the denominator is not positive, InvalidParams if alpha
// is outside [0, pi/2].
double revival_time_tilted(const ModelParams& params, double alpha);

}  // namespace bhdimer
