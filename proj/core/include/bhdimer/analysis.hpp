#pragma once

#include <optional>
#include <vector>

#include "bhdimer/evolution.hpp"
#include "bhdimer/revival.hpp"

namespace bhdimer {

// Fits log(env / env[0]) = -t^2 / T^2 by least squares over the initial
// decay, using samples with env / env[0] in [0.1, 0.9] up to the first drop
// below 0.1. Throws InsufficientDecay if the envelope never falls below half
// its initial value, ConfigError if the series carries no envelope.
double fit_collapse_time(const TimeSeries& series);

struct PeakRecord {
  int m = 0;
  bool found = false;
  double exact_peak_time = 0.0;
  double predicted_center = 0.0;
  double exact_peak_height = 0.0;
  double predicted_height = 0.0;  // A_m / 2
  // Mean envelope over the middle quarter of the gap before this peak,
  // relative to the peak height.
  double trough_ratio = 0.0;
  bool mixing = false;
};

// Envelope trough level, relative to the peak, at which neighbouring revivals
// count as mixed. A Gaussian of width T_R / 2 (the m_max condition) has fallen
// to exp(-1) half way to its neighbour.
inline constexpr double kMixingTroughRatio = 0.36787944117144233;

// For each m >= 1 whose predicted center lies inside the series, the largest
// envelope sample within center +- T_R / 4. A maximum on the window edge
// is not a local maximum and leaves found = false. Records sorted by m.
std::vector<PeakRecord> locate_revival_peaks(const TimeSeries& series, const RevivalStructure& s);

struct PhaseWindow {
  int m = 0;
  std::size_t crossings = 0;      // zero crossings of the reference inside the window
  double max_time_error = 0.0;    // worst distance to the nearest same-direction crossing
  double mean_time_error = 0.0;
  double max_phase_error = 0.0;   // phi * max_time_error, radians
};

// Compares zero crossings of the exact signal with those of a prediction
// inside each peak window center_m +- width_m. Crossings are matched to the
// nearest crossing of the same direction, so the error is bounded by half a
// period rather than a quarter.
std::vector<PhaseWindow> phase_errors(const TimeSeries& exact, const TimeSeries& predicted,
                                      const RevivalStructure& s);

struct EnvelopeError {
  double rmse = 0.0;
  double max_abs = 0.0;
};

// Throws DimensionMismatch unless both carry envelopes on the same grid.
EnvelopeError envelope_error(const TimeSeries& a, const TimeSeries& b);

// Same, restricted to samples with lo <= t <= hi.
EnvelopeError envelope_error(const TimeSeries& a, const TimeSeries& b, double lo, double hi);

// Largest envelope sample with lo <= t <= hi.
struct EnvelopeMaximum {
  bool found = false;
  double time = 0.0;
  double height = 0.0;
  bool interior = false;  // not on either edge of the window
};

EnvelopeMaximum envelope_maximum(const TimeSeries& series, double lo, double hi);

}  // namespace bhdimer
