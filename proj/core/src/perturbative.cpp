#include "bhdimer/perturbative.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "bhdimer/error.hpp"

namespace bhdimer {

void check_level_label(const ModelParams& params, double n) {
  const double half = 0.5 * params.N();
  if (!std::isfinite(n) || std::abs(n) > half) {
    throw OutOfRange("level label n = " + std::to_string(n) + " outside [-N/2, N/2]");
  }
  const double rank = n + half;
  if (rank != std::round(rank)) {
    throw OutOfRange("level label n = " + std::to_string(n) + " must make n + N/2 an integer");
  }
}

double level_label_for_index(const ModelParams& params, std::size_t j) {
  if (j >= params.dimension()) {
    throw OutOfRange("level index " + std::to_string(j) + " exceeds N");
  }
  return 0.5 * params.N() - static_cast<double>(j);
}

double energy_perturbative(const ModelParams& params, double n, PerturbationOrder order) {
  check_level_label(params, n);
  const double J = params.J();
  const double u = params.u();
  const double N = params.N();
  double e = -n + 0.375 * u * N - 0.5 * u - u * n * n / (2.0 * N);
  if (order == PerturbationOrder::second) {
    e += -u * u * n / 16.0 + u * u * n * n * n / (4.0 * N * N);
  }
  return 2.0 * J * e;
}

PerturbativeSpectrum perturbative_spectrum(const ModelParams& params, PerturbationOrder order) {
  PerturbativeSpectrum out{order, {}, {}};
  const std::size_t dim = params.dimension();
  out.labels.reserve(dim);
  out.energies.reserve(dim);
  for (std::size_t r = 0; r < dim; ++r) {
    const double n = static_cast<double>(r) - 0.5 * params.N();
    out.labels.push_back(n);
    out.energies.push_back(energy_perturbative(params, n, order));
  }
  return out;
}

double c_coefficient(const ModelParams& params, double n) {
  check_level_label(params, n);
  const double N = params.N();
  return std::pow(2.0 / (std::numbers::pi * N), 0.25) * std::exp(-n * n / N);
}

TimeSeries delta_semianalytic(const ModelParams& params, std::span<const double> times) {
  validate_time_grid(times);
  const int N = params.N();
  std::vector<double> weights(static_cast<std::size_t>(N));
  std::vector<double> frequencies(static_cast<std::size_t>(N));
  for (int r = 0; r < N; ++r) {
    const double n = r - 0.5 * N;
    weights[static_cast<std::size_t>(r)] = c_coefficient(params, n) * c_coefficient(params, n + 1.0);
    frequencies[static_cast<std::size_t>(r)] =
        energy_perturbative(params, n, PerturbationOrder::second) -
        energy_perturbative(params, n + 1.0, PerturbationOrder::second);
  }

  std::vector<double> values(times.size());
  std::vector<double> envelope(times.size());
  for (std::size_t i = 0; i < times.size(); ++i) {
    Complex acc = 0.0;
    for (std::size_t r = 0; r < weights.size(); ++r) {
      acc += weights[r] * std::polar(1.0, -frequencies[r] * times[i]);
    }
    values[i] = 0.5 * acc.real();
    envelope[i] = 0.5 * std::abs(acc);
  }
  return TimeSeries({times.begin(), times.end()}, std::move(values), std::move(envelope));
}

}  // namespace bhdimer
