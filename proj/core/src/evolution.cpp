#include "bhdimer/evolution.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "bhdimer/error.hpp"

namespace bhdimer {

namespace {

void check_dimensions(const Spectrum& spectrum, std::size_t state_size) {
  if (spectrum.size() != state_size || spectrum.eigenvectors.rows() != state_size ||
      spectrum.eigenvectors.cols() != state_size) {
    throw DimensionMismatch("spectrum has dimension " + std::to_string(spectrum.size()) +
                            " but the state has " + std::to_string(state_size));
  }
}

std::vector<Complex> project(const RealMatrix& v, std::span<const Complex> psi) {
  const std::size_t n = v.rows();
  std::vector<Complex> d(n);
  for (std::size_t k = 0; k < n; ++k) {
    const auto row = v.row(k);
    const Complex a = psi[k];
    if (a == Complex{}) continue;
    for (std::size_t j = 0; j < n; ++j) d[j] += row[j] * a;
  }
  return d;
}

}  // namespace

TimeSeries::TimeSeries(std::vector<double> times, std::vector<double> values,
                       std::vector<double> envelope)
    : times_(std::move(times)), values_(std::move(values)), envelope_(std::move(envelope)) {
  if (values_.size() != times_.size()) {
    throw DimensionMismatch("TimeSeries: values and times differ in length");
  }
  if (!envelope_.empty() && envelope_.size() != times_.size()) {
    throw DimensionMismatch("TimeSeries: envelope and times differ in length");
  }
  validate_time_grid(times_);
}

void validate_time_grid(std::span<const double> times) {
  for (std::size_t i = 0; i < times.size(); ++i) {
    if (!std::isfinite(times[i])) throw ConfigError("time grid contains a non-finite value");
    if (i > 0 && !(times[i] > times[i - 1])) {
      throw ConfigError("time grid must be strictly increasing");
    }
  }
}

ExactEvolution::ExactEvolution(const Spectrum& spectrum, const StateVector& psi0,
                               Propagator propagator)
    : N_(static_cast<int>(psi0.size()) - 1),
      propagator_(propagator),
      energies_(spectrum.eigenvalues),
      reference_energy_(0.0),
      vectors_(spectrum.eigenvectors) {
  check_dimensions(spectrum, psi0.size());
  const std::size_t n = energies_.size();
  reference_energy_ = 0.5 * (energies_.front() + energies_.back());
  overlaps_ = project(vectors_, psi0.amps());
  if (propagator_ != Propagator::eigenbasis_operator) return;

  // X = S~_+ V row by row (S~_+ is tridiagonal), then M = V^T X.
  const double N = N_;
  RealMatrix x(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    const double kk = static_cast<double>(k);
    const double diag = 0.5 * (2.0 * kk - N);
    const auto vk = vectors_.row(k);
    auto xk = x.row(k);
    for (std::size_t j = 0; j < n; ++j) xk[j] = diag * vk[j];
    if (k + 1 < n) {
      const double b = 0.5 * std::sqrt((kk + 1.0) * (N - kk));
      const auto vn = vectors_.row(k + 1);
      for (std::size_t j = 0; j < n; ++j) xk[j] += b * vn[j];
    }
    if (k > 0) {
      const double b = 0.5 * std::sqrt(kk * (N - kk + 1.0));
      const auto vp = vectors_.row(k - 1);
      for (std::size_t j = 0; j < n; ++j) xk[j] -= b * vp[j];
    }
  }
  s_plus_eigen_ = RealMatrix(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    const auto vk = vectors_.row(k);
    const auto xk = x.row(k);
    for (std::size_t a = 0; a < n; ++a) {
      const double va = vk[a];
      if (va == 0.0) continue;
      auto ma = s_plus_eigen_.row(a);
      for (std::size_t b = 0; b < n; ++b) ma[b] += va * xk[b];
    }
  }
}

void ExactEvolution::eigen_amplitudes(double t, std::span<Complex> c) const {
  for (std::size_t j = 0; j < energies_.size(); ++j) {
    c[j] = overlaps_[j] * std::polar(1.0, -(energies_[j] - reference_energy_) * t);
  }
}

Complex ExactEvolution::s_plus_at(double t) const {
  if (propagator_ == Propagator::eigenbasis_operator) return s_plus_eigenbasis(t);
  const auto psi = amplitudes_at(t);
  std::vector<Complex> y(psi.size());
  apply_s_plus(N_, psi, y);
  Complex acc = 0.0;
  for (std::size_t k = 0; k < psi.size(); ++k) acc += std::conj(psi[k]) * y[k];
  return acc;
}

Complex ExactEvolution::s_plus_eigenbasis(double t) const {
  const std::size_t n = energies_.size();
  std::vector<Complex> c(n);
  eigen_amplitudes(t, c);
  Complex acc = 0.0;
  for (std::size_t a = 0; a < n; ++a) {
    const auto ma = s_plus_eigen_.row(a);
    Complex w = 0.0;
    for (std::size_t b = 0; b < n; ++b) w += ma[b] * c[b];
    acc += std::conj(c[a]) * w;
  }
  return acc;
}

std::vector<Complex> ExactEvolution::amplitudes_at(double t) const {
  const std::size_t n = energies_.size();
  std::vector<Complex> c(n);
  eigen_amplitudes(t, c);
  std::vector<Complex> psi(n);
  for (std::size_t k = 0; k < n; ++k) {
    const auto vk = vectors_.row(k);
    Complex acc = 0.0;
    for (std::size_t j = 0; j < n; ++j) acc += vk[j] * c[j];
    psi[k] = acc;
  }
  return psi;
}

double ExactEvolution::energy() const {
  double e = 0.0;
  for (std::size_t j = 0; j < energies_.size(); ++j) e += std::norm(overlaps_[j]) * energies_[j];
  return e;
}

TimeSeries evolve_expectations(const Spectrum& spectrum, const StateVector& psi0,
                               const ModelParams& params, std::span<const double> times,
                               const EvolutionOptions& options) {
  validate_time_grid(times);
  if (psi0.size() != params.dimension()) {
    throw DimensionMismatch("initial state size does not match N + 1");
  }
  const ExactEvolution evolution(spectrum, psi0, options.propagator);
  const double N = params.N();

  std::vector<double> values(times.size());
  std::vector<double> envelope(times.size());
  auto run_block = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      const Complex s = evolution.s_plus_at(times[i]);
      values[i] = s.real() / N;
      envelope[i] = std::abs(s) / N;
    }
  };

  const std::size_t threads =
      std::clamp<std::size_t>(options.threads, 1, std::max<std::size_t>(times.size(), 1));
  if (threads == 1) {
    run_block(0, times.size());
  } else {
    const std::size_t block = (times.size() + threads - 1) / threads;
    std::vector<std::jthread> workers;
    workers.reserve(threads);
    for (std::size_t b = 0; b < times.size(); b += block) {
      workers.emplace_back(run_block, b, std::min(b + block, times.size()));
    }
  }
  return TimeSeries({times.begin(), times.end()}, std::move(values), std::move(envelope));
}

std::vector<Complex> evolve_amplitudes(const Spectrum& spectrum, const StateVector& psi0, double t) {
  return ExactEvolution(spectrum, psi0, Propagator::fock_reconstruction).amplitudes_at(t);
}

double energy_expectation(const Spectrum& spectrum, const StateVector& psi0) {
  check_dimensions(spectrum, psi0.size());
  const auto d = project(spectrum.eigenvectors, psi0.amps());
  double e = 0.0;
  for (std::size_t j = 0; j < d.size(); ++j) e += std::norm(d[j]) * spectrum.eigenvalues[j];
  return e;
}

}  // namespace bhdimer
