#include "bhdimer/model.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "bhdimer/error.hpp"

namespace bhdimer {

namespace {

// sqrt((k+1)(N-k)): the a_L^+ a_R matrix element between k and k+1.
double hop_element(int N, std::size_t k) {
  const double kk = static_cast<double>(k);
  return std::sqrt((kk + 1.0) * (static_cast<double>(N) - kk));
}

template <typename T>
void apply_s_plus_impl(int N, std::span<const T> x, std::span<T> y) {
  const std::size_t dim = static_cast<std::size_t>(N) + 1;
  if (x.size() != dim || y.size() != dim) {
    throw DimensionMismatch("apply_s_plus: vector size does not match N + 1");
  }
  for (std::size_t k = 0; k < dim; ++k) {
    y[k] = x[k] * (0.5 * (2.0 * static_cast<double>(k) - N));
  }
  for (std::size_t k = 0; k + 1 < dim; ++k) {
    const double b = 0.5 * hop_element(N, k);
    y[k] += b * x[k + 1];
    y[k + 1] -= b * x[k];
  }
}

}  // namespace

ModelParams::ModelParams(double J, double U, int N) : J_(J), U_(U), N_(N), u_(0.0) {
  if (!std::isfinite(J) || !(J > 0.0)) {
    throw InvalidParams("J must be finite and > 0, got " + std::to_string(J));
  }
  if (!std::isfinite(U) || U < 0.0) {
    throw InvalidParams("U must be finite and >= 0, got " + std::to_string(U));
  }
  if (N < 1) {
    throw InvalidParams("N must be >= 1, got " + std::to_string(N));
  }
  u_ = U_ * N_ / J_;
}

ModelParams ModelParams::from_coupling(double J, double u, int N) {
  if (N < 1) {
    throw InvalidParams("N must be >= 1, got " + std::to_string(N));
  }
  return ModelParams(J, u * J / N, N);
}

void TridiagonalHamiltonian::apply(std::span<const Complex> x, std::span<Complex> y) const {
  const std::size_t n = size();
  if (x.size() != n || y.size() != n) {
    throw DimensionMismatch("TridiagonalHamiltonian::apply: size mismatch");
  }
  for (std::size_t k = 0; k < n; ++k) {
    y[k] = diag[k] * x[k];
  }
  for (std::size_t k = 0; k + 1 < n; ++k) {
    y[k] += offdiag[k] * x[k + 1];
    y[k + 1] += offdiag[k] * x[k];
  }
}

TridiagonalHamiltonian build_hamiltonian(const ModelParams& params) {
  const int N = params.N();
  const std::size_t dim = params.dimension();
  TridiagonalHamiltonian h;
  h.diag.resize(dim);
  h.offdiag.resize(dim - 1);
  for (std::size_t k = 0; k < dim; ++k) {
    const double nl = static_cast<double>(k);
    const double nr = static_cast<double>(N) - nl;
    h.diag[k] = params.U() * (nl * (nl - 1.0) + nr * (nr - 1.0));
  }
  for (std::size_t k = 0; k + 1 < dim; ++k) {
    h.offdiag[k] = -params.J() * hop_element(N, k);
  }
  return h;
}

double squared_norm(std::span<const Complex> amps) {
  double s = 0.0;
  for (const auto& a : amps) s += std::norm(a);
  return s;
}

StateVector::StateVector(std::vector<Complex> amps) : amps_(std::move(amps)) {
  if (amps_.empty()) {
    throw InvalidState("state vector is empty");
  }
  const double deviation = std::abs(squared_norm(amps_) - 1.0);
  if (!(deviation <= kNormTolerance)) {
    throw InvalidState("state vector is not normalized (|norm^2 - 1| = " +
                       std::to_string(deviation) + ")");
  }
}

StateVector initial_state_all_left(const ModelParams& params) {
  std::vector<Complex> amps(params.dimension());
  amps.back() = 1.0;
  return StateVector(std::move(amps));
}

StateVector initial_state_all_right(const ModelParams& params) {
  std::vector<Complex> amps(params.dimension());
  amps.front() = 1.0;
  return StateVector(std::move(amps));
}

StateVector initial_state_tilted(const ModelParams& params, double alpha) {
  if (!(alpha >= 0.0 && alpha <= std::numbers::pi / 2)) {
    throw InvalidParams("alpha must lie in [0, pi/2], got " + std::to_string(alpha));
  }
  const int N = params.N();
  const double c = std::cos(alpha);
  const double s = std::sin(alpha);
  // cos(pi/2) is not exactly zero in floating point; pin the endpoints so the
  // extremal states come out exact.
  if (alpha == 0.0) return initial_state_all_left(params);
  if (alpha == std::numbers::pi / 2) return initial_state_all_right(params);

  std::vector<Complex> amps(params.dimension());
  const double log_c = std::log(c);
  const double log_s = std::log(s);
  const double lg_n = std::lgamma(N + 1.0);
  for (int k = 0; k <= N; ++k) {
    const double log_binom = lg_n - std::lgamma(k + 1.0) - std::lgamma(N - k + 1.0);
    const double log_amp = 0.5 * log_binom + k * log_c + (N - k) * log_s;
    amps[static_cast<std::size_t>(k)] = std::exp(log_amp);
  }
  // lgamma rounding leaves a relative error of a few ulps per term; rescale so
  // the unit-norm invariant holds to machine precision.
  const double norm = std::sqrt(squared_norm(amps));
  for (auto& a : amps) a /= norm;
  return StateVector(std::move(amps));
}

double s_z_expectation(std::span<const Complex> amps, const ModelParams& params) {
  const int N = params.N();
  if (amps.size() != params.dimension()) {
    throw DimensionMismatch("s_z_expectation: state size does not match N + 1");
  }
  double acc = 0.0;
  for (std::size_t k = 0; k < amps.size(); ++k) {
    acc += std::norm(amps[k]) * (2.0 * static_cast<double>(k) - N);
  }
  return acc / (2.0 * N);
}

double s_z_expectation(const StateVector& state, const ModelParams& params) {
  return s_z_expectation(state.amps(), params);
}

Complex s_plus_expectation(std::span<const Complex> amps, const ModelParams& params) {
  std::vector<Complex> y(amps.size());
  apply_s_plus(params.N(), amps, y);
  Complex acc = 0.0;
  for (std::size_t k = 0; k < amps.size(); ++k) acc += std::conj(amps[k]) * y[k];
  return acc;
}

Complex s_plus_expectation(const StateVector& state, const ModelParams& params) {
  return s_plus_expectation(state.amps(), params);
}

void apply_s_plus(int N, std::span<const Complex> x, std::span<Complex> y) {
  apply_s_plus_impl<Complex>(N, x, y);
}

void apply_s_plus(int N, std::span<const double> x, std::span<double> y) {
  apply_s_plus_impl<double>(N, x, y);
}

double energy_in_fock(const TridiagonalHamiltonian& h, std::span<const Complex> amps) {
  std::vector<Complex> y(amps.size());
  h.apply(amps, y);
  Complex acc = 0.0;
  for (std::size_t k = 0; k < amps.size(); ++k) acc += std::conj(amps[k]) * y[k];
  return acc.real();
}

}  // namespace bhdimer
