#pragma once

#include <span>
#include <vector>

#include "bhdimer/matrix.hpp"
#include "bhdimer/model.hpp"
#include "bhdimer/tridiagonal_eigen.hpp"

namespace bhdimer {

// Sampled signal. times strictly increasing; envelope is either empty or the
// same length as values.
class TimeSeries {
 public:
  TimeSeries() = default;
  TimeSeries(std::vector<double> times, std::vector<double> values,
             std::vector<double> envelope = {});

  const std::vector<double>& times() const { return times_; }
  const std::vector<double>& values() const { return values_; }
  const std::vector<double>& envelope() const { return envelope_; }
  bool has_envelope() const { return !envelope_.empty(); }
  std::size_t size() const { return times_.size(); }

 private:
  std::vector<double> times_;
  std::vector<double> values_;
  std::vector<double> envelope_;
};

// Throws ConfigError unless every time is finite and the grid strictly increases.
void validate_time_grid(std::span<const double> times);

enum class Propagator {
  // <S~_+>(t) = sum_ab conj(c_a) M_ab c_b with M = V^T S~_+ V precomputed.
  eigenbasis_operator,
  // psi(t) = V c(t) rebuilt in the Fock basis, observables taken there.
  fock_reconstruction,
};

struct EvolutionOptions {
  Propagator propagator = Propagator::eigenbasis_operator;
  // Time points are split into contiguous blocks, one per thread. Every time
  // point is computed independently, so output does not depend on this.
  unsigned threads = 1;
};

// Exact propagation of one initial state under a diagonalized Hamiltonian.
// c_j(t) = d_j exp(-i (E_j - E_ref) t) with d = V^T psi0; the reference
// energy only changes the global phase.
class ExactEvolution {
 public:
  // Throws DimensionMismatch if spectrum and state sizes differ.
  ExactEvolution(const Spectrum& spectrum, const StateVector& psi0,
                 Propagator propagator = Propagator::eigenbasis_operator);

  Complex s_plus_at(double t) const;
  std::vector<Complex> amplitudes_at(double t) const;
  double energy() const;

  int particle_count() const { return N_; }
  Propagator propagator() const { return propagator_; }

 private:
  void eigen_amplitudes(double t, std::span<Complex> c) const;
  Complex s_plus_eigenbasis(double t) const;

  int N_;
  Propagator propagator_;
  std::vector<double> energies_;
  double reference_energy_;
  RealMatrix vectors_;
  std::vector<Complex> overlaps_;
  RealMatrix s_plus_eigen_;
};

// values[i] = Delta(times[i]), envelope[i] = |<S~_+>(times[i])| / N.
// Throws DimensionMismatch if spectrum, state and params disagree in size.
TimeSeries evolve_expectations(const Spectrum& spectrum, const StateVector& psi0,
                               const ModelParams& params, std::span<const double> times,
                               const EvolutionOptions& options = {});

// Fock-basis amplitudes of psi(t); norm is conserved up to rounding.
std::vector<Complex> evolve_amplitudes(const Spectrum& spectrum, const StateVector& psi0, double t);

// sum_j |d_j|^2 E_j, constant in time.
double energy_expectation(const Spectrum& spectrum, const StateVector& psi0);

}  // namespace bhdimer
