#pragma once

#include <complex>
#include <span>
#include <vector>

namespace bhdimer {

using Complex = std::complex<double>;

// Parameters of the two-site Bose-Hubbard model
//
//   H = -J (a_L^+ a_R + a_R^+ a_L) + U [n_L (n_L - 1) + n_R (n_R - 1)]
//
// The dimensionless coupling u = U N / J is always derived from (J, U, N).
class ModelParams {
 public:
  // Throws InvalidParams unless J > 0, U >= 0, N >= 1 and all finite.
  ModelParams(double J, double U, int N);

  // Builds the parameter set from the dimensionless coupling, U = u J / N.
  static ModelParams from_coupling(double J, double u, int N);

  double J() const { return J_; }
  double U() const { return U_; }
  int N() const { return N_; }
  double u() const { return u_; }

  // The collapse/revival formulas are derived for u < 1.
  bool rabi_regime() const { return u_ < 1.0; }

  // Dimension of the fixed-N Fock space.
  std::size_t dimension() const { return static_cast<std::size_t>(N_) + 1; }

 private:
  double J_;
  double U_;
  int N_;
  double u_;
};

// H_BH in the Fock basis |n_L = k, n_R = N - k>, k = 0..N. Real symmetric
// tridiagonal; offdiag[k] couples k and k + 1.
struct TridiagonalHamiltonian {
  std::vector<double> diag;
  std::vector<double> offdiag;

  std::size_t size() const { return diag.size(); }

  // y = H x
  void apply(std::span<const Complex> x, std::span<Complex> y) const;
};

TridiagonalHamiltonian build_hamiltonian(const ModelParams& params);

// Unit-norm amplitudes over the Fock basis, index k = n_L.
class StateVector {
 public:
  static constexpr double kNormTolerance = 1e-12;

  // Throws InvalidState if the norm deviates from 1 by more than kNormTolerance.
  explicit StateVector(std::vector<Complex> amps);

  std::span<const Complex> amps() const { return amps_; }
  std::size_t size() const { return amps_.size(); }
  const Complex& operator[](std::size_t k) const { return amps_[k]; }

 private:
  std::vector<Complex> amps_;
};

double squared_norm(std::span<const Complex> amps);

StateVector initial_state_all_left(const ModelParams& params);
StateVector initial_state_all_right(const ModelParams& params);

// Coherent product state with single-particle amplitudes cos(alpha) on the
// left and sin(alpha) on the right, zero relative phase. Binomial weights
// are taken in log space so N in the hundreds is safe.
StateVector initial_state_tilted(const ModelParams& params, double alpha);

// <S_z> = sum_k |a_k|^2 (2k - N) / (2N), the normalized population difference.
double s_z_expectation(std::span<const Complex> amps, const ModelParams& params);
double s_z_expectation(const StateVector& state, const ModelParams& params);

// <S~_+> with S~_+ = N (S_z - i S_y) = a_+^+ a_-. Re(result) / N equals
// s_z_expectation and |result| / N is the exact envelope of the oscillation.
Complex s_plus_expectation(std::span<const Complex> amps, const ModelParams& params);
Complex s_plus_expectation(const StateVector& state, const ModelParams& params);

// Applies S~_+ in the Fock basis: diagonal (2k - N)/2, <k|S~_+|k+1> = +b_k/2,
// <k+1|S~_+|k> = -b_k/2 with b_k = sqrt((k+1)(N-k)).
void apply_s_plus(int N, std::span<const Complex> x, std::span<Complex> y);
void apply_s_plus(int N, std::span<const double> x, std::span<double> y);

// <psi|H|psi> in the Fock basis.
double energy_in_fock(const TridiagonalHamiltonian& h, std::span<const Complex> amps);

}  // namespace bhdimer
