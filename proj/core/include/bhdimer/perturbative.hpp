#pragma once

#include <span>
#include <vector>

#include "bhdimer/evolution.hpp"
#include "bhdimer/model.hpp"

namespace bhdimer {

enum class PerturbationOrder { first, second };

// Levels are labelled by the S_x quantum number n in {-N/2, ..., N/2}; for
// odd N the labels are half-integers. A label is valid when |n| <= N/2 and
// n + N/2 is an integer; anything else throws OutOfRange.
void check_level_label(const ModelParams& params, double n);

// Label of the exact eigenvalue at ascending index j. The perturbative
// energies decrease with n, so the lowest level carries n = N/2.
double level_label_for_index(const ModelParams& params, std::size_t j);

// Semiclassical spectrum of H_BH in the Rabi regime:
//   first:  2J (-n + 3/8 u N - u/2 - u n^2 / (2N))
//   second: first + 2J (-u^2 n / 16 + u^2 n^3 / (4 N^2))
double energy_perturbative(const ModelParams& params, double n, PerturbationOrder order);

struct PerturbativeSpectrum {
  PerturbationOrder order;
  std::vector<double> labels;    // n, ascending from -N/2
  std::vector<double> energies;  // energies[i] belongs to labels[i]
};

PerturbativeSpectrum perturbative_spectrum(const ModelParams& params, PerturbationOrder order);

// Large-N overlap of the all-left state with the S_x eigenstate |n>:
// (2 / (pi N))^{1/4} exp(-n^2 / N).
double c_coefficient(const ModelParams& params, double n);

// Delta(t) = (1/N) Re[(N/2) sum_n c_n c_{n+1} exp(-i (E_n - E_{n+1}) t)] with
// the second-order energies, summed over every n (no continuum
// approximation). envelope is the modulus of the same sum scaled the same way.
TimeSeries delta_semianalytic(const ModelParams& params, std::span<const double> times);

}  // namespace bhdimer
