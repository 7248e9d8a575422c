#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "bhdimer/error.hpp"
#include "bhdimer/evolution.hpp"
#include "bhdimer/model.hpp"
#include "bhdimer/tridiagonal_eigen.hpp"
#include "oracles/dense_oracle.hpp"

using namespace bhdimer;

namespace {

std::vector<double> linspace(double a, double b, std::size_t n) {
  std::vector<double> t(n);
  for (std::size_t i = 0; i < n; ++i) t[i] = a + (b - a) * static_cast<double>(i) / (n - 1);
  return t;
}

TimeSeries exact(const ModelParams& p, const StateVector& psi0, const std::vector<double>& t,
                 EvolutionOptions opt = {}) {
  return evolve_expectations(eigendecompose(build_hamiltonian(p)), psi0, p, t, opt);
}

}  // namespace

TEST_SUITE("exact-engine") {

TEST_CASE("TimeSeries invariants") {
  CHECK_NOTHROW(TimeSeries({0.0, 1.0}, {0.5, 0.4}, {0.5, 0.45}));
  CHECK_THROWS_AS(TimeSeries({0.0, 0.0}, {0.5, 0.4}), ConfigError);
  CHECK_THROWS_AS(TimeSeries({1.0, 0.0}, {0.5, 0.4}), ConfigError);
  CHECK_THROWS_AS(TimeSeries({0.0, 1.0}, {0.5}), DimensionMismatch);
  CHECK_THROWS_AS(TimeSeries({0.0, 1.0}, {0.5, 0.4}, {0.5}), DimensionMismatch);
}

TEST_CASE("N = 1: interaction is inert, Delta = cos(2t) / 2") {
  const auto t = linspace(0.0, 40.0, 997);
  for (double U : {0.0, 0.3, 5.0}) {
    const ModelParams p(1.0, U, 1);
    const auto s = exact(p, initial_state_all_left(p), t);
    for (std::size_t i = 0; i < t.size(); ++i) {
      CHECK(std::abs(s.values()[i] - 0.5 * std::cos(2.0 * t[i])) <= 1e-10);
      CHECK(s.envelope()[i] == doctest::Approx(0.5).epsilon(1e-12));
    }
  }
}

TEST_CASE("initial condition: Delta(0) = envelope(0) = 1/2") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> J(0.3, 2.0), u(0.0, 2.0);
  for (int N : {1, 2, 9, 64, 150}) {
    const auto p = ModelParams::from_coupling(J(rng), u(rng), N);
    const auto s = exact(p, initial_state_all_left(p), {0.0});
    CHECK(s.values()[0] == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(s.envelope()[0] == doctest::Approx(0.5).epsilon(1e-12));
  }
}

TEST_CASE("small N agrees with the matrix-exponential oracle") {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> J(0.5, 2.0), U(0.0, 1.0), T(0.0, 50.0);
  for (int N = 1; N <= 6; ++N) {
    const ModelParams p(J(rng), U(rng), N);
    std::vector<double> t(40);
    for (auto& x : t) x = T(rng);
    std::sort(t.begin(), t.end());
    const auto s = exact(p, initial_state_all_left(p), t);
    for (std::size_t i = 0; i < t.size(); ++i) {
      const auto psi = oracle::propagate(p.J(), p.U(), N, oracle::all_left(N), t[i]);
      CHECK(std::abs(s.values()[i] - oracle::population_difference(psi, N)) <= 1e-10);
    }
  }
}

TEST_CASE("both propagators agree") {
  const auto p = ModelParams::from_coupling(1.0, 0.5, 100);
  const auto t = linspace(0.0, 700.0, 2001);
  const auto psi0 = initial_state_tilted(p, 0.3);
  const auto a = exact(p, psi0, t, {Propagator::eigenbasis_operator, 1});
  const auto b = exact(p, psi0, t, {Propagator::fock_reconstruction, 1});
  for (std::size_t i = 0; i < t.size(); ++i) {
    CHECK(std::abs(a.values()[i] - b.values()[i]) <= 1e-12);
    CHECK(std::abs(a.envelope()[i] - b.envelope()[i]) <= 1e-12);
  }
}

TEST_CASE("thread count does not change a single bit") {
  const auto p = ModelParams::from_coupling(1.0, 0.5, 60);
  const auto t = linspace(0.0, 300.0, 1001);
  const auto psi0 = initial_state_all_left(p);
  const auto a = exact(p, psi0, t, {Propagator::eigenbasis_operator, 1});
  const auto b = exact(p, psi0, t, {Propagator::eigenbasis_operator, 4});
  CHECK(a.values() == b.values());
  CHECK(a.envelope() == b.envelope());
}

TEST_CASE("norm and energy are conserved") {
  const auto p = ModelParams::from_coupling(1.0, 0.5, 100);
  const auto h = build_hamiltonian(p);
  const auto spec = eigendecompose(h);
  const auto psi0 = initial_state_all_left(p);
  const double e0 = energy_expectation(spec, psi0);
  CHECK(e0 == doctest::Approx(h.diag.back()).epsilon(1e-12));
  const ExactEvolution evo(spec, psi0, Propagator::fock_reconstruction);
  for (double t : linspace(0.0, 5000.0, 301)) {
    const auto psi = evo.amplitudes_at(t);
    CHECK(std::abs(squared_norm(psi) - 1.0) <= 1e-12);
    CHECK(std::abs(energy_in_fock(h, psi) - e0) <= 1e-12 * std::abs(e0));
  }
}

TEST_CASE("energy_expectation examples") {
  const ModelParams p1(1.0, 0.0, 1);
  CHECK(std::abs(energy_expectation(eigendecompose(build_hamiltonian(p1)), initial_state_all_left(p1))) <= 1e-15);

  for (int N : {2, 17, 100}) {
    const ModelParams p(1.0, 0.0, N);
    CHECK(std::abs(energy_expectation(eigendecompose(build_hamiltonian(p)), initial_state_all_left(p))) <= 1e-12);
  }

  const ModelParams p2(1.0, 0.1, 2);
  CHECK(energy_expectation(eigendecompose(build_hamiltonian(p2)), initial_state_all_left(p2)) ==
        doctest::Approx(0.2).epsilon(1e-13));
}

TEST_CASE("parity: the all-right start gives the negated signal") {
  const auto p = ModelParams::from_coupling(1.0, 0.8, 40);
  const auto t = linspace(0.0, 400.0, 1500);
  const auto spec = eigendecompose(build_hamiltonian(p));
  const auto left = evolve_expectations(spec, initial_state_all_left(p), p, t);
  const auto right = evolve_expectations(spec, initial_state_all_right(p), p, t);
  for (std::size_t i = 0; i < t.size(); ++i) {
    CHECK(std::abs(left.values()[i] + right.values()[i]) <= 1e-12);
  }
}

TEST_CASE("envelope dominates the signal") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0.0, 2.0), alpha(0.0, 1.5);
  for (int trial = 0; trial < 6; ++trial) {
    const auto p = ModelParams::from_coupling(1.0, u(rng), 30 + 10 * trial);
    const auto s = exact(p, initial_state_tilted(p, alpha(rng)), linspace(0.0, 500.0, 800));
    for (std::size_t i = 0; i < s.size(); ++i) {
      CHECK(std::abs(s.values()[i]) <= s.envelope()[i] + 1e-12);
      CHECK(s.envelope()[i] <= 0.5 + 1e-12);
    }
  }
}

TEST_CASE("U = 0: Delta = cos(2Jt) / 2 up to N = 200") {
  const auto t = linspace(0.0, 100.0, 1201);
  for (int N : {2, 10, 50, 101, 200}) {
    for (double J : {1.0, 0.6}) {
      const ModelParams p(J, 0.0, N);
      const auto s = exact(p, initial_state_all_left(p), t);
      for (std::size_t i = 0; i < t.size(); ++i) {
        CHECK(std::abs(s.values()[i] - 0.5 * std::cos(2.0 * J * t[i])) <= 1e-9);
      }
    }
  }
}

TEST_CASE("fig1 parameters: collapse by 2 T_c, revival near T_R - 3 pi / 2") {
  const auto p = ModelParams::from_coupling(1.0, 0.5, 100);
  const auto s = exact(p, initial_state_all_left(p), linspace(0.0, 700.0, 7001));
  const auto& t = s.times();
  const auto& env = s.envelope();
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t[i] >= 56.6 && t[i] <= 400.0) CHECK(env[i] < 0.05);
  }
  const auto it = std::max_element(env.begin() + 4000, env.end());
  const double t_peak = t[static_cast<std::size_t>(it - env.begin())];
  CHECK(std::abs(t_peak - 623.6) <= 0.01 * 623.6);
}

TEST_CASE("dimension mismatch") {
  const ModelParams p(1.0, 0.1, 4);
  const ModelParams q(1.0, 0.1, 5);
  const auto spec = eigendecompose(build_hamiltonian(p));
  CHECK_THROWS_AS(evolve_expectations(spec, initial_state_all_left(q), q, std::vector<double>{0.0}),
                  DimensionMismatch);
  CHECK_THROWS_AS(evolve_expectations(spec, initial_state_all_left(p), q, std::vector<double>{0.0}),
                  DimensionMismatch);
  CHECK_THROWS_AS(energy_expectation(spec, initial_state_all_left(q)), DimensionMismatch);
  CHECK_THROWS_AS(evolve_expectations(spec, initial_state_all_left(p), p, std::vector<double>{1.0, 0.5}),
                  ConfigError);
}

}  // TEST_SUITE
