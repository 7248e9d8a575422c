#include <benchmark/benchmark.h>

#include <vector>

#include "bhdimer/evolution.hpp"
#include "bhdimer/perturbative.hpp"
#include "bhdimer/revival.hpp"
#include "bhdimer/tridiagonal_eigen.hpp"

using namespace bhdimer;

namespace {

std::vector<double> grid(std::size_t n, double dt) {
  std::vector<double> t(n);
  for (std::size_t i = 0; i < n; ++i) t[i] = dt * static_cast<double>(i);
  return t;
}

void BM_Eigendecompose(benchmark::State& state) {
  const auto p = ModelParams::from_coupling(1.0, 0.5, static_cast<int>(state.range(0)));
  const auto h = build_hamiltonian(p);
  for (auto _ : state) benchmark::DoNotOptimize(eigendecompose(h));
}
BENCHMARK(BM_Eigendecompose)->Arg(100)->Arg(500)->Unit(benchmark::kMillisecond);

// Per time point, both propagators.
void BM_ExactPoint(benchmark::State& state) {
  const auto p = ModelParams::from_coupling(1.0, 0.5, static_cast<int>(state.range(0)));
  const auto spec = eigendecompose(build_hamiltonian(p));
  const auto propagator = static_cast<Propagator>(state.range(1));
  const ExactEvolution evo(spec, initial_state_all_left(p), propagator);
  double t = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(evo.s_plus_at(t));
    t += 0.15;
  }
}
BENCHMARK(BM_ExactPoint)->ArgsProduct({{100, 500}, {0, 1}});

void BM_Semianalytic(benchmark::State& state) {
  const auto p = ModelParams::from_coupling(1.0, 0.5, 100);
  const auto t = grid(1000, 0.15);
  for (auto _ : state) benchmark::DoNotOptimize(delta_semianalytic(p, t));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(t.size()));
}
BENCHMARK(BM_Semianalytic);

void BM_ClosedForm(benchmark::State& state) {
  const auto p = ModelParams::from_coupling(1.0, 0.5, 100);
  const auto t = grid(1000, 6.0);
  for (auto _ : state) benchmark::DoNotOptimize(delta_closed_form(p, t));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(t.size()));
}
BENCHMARK(BM_ClosedForm);

}  // namespace

BENCHMARK_MAIN();
