// Serial reference against the OpenMP path of the QMC kernel on an epsilon-mass integrand.
#include <benchmark/benchmark.h>

#include <cmath>

#include "segre/numeric.hpp"

using namespace segre;

namespace {

Integrand kernel() {
  return [](const double* u, double* out) {
    // |z|^2 regularized against a small epsilon, a cheap stand-in for the mass integrand
    double r2 = u[0] * u[0] + u[1] * u[1];
    for (int e = 0; e < 5; ++e) {
      double eps = std::pow(10.0, -1 - 0.5 * e);
      out[e] = eps / ((r2 + eps) * (r2 + eps)) * std::cos(6.283185307179586 * u[2]);
    }
  };
}

void BM_qmc(benchmark::State& state, bool parallel) {
  const long samples = state.range(0);
  auto f = kernel();
  for (auto _ : state) {
    auto r = qmc_integrate(f, 3, 5, samples, 16, 42, parallel);
    benchmark::DoNotOptimize(r.partition_means.data());
  }
  state.SetItemsProcessed(state.iterations() * samples);
}

void BM_qmc_serial(benchmark::State& s) { BM_qmc(s, false); }
void BM_qmc_parallel(benchmark::State& s) { BM_qmc(s, true); }

void BM_epsilon_mass(benchmark::State& state) {
  RegConfig cfg;
  cfg.samples = state.range(0);
  cfg.parallel = state.range(1) != 0;
  auto G = std::vector<Polynomial>{parse_polynomial("x1^2-x2^3", {"x1", "x2"}), parse_polynomial("x1*x2", {"x1", "x2"})};
  for (auto _ : state) benchmark::DoNotOptimize(epsilon_mass(G, 2, cfg).value);
}

}  // namespace

BENCHMARK(BM_qmc_serial)->Arg(1 << 14)->Arg(1 << 17)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_qmc_parallel)->Arg(1 << 14)->Arg(1 << 17)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_epsilon_mass)->Args({50000, 0})->Args({50000, 1})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
