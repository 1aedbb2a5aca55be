#include <benchmark/benchmark.h>

#include "hybridwig/closed_form.hpp"
#include "hybridwig/fidelity.hpp"
#include "hybridwig/fock_oracle.hpp"
#include "hybridwig/negativity.hpp"

using namespace hybridwig;

namespace {

ScenarioParams scenario(int family) {
  switch (family) {
    case 0: return {0.1, Coherent{0.0}};
    case 1: return {0.1, Thermal{3.0}};
    default: return {0.1, Cat{1.0}};
  }
}

void BM_Marginal(benchmark::State& state) {
  const ScenarioParams s = scenario(static_cast<int>(state.range(0)));
  cplx beta(0.3, -0.2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(closed_form_marginal(s, 1.3, beta));
    beta += cplx(1e-9, 0.0);
  }
}
BENCHMARK(BM_Marginal)->DenseRange(0, 2);

void BM_HybridVolume(benchmark::State& state) {
  const ScenarioParams s = scenario(static_cast<int>(state.range(0)));
  QuadratureSpec q;
  q.threads = 1;
  for (auto _ : state) benchmark::DoNotOptimize(negativity_volume_hybrid(s, 1.3, q));
}
BENCHMARK(BM_HybridVolume)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

void BM_CriticalValue(benchmark::State& state) {
  QuadratureSpec q;
  q.threads = 1;
  for (auto _ : state) benchmark::DoNotOptimize(critical_value(scenario(2), 1.3, q));
}
BENCHMARK(BM_CriticalValue)->Unit(benchmark::kMillisecond);

void BM_OracleWigner(benchmark::State& state) {
  const ScenarioParams s = scenario(static_cast<int>(state.range(0)));
  const TruncationSpec spec = auto_truncation(s);
  const FockOperator rho = evolve_oracle(initial_density(s.family, spec), s.lambda, 1.3, spec);
  const PhasePoint p{0.7, 2.1, cplx(0.4, 0.1)};
  for (auto _ : state) benchmark::DoNotOptimize(wigner_oracle(rho, p, spec));
  state.counters["cutoff"] = spec.cutoff;
}
BENCHMARK(BM_OracleWigner)->DenseRange(0, 2)->Unit(benchmark::kMicrosecond);

void BM_UhlmannFidelity(benchmark::State& state) {
  const ScenarioParams s = scenario(static_cast<int>(state.range(0)));
  const SigmaPair p = build_sigma_pair(s, 1.3);
  for (auto _ : state) benchmark::DoNotOptimize(uhlmann_fidelity(p.sigma0, p.sigma1));
}
BENCHMARK(BM_UhlmannFidelity)->DenseRange(0, 2)->Unit(benchmark::kMicrosecond);

void BM_FidelityClosedForm(benchmark::State& state) {
  const ScenarioParams s = scenario(2);
  double t = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(fidelity_closed_form(s, t));
    t += 1e-6;
  }
}
BENCHMARK(BM_FidelityClosedForm);

}  // namespace
BENCHMARK_MAIN();
