#include <benchmark/benchmark.h>

#include "psweyl/lorentz.hpp"
#include "psweyl/ps_calc.hpp"
#include "psweyl/weyl_group.hpp"

namespace {

const char* const kLabels[] = {"A2", "A3", "B3", "G2", "A4", "D4"};

void BM_GroupGeneration(benchmark::State& state) {
  const char* label = kLabels[state.range(0)];
  for (auto _ : state) {
    psw::WeylGroup g(psw::RootSystem::build(label));
    benchmark::DoNotOptimize(g.num_edges());
  }
  state.SetLabel(label);
}
BENCHMARK(BM_GroupGeneration)->DenseRange(0, 5);

void BM_PsByChains(benchmark::State& state) {
  const char* label = kLabels[state.range(0)];
  psw::WeylGroup g(psw::RootSystem::build(label));
  for (auto _ : state) {
    auto r = psw::ps_by_chains(g, g.identity(), g.longest_element());
    benchmark::DoNotOptimize(r.chain_count);
  }
  state.SetLabel(label);
}
BENCHMARK(BM_PsByChains)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_PsByChevalley(benchmark::State& state) {
  const char* label = kLabels[state.range(0)];
  psw::WeylGroup g(psw::RootSystem::build(label));
  for (auto _ : state) {
    auto r = psw::ps_by_chevalley(g, g.identity(), g.longest_element());
    benchmark::DoNotOptimize(r.chain_count);
  }
  state.SetLabel(label);
}
BENCHMARK(BM_PsByChevalley)->DenseRange(0, 5)->Unit(benchmark::kMillisecond);

void BM_IsLorentzian(benchmark::State& state) {
  const char* label = kLabels[state.range(0)];
  psw::WeylGroup g(psw::RootSystem::build(label));
  const auto d = psw::ps_by_chevalley(g, g.identity(), g.longest_element()).poly;
  for (auto _ : state) {
    auto r = psw::is_lorentzian(d);
    benchmark::DoNotOptimize(r.forms_checked);
  }
  state.SetLabel(label);
}
BENCHMARK(BM_IsLorentzian)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);

void BM_SymmetricInertia(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  psw::RationalMatrix a(n, std::vector<psw::Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = psw::Rational(static_cast<long>((i * 7 + j * 7) % 5) - 2, 1 + (i + j) % 3);
  for (auto _ : state) {
    auto in = psw::symmetric_inertia(a);
    benchmark::DoNotOptimize(in.positive);
  }
}
BENCHMARK(BM_SymmetricInertia)->RangeMultiplier(2)->Range(4, 32);

}  // namespace

BENCHMARK_MAIN();
