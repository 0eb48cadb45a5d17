#include <benchmark/benchmark.h>
#include <omp.h>

#include <random>

#include "maxspread/families.hpp"
#include "maxspread/kernels.hpp"
#include "maxspread/spectra.hpp"

using namespace maxspread;

namespace {

SymmetricMatrix random_matrix(int n) {
  std::mt19937_64 rng(7);
  std::normal_distribution<> g;
  SymmetricMatrix a(n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) a.set_symmetric(i, j, g(rng));
  return a;
}

void BM_TridiagSerial(benchmark::State& state) {
  auto a = random_matrix(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::reference::tridiagonalize(a, false));
  state.SetComplexityN(state.range(0));
}

void BM_TridiagParallel(benchmark::State& state) {
  auto a = random_matrix(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::tridiagonalize_parallel(a, false));
  state.counters["threads"] = omp_get_max_threads();
  state.SetComplexityN(state.range(0));
}

void BM_FamilySpectrum(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Graph g = build_family(FamilyKind::OuterplanarLinear, n, predicted_ell(FamilyKind::OuterplanarLinear, n));
  auto policy = state.range(1) ? KernelPolicy::Parallel : KernelPolicy::Serial;
  for (auto _ : state) benchmark::DoNotOptimize(eigenvalues_sym(g, {.vectors = false, .policy = policy}));
}

void BM_Scan(benchmark::State& state) {
  auto method = static_cast<ExtremeMethod>(state.range(1));
  for (auto _ : state)
    benchmark::DoNotOptimize(scan_argmax(FamilyKind::OuterplanarLinear, static_cast<int>(state.range(0)),
                                         {.method = method}));
}

}  // namespace

BENCHMARK(BM_TridiagSerial)->RangeMultiplier(2)->Range(64, 1024)->Unit(benchmark::kMillisecond)->Complexity();
BENCHMARK(BM_TridiagParallel)->RangeMultiplier(2)->Range(64, 1024)->Unit(benchmark::kMillisecond)->UseRealTime()->Complexity();
BENCHMARK(BM_FamilySpectrum)->ArgsProduct({{401, 801}, {0, 1}})->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_Scan)->ArgsProduct({{200}, {0, 1, 2}})->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
