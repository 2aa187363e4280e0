// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include "singspec/exc_geometry.hpp"
#include "singspec/kernels.hpp"
#include "singspec/resolution.hpp"

using namespace singspec;

namespace {

const ResolutionData& big_germ() {
  static const ResolutionData res = from_newton({{17, 0}, {11, 2}, {4, 7}, {0, 23}});
  return res;
}

void BM_SheafPiecesSerial(benchmark::State& state) {
  const auto alphas = fiber_exponents(big_germ());
  for (auto _ : state) benchmark::DoNotOptimize(sheaf_pieces_serial(big_germ(), alphas));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(alphas.size()));
}

void BM_SheafPiecesParallel(benchmark::State& state) {
  const auto alphas = fiber_exponents(big_germ());
  for (auto _ : state) benchmark::DoNotOptimize(sheaf_pieces_parallel(big_germ(), alphas));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(alphas.size()));
}

void BM_NcSweepSerial(benchmark::State& state) {
  const auto models = enumerate_nc_models(3, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(nc_sweep_serial(models, make_rational(3)));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(models.size()));
}

void BM_NcSweepParallel(benchmark::State& state) {
  const auto models = enumerate_nc_models(3, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(nc_sweep_parallel(models, make_rational(3)));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(models.size()));
}

void BM_PsiSweepSerial(benchmark::State& state) {
  const auto models = enumerate_nc_models(static_cast<std::size_t>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(psi_sweep_serial(models));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(models.size()));
}

void BM_PsiSweepParallel(benchmark::State& state) {
  const auto models = enumerate_nc_models(static_cast<std::size_t>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(psi_sweep_parallel(models));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(models.size()));
}

}  // namespace

BENCHMARK(BM_SheafPiecesSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SheafPiecesParallel)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_NcSweepSerial)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_NcSweepParallel)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_PsiSweepSerial)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PsiSweepParallel)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
