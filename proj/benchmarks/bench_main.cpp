#include <benchmark/benchmark.h>

#include "detsum/detsums.hpp"
#include "detsum/mat2.hpp"

namespace {

using namespace detsum;

void BM_Census(benchmark::State& state) {
  const PrimeField F(static_cast<std::uint32_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(census(F).n_square);
}
BENCHMARK(BM_Census)->Arg(31)->Arg(61)->Unit(benchmark::kMillisecond);

void BM_SSumDirect(benchmark::State& state) {
  const Character chi = make_character(make_field(10009), 2);
  const auto N = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(s_sum_direct(chi, N).zero_terms());
}
BENCHMARK(BM_SSumDirect)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);

void BM_SSumBinned(benchmark::State& state) {
  const Character chi = make_character(make_field(10009), 2);
  const auto N = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(s_sum_binned(chi, N).zero_terms());
}
BENCHMARK(BM_SSumBinned)->Arg(16)->Arg(32)->Arg(100)->Unit(benchmark::kMillisecond);

void BM_DeltaProfile(benchmark::State& state) {
  const auto N = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(delta_profile(N).total());
}
BENCHMARK(BM_DeltaProfile)->Arg(100)->Arg(300)->Unit(benchmark::kMillisecond);

void BM_RatioBins(benchmark::State& state) {
  const PrimeField F(1000003);
  const auto strategy = static_cast<BinStrategy>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ratio_bins(F, 90, 90, 90, strategy).total());
}
BENCHMARK(BM_RatioBins)
    ->Arg(static_cast<int>(BinStrategy::Direct))
    ->Arg(static_cast<int>(BinStrategy::ProductTable))
    ->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
