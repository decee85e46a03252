#include <benchmark/benchmark.h>

#include "practium/practical.hpp"
#include "practium/sieve.hpp"

namespace {

void BM_SieveBuild(benchmark::State& state) {
  const std::uint64_t limit = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(practium::PracticalSet::build(limit, 1));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(limit));
}
BENCHMARK(BM_SieveBuild)->Arg(100'000)->Arg(1'000'000)->Arg(10'000'000)->Unit(benchmark::kMillisecond);

void BM_SieveBuildParallel(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(practium::PracticalSet::build(10'000'000, state.range(0)));
  }
}
BENCHMARK(BM_SieveBuildParallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_StewartWord(benchmark::State& state) {
  std::uint64_t n = 1;
  std::uint64_t hits = 0;
  for (auto _ : state) {
    hits += practium::is_practical_u64(n);
    n = n % 100'000'000 + 1;
  }
  benchmark::DoNotOptimize(hits);
}
BENCHMARK(BM_StewartWord);

void BM_SubsetSumOracle(benchmark::State& state) {
  const std::uint64_t n = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(practium::is_practical_oracle(practium::Natural(n)));
  }
}
BENCHMARK(BM_SubsetSumOracle)->Arg(20000)->Arg(720720)->Arg(8'648'640);

}  // namespace

BENCHMARK_MAIN();
