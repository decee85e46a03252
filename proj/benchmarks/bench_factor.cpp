#include <benchmark/benchmark.h>

#include <random>

#include "practium/factorization.hpp"
#include "practium/primality.hpp"

namespace {

void BM_FactorWord(benchmark::State& state) {
  std::mt19937_64 rng(1234);
  for (auto _ : state) {
    benchmark::DoNotOptimize(practium::factor_u64(rng() >> (64 - state.range(0))));
  }
}
BENCHMARK(BM_FactorWord)->Arg(32)->Arg(48)->Arg(62);

void BM_FactorPowerTwoBase(benchmark::State& state) {
  // 2^106 + 2, the largest base case that needs no hints.
  const practium::Natural n = practium::pow2(106) + 2;
  for (auto _ : state) {
    benchmark::DoNotOptimize(practium::factor(n));
  }
  state.SetLabel("2^106+2");
}
BENCHMARK(BM_FactorPowerTwoBase)->Unit(benchmark::kMillisecond);

void BM_IsPrimeBig(benchmark::State& state) {
  const practium::Natural p = practium::pow2(607) - 1;  // Mersenne prime
  for (auto _ : state) {
    benchmark::DoNotOptimize(practium::is_prime(p));
  }
  state.SetLabel("2^607-1");
}
BENCHMARK(BM_IsPrimeBig)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
