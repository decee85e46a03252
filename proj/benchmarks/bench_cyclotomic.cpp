#include <benchmark/benchmark.h>

#include "practium/cyclotomic.hpp"
#include "practium/families.hpp"

namespace {

void BM_Phi210Eval(benchmark::State& state) {
  const practium::Natural x = practium::pow2(state.range(0));
  const auto& poly = practium::cyclotomic_poly(210);
  for (auto _ : state) {
    benchmark::DoNotOptimize(practium::eval(poly, x));
  }
}
BENCHMARK(BM_Phi210Eval)->Arg(9)->Arg(81)->Arg(243);

void BM_RatioFactors(benchmark::State& state) {
  const practium::Natural x = practium::pow_nat(3, state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        practium::ratio_factors(x, 210, 70, practium::QuotientSign::plus));
  }
}
BENCHMARK(BM_RatioFactors)->Arg(1)->Arg(9)->Arg(27);

void BM_PowerTwoMemberTail(benchmark::State& state) {
  // Chain construction and weak verification over the k = 2 base; the base
  // factorization is rebuilt each round, so pass hints in real use.
  for (auto _ : state) {
    benchmark::DoNotOptimize(practium::power_two_member(1));
  }
}
BENCHMARK(BM_PowerTwoMemberTail)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
