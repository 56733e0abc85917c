#include <benchmark/benchmark.h>

#include "cycdiv/constructions.hpp"
#include "cycdiv/cyclotomic.hpp"
#include "cycdiv/divisor_search.hpp"

using namespace cycdiv;

namespace {

void BM_cyclotomic_full(benchmark::State& state) {
  FactoredInt n = FactoredInt::from_u64(static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(cyclotomic(n));
}
BENCHMARK(BM_cyclotomic_full)->Arg(105)->Arg(1001)->Arg(3003)->Arg(15015);

void BM_cyclotomic_recurrence(benchmark::State& state) {
  FactoredInt n = FactoredInt::from_u64(static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(cyclotomic_recurrence(n));
}
BENCHMARK(BM_cyclotomic_recurrence)->Arg(105)->Arg(1024)->Arg(3003)->Arg(15015);

void BM_cyclotomic_trunc(benchmark::State& state) {
  // A squarefree index with many primes; truncation cost is dominated by
  // the 2^k squarefree parts, not the index size.
  FactoredInt n = primorial(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(cyclotomic_trunc(n, 10));
}
BENCHMARK(BM_cyclotomic_trunc)->DenseRange(4, 12, 2);

void BM_coefficient_maxima(benchmark::State& state) {
  FactoredInt n = FactoredInt::from_u64(static_cast<std::uint64_t>(state.range(0)));
  SearchConfig cfg;
  cfg.workers = static_cast<unsigned>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(coefficient_maxima(n, 8, cfg));
}
BENCHMARK(BM_coefficient_maxima)
    ->Args({120, 1})
    ->Args({120, 4})
    ->Args({180, 1})
    ->Args({180, 4});

void BM_big_B(benchmark::State& state) {
  FactoredInt n = FactoredInt::from_u64(static_cast<std::uint64_t>(state.range(0)));
  SearchConfig cfg;
  cfg.poly_budget = std::uint64_t(1) << 16;  // n = 120 has 16 divisors
  for (auto _ : state) benchmark::DoNotOptimize(big_B(n, cfg));
}
BENCHMARK(BM_big_B)->Arg(30)->Arg(60)->Arg(120);

void BM_prefix_witness(benchmark::State& state) {
  std::vector<long long> target(static_cast<std::size_t>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(prefix_witness(target));
}
BENCHMARK(BM_prefix_witness)->DenseRange(1, 6, 1);

}  // namespace

BENCHMARK_MAIN();
