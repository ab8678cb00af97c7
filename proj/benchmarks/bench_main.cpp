#include <benchmark/benchmark.h>

#include <random>

#include "stabent/bounds.hpp"
#include "stabent/codes.hpp"
#include "stabent/f2.hpp"
#include "stabent/iteration.hpp"
#include "stabent/measurement.hpp"

namespace {

using namespace stabent;

const StabilizerCode& code_8_1_3() {
  static const StabilizerCode code = parse_code(
      "XZZZZZZY\nIXIZIZIZ\nIIXZIIZZ\nZZZXIIII\nIZZIYZZX\nZZIIZXII\nZZIIIIXY\n");
  return code;
}

void BM_Rank(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(1);
  std::bernoulli_distribution bit(0.5);
  F2Matrix m(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) m.set(r, c, bit(rng));
  }
  for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(BM_Rank)->Arg(64)->Arg(256)->Arg(1024);

void BM_ExhaustiveLowerBound(benchmark::State& state) {
  const StabilizerCode code = toric(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(lower_bound(code, {.threads = 1}).value);
}
BENCHMARK(BM_ExhaustiveLowerBound)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_Persistency(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(persistency(code_8_1_3()).count);
}
BENCHMARK(BM_Persistency)->Unit(benchmark::kMillisecond);

void BM_Iteration(benchmark::State& state) {
  const auto starts = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(iterate_closest_product(code_8_1_3(), {.starts = starts}).E_estimate);
  }
}
BENCHMARK(BM_Iteration)->Arg(1)->Arg(64)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
