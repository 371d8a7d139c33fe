#include <benchmark/benchmark.h>

#include "braidcohom/necklace.hpp"

static void BM_PiCount(benchmark::State &state) {
  int part = static_cast<int>(state.range(0));
  for (auto _ : state)
    for (int d = 0; d <= part; ++d)
      benchmark::DoNotOptimize(braidcohom::pi_count(part, d));
}
BENCHMARK(BM_PiCount)->Arg(12)->Arg(24)->Arg(48);

static void BM_EnumerateCycles(benchmark::State &state) {
  int part = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(braidcohom::enumerate_admissible_cycles(part, part / 2));
}
BENCHMARK(BM_EnumerateCycles)->Arg(12)->Arg(18);
