// Serial reference vs OpenMP for the two parallel kernels.

#include <motzeta/curves.hpp>
#include <motzeta/fan.hpp>
#include <motzeta/fforacle.hpp>

#include <benchmark/benchmark.h>

using namespace motzeta;

namespace {

void BM_DivisorTuples(benchmark::State& state, Exec exec) {
  const ObstructionSet B = b_sigma(hirzebruch_fan(1));
  const DegreeVector d{2, 2, 1, 3};
  for (auto _ : state) benchmark::DoNotOptimize(count_divisor_tuples(B, 3, d, exec));
}

void BM_HeightSeries(benchmark::State& state, Exec exec) {
  const Fan f = hirzebruch_fan(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(height_series(f, 16, exec).classes.size());
}

}  // namespace

BENCHMARK_CAPTURE(BM_DivisorTuples, serial, Exec::serial)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_DivisorTuples, openmp, Exec::parallel)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_HeightSeries, serial, Exec::serial)->Arg(1)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_HeightSeries, openmp, Exec::parallel)->Arg(1)->Arg(3)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
