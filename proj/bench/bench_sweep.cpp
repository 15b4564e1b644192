#include <benchmark/benchmark.h>

#include "planeval/model.hpp"
#include "planeval/sweep.hpp"

using namespace planeval;

namespace {

CollectionModel cusp_and_line() {
  return build_model({make_curve(2, {{3, Rational(1)}}), make_curve(1, {}, true)});
}

void run_engine(benchmark::State& state, Exec exec) {
  const auto model = cusp_and_line();
  const Box box = Box::cube(2, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(hilbert_table(model, box, exec));
}

void run_oracle(benchmark::State& state, Exec exec) {
  const auto model = cusp_and_line();
  const Box box = Box::cube(2, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(oracle_hilbert_table(model, box, exec));
}

void BM_HilbertSerial(benchmark::State& s) { run_engine(s, Exec::serial); }
void BM_HilbertParallel(benchmark::State& s) { run_engine(s, Exec::parallel); }
void BM_OracleSerial(benchmark::State& s) { run_oracle(s, Exec::serial); }
void BM_OracleParallel(benchmark::State& s) { run_oracle(s, Exec::parallel); }

}  // namespace

BENCHMARK(BM_HilbertSerial)->Arg(8)->Arg(16)->Arg(24)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_HilbertParallel)->Arg(8)->Arg(16)->Arg(24)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OracleSerial)->Arg(6)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OracleParallel)->Arg(6)->Arg(10)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
