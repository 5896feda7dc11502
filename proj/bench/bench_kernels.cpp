#include <benchmark/benchmark.h>

#include <vector>

#include "mofs/evaluation.hpp"
#include "mofs/instance.hpp"
#include "mofs/neighbourhoods.hpp"
#include "mofs/oracle.hpp"
#include "mofs/rng.hpp"
#include "mofs/search.hpp"

namespace {

mofs::Instance bench_instance(std::size_t n, std::size_t m) {
  return mofs::generate_instance(mofs::GeneratorConfig{n, m, 2024, 0.3, 0.5});
}

void BM_Evaluate(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const mofs::Instance inst = bench_instance(n, n);
  mofs::Evaluator eval(inst, mofs::builtin_criteria("gamma12"));
  mofs::SplitMix64 rng(1);
  std::vector<int> order(n);
  for (std::size_t j = 0; j < n; ++j) order[j] = static_cast<int>(j);
  mofs::shuffle(std::span<int>(order), rng);
  mofs::ObjectiveVector out;
  for (auto _ : state) {
    eval.evaluate(order, out);
    benchmark::DoNotOptimize(out.data());
  }
}
BENCHMARK(BM_Evaluate)->Arg(10)->Arg(20)->Arg(50);

void BM_OracleSerial(benchmark::State& state) {
  const mofs::Instance inst = bench_instance(static_cast<std::size_t>(state.range(0)), 10);
  const auto crit = mofs::builtin_criteria("gamma11");
  for (auto _ : state) benchmark::DoNotOptimize(mofs::enumerate_pareto_serial(inst, crit).vectors.size());
}
BENCHMARK(BM_OracleSerial)->Arg(8)->Arg(9)->Unit(benchmark::kMillisecond);

void BM_OracleParallel(benchmark::State& state) {
  const mofs::Instance inst = bench_instance(static_cast<std::size_t>(state.range(0)), 10);
  const auto crit = mofs::builtin_criteria("gamma11");
  for (auto _ : state) benchmark::DoNotOptimize(mofs::enumerate_pareto(inst, crit).vectors.size());
}
BENCHMARK(BM_OracleParallel)->Arg(8)->Arg(9)->Unit(benchmark::kMillisecond);

void batch(benchmark::State& state, mofs::Execution execution) {
  const std::vector<mofs::Instance> instances{bench_instance(10, 10), bench_instance(10, 5)};
  mofs::SearchConfig config;
  config.criteria = mofs::builtin_criteria("gamma11");
  config.operators = mofs::unit_operators();
  config.mode = mofs::SearchMode::Movns;
  config.seed = 7;
  for (auto _ : state) benchmark::DoNotOptimize(mofs::run_batch(instances, config, 8, execution).size());
}

void BM_BatchSerial(benchmark::State& state) { batch(state, mofs::Execution::Serial); }
void BM_BatchParallel(benchmark::State& state) { batch(state, mofs::Execution::Parallel); }
BENCHMARK(BM_BatchSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BatchParallel)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
