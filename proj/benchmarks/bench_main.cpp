#include <benchmark/benchmark.h>

#include "ira/estimators.hpp"
#include "ira/gaussian.hpp"
#include "ira/generator.hpp"
#include "ira/harness.hpp"
#include "ira/inference.hpp"

namespace {

void BM_EstimateAll(benchmark::State& state) {
  const ira::ContingencyTable t{40, 5, 15, 40};
  for (auto _ : state) benchmark::DoNotOptimize(ira::estimate_all(t));
}
BENCHMARK(BM_EstimateAll);

void BM_ReportAll(benchmark::State& state) {
  const ira::ContingencyTable t{40, 5, 15, 40};
  for (auto _ : state) benchmark::DoNotOptimize(ira::report_all(t));
}
BENCHMARK(BM_ReportAll);

void BM_UpperOrthant(benchmark::State& state) {
  const ira::BvnSpec s{0.3, -0.8, static_cast<double>(state.range(0)) / 100.0};
  for (auto _ : state) benchmark::DoNotOptimize(ira::bvn_upper_orthant(s));
}
BENCHMARK(BM_UpperOrthant)->Arg(10)->Arg(50)->Arg(90)->Arg(99);

void BM_SimulateStudy(benchmark::State& state) {
  const ira::Scenario s{0.5, 0.5, 0.5, 0.3, 0.3, 0.5, 0.5};
  const ira::ScenarioSampler sampler(s);
  std::uint64_t rep = 0;
  for (auto _ : state) {
    ira::RngStream rng(1, 0, rep++ & 0xffffffffu);
    benchmark::DoNotOptimize(sampler.study(state.range(0), rng));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SimulateStudy)->Arg(25)->Arg(200);

void BM_RunSetting(benchmark::State& state) {
  const ira::Scenario s{0.5, 0.5, 0.5, 0.3, 0.3, 0.5, 0.5};
  for (auto _ : state) benchmark::DoNotOptimize(ira::run_setting(s, state.range(0), 100, 1, 0));
}
BENCHMARK(BM_RunSetting)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
