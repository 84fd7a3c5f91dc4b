/*
 * Copyright 2026 The lcasched Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <benchmark/benchmark.h>

#include "lcasched/baselines.hpp"
#include "lcasched/lca.hpp"
#include "lcasched/workload.hpp"

namespace {

lcasched::ProblemInstance paper_sized(std::size_t n_tasks) {
  return lcasched::make_instance(lcasched::generate_synthetic({n_tasks, 200.0, 500.0, 17}), 20,
                                 1000.0);
}

void BM_FitnessEvaluation(benchmark::State& state) {
  const auto inst = paper_sized(static_cast<std::size_t>(state.range(0)));
  lcasched::MakespanEvaluator evaluate(inst);
  const auto formation = lcasched::encode(lcasched::ljf(inst));
  for (auto _ : state) benchmark::DoNotOptimize(evaluate(formation));
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_FitnessEvaluation)->Arg(20)->Arg(100)->Arg(180);

void BM_Baseline(benchmark::State& state) {
  const auto inst = paper_sized(180);
  const auto kind = static_cast<lcasched::SchedulerKind>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(lcasched::run_baseline(kind, inst));
  state.SetLabel(std::string(lcasched::to_string(kind)));
}
BENCHMARK(BM_Baseline)->DenseRange(0, 2);

void BM_LcaRun(benchmark::State& state) {
  const auto inst = paper_sized(static_cast<std::size_t>(state.range(0)));
  lcasched::LcaParams params;
  params.seasons = 10;
  for (auto _ : state) benchmark::DoNotOptimize(lcasched::run(params, inst).makespan_s);
}
BENCHMARK(BM_LcaRun)->Arg(20)->Arg(180)->Unit(benchmark::kMillisecond);

void BM_RoundRobin(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(lcasched::round_robin(state.range(0)));
}
BENCHMARK(BM_RoundRobin)->Arg(20)->Arg(100);

}  // namespace

BENCHMARK_MAIN();
