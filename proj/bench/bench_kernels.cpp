// Copyright 2026 The Temporal Eval Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Serial reference vs OpenMP kernels on simulated data.
//
//   ./bench_kernels --benchmark_filter=Pass

#include <benchmark/benchmark.h>

#include <string>
#include <vector>

#include "temporal/kernels.hpp"
#include "temporal/partition.hpp"
#include "temporal/simulator.hpp"

namespace {

using namespace temporal;

SimConfig config_for(int problems) {
  SimConfig config;
  config.num_problems = problems;
  config.num_checkpoints = 8;
  config.samples_per_cell = 64;
  config.rate_model = RateModel::kOscillating;
  config.base_rate = 0.3;
  config.amplitude = 0.2;
  config.period = 4.0;
  config.collision_rate = 0.2;
  config.seed = 1;
  return config;
}

template <auto Kernel>
void BM_PassPerProblem(benchmark::State& state) {
  const auto dataset = simulate(config_for(static_cast<int>(state.range(0))));
  const auto plan = balanced_partition(64, 8);
  std::vector<double> out(static_cast<std::size_t>(dataset.num_problems()));
  for (auto _ : state) {
    Kernel(dataset.correct_counts(), 64, plan.allocation, 0, out);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <auto Kernel>
void BM_MajorityReplicates(benchmark::State& state) {
  const auto dataset = simulate(config_for(static_cast<int>(state.range(0))));
  const auto cube = AggregationCube::from_dataset(dataset, 8);
  const AggregationPlan plan{Strategy::kMajority, TieRule::kUniformRandom, balanced_partition(32, 8).allocation};
  for (auto _ : state) {
    auto accuracies = Kernel(cube, plan, 64, 7);
    benchmark::DoNotOptimize(accuracies.data());
  }
  state.SetItemsProcessed(state.iterations() * 64);
}

template <auto Kernel>
void BM_SimulateRecords(benchmark::State& state) {
  const auto config = config_for(static_cast<int>(state.range(0)));
  const auto rates = simulate_rates(config);
  std::vector<std::string> ids;
  for (int p = 0; p < config.num_problems; ++p) ids.push_back("p" + std::to_string(p));
  std::vector<GenerationRecord> out(static_cast<std::size_t>(config.num_problems) * 8 * 64);
  for (auto _ : state) {
    Kernel(rates, 64, 3, 0.2, ids, out);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(out.size()));
}

BENCHMARK(BM_PassPerProblem<serial::pass_per_problem>)->Name("Pass/serial")->Arg(1024)->Arg(16384);
BENCHMARK(BM_PassPerProblem<parallel::pass_per_problem>)->Name("Pass/parallel")->Arg(1024)->Arg(16384)->UseRealTime();
BENCHMARK(BM_MajorityReplicates<serial::replicate_accuracies>)->Name("Majority/serial")->Arg(500);
BENCHMARK(BM_MajorityReplicates<parallel::replicate_accuracies>)->Name("Majority/parallel")->Arg(500)->UseRealTime();
BENCHMARK(BM_SimulateRecords<serial::simulate_records>)->Name("Simulate/serial")->Arg(256);
BENCHMARK(BM_SimulateRecords<parallel::simulate_records>)->Name("Simulate/parallel")->Arg(256)->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
