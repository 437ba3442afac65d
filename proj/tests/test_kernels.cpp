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

// Serial reference vs OpenMP kernels: results must agree bit for bit.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "temporal/kernels.hpp"
#include "temporal/partition.hpp"
#include "temporal/simulator.hpp"

using namespace temporal;

namespace {

EvalDataset sample_dataset(int problems, int checkpoints, int n, std::uint64_t seed) {
  SimConfig config;
  config.num_problems = problems;
  config.num_checkpoints = checkpoints;
  config.samples_per_cell = n;
  config.collision_rate = 0.3;
  config.seed = seed;
  return simulate(config);
}

}  // namespace

TEST_CASE("pass_per_problem: serial == parallel") {
  set_num_threads(4);
  for (int problems : {1, 17, kParallelMinProblems, 3 * kParallelMinProblems + 5}) {
    const auto d = sample_dataset(problems, 6, 16, static_cast<std::uint64_t>(problems));
    for (auto [k, t] : {std::pair{1, 1}, std::pair{16, 1}, std::pair{13, 4}, std::pair{48, 6}}) {
      const auto plan = balanced_partition(k, t);
      std::vector<double> a(static_cast<std::size_t>(problems)), b(a.size());
      serial::pass_per_problem(d.correct_counts(), 16, plan.allocation, 0, a);
      parallel::pass_per_problem(d.correct_counts(), 16, plan.allocation, 0, b);
      CHECK(a == b);
    }
  }
}

TEST_CASE("replicate_accuracies: serial == parallel for both strategies and tie rules") {
  const auto d = sample_dataset(40, 4, 8, 99);
  for (int threads : {1, 2, 4}) {
    set_num_threads(threads);
    for (auto strategy : {Strategy::kMajority, Strategy::kBestOfN})
      for (auto rule : {TieRule::kUniformRandom, TieRule::kPreferLatest}) {
        const auto cube = AggregationCube::from_dataset(d, 3);
        const AggregationPlan plan{strategy, rule, balanced_partition(7, 3).allocation};
        CHECK(serial::replicate_accuracies(cube, plan, 777, 5) == parallel::replicate_accuracies(cube, plan, 777, 5));
      }
  }
}

TEST_CASE("simulate_records: serial == parallel") {
  set_num_threads(4);
  SimConfig config;
  config.num_problems = 2 * kParallelMinProblems + 3;
  config.num_checkpoints = 3;
  config.rate_model = RateModel::kBeta;
  config.alpha = 0.5;
  config.beta = 2.0;
  config.seed = 6;
  const auto rates = simulate_rates(config);
  std::vector<std::string> ids;
  for (int p = 0; p < config.num_problems; ++p) ids.push_back("p" + std::to_string(p));
  const auto size = static_cast<std::size_t>(config.num_problems) * 3 * 5;
  std::vector<GenerationRecord> a(size), b(size);
  serial::simulate_records(rates, 5, 11, 0.2, ids, a);
  parallel::simulate_records(rates, 5, 11, 0.2, ids, b);
  CHECK(a == b);
}

TEST_CASE("summaries") {
  const std::vector<double> xs{0.25, 0.5, 0.75};
  const auto s = summarize_replicates(xs);
  CHECK(s.mean == 0.5);
  CHECK(s.std_error == doctest::Approx(0.25 / std::sqrt(3.0)));
  CHECK(summarize_replicates(std::vector<double>{0.4}).std_error == 0.0);
}

TEST_CASE("cube interns answers per problem") {
  const auto d = sample_dataset(5, 3, 4, 1);
  const auto cube = AggregationCube::from_dataset(d, 2);
  CHECK(cube.checkpoints == 2);
  for (int p = 0; p < cube.problems; ++p)
    for (int c = 0; c < 2; ++c)
      for (int s = 0; s < 4; ++s)
        for (int c2 = 0; c2 < 2; ++c2)
          for (int s2 = 0; s2 < 4; ++s2) {
            const bool same = d.cell(p, c)[s].answer == d.cell(p, c2)[s2].answer;
            CHECK(same == (cube.answer_id[cube.index(p, c, s)] == cube.answer_id[cube.index(p, c2, s2)]));
          }
}
