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

// Data-parallel kernels. Every kernel has a single-threaded reference in
// temporal::serial and an OpenMP version in temporal::parallel; for the same
// inputs the two produce bit-identical results, because work items are
// seeded independently and reductions always run in index order.

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "temporal/aggregation.hpp"
#include "temporal/dataset.hpp"
#include "temporal/estimator.hpp"
#include "temporal/grid.hpp"

namespace temporal {

// Dense view of the t latest checkpoints, with answers interned per problem.
struct AggregationCube {
  int problems = 0;
  int checkpoints = 0;
  int samples = 0;
  std::uint32_t max_distinct_answers = 0;
  std::vector<std::uint32_t> answer_id;
  std::vector<std::uint8_t> correct;
  std::vector<double> reward;  // empty when the dataset has no rewards

  static AggregationCube from_dataset(const EvalDataset& dataset, int t);

  std::size_t index(int p, int c, int s) const {
    return (static_cast<std::size_t>(p) * checkpoints + c) * samples + s;
  }
};

struct AggregationPlan {
  Strategy strategy = Strategy::kMajority;
  TieRule tie_rule = TieRule::kUniformRandom;
  std::vector<int> allocation;
};

// Mean and standard error of replicate accuracies, summed in index order.
struct ReplicateSummary {
  double mean = 0.0;
  double std_error = 0.0;
};
ReplicateSummary summarize_replicates(std::span<const double> accuracies);

// Problems below this count are not worth forking threads for.
inline constexpr int kParallelMinProblems = 256;

int max_threads();
void set_num_threads(int threads);

namespace serial {

// out[i] = 1 - prod_j survival_ratio(n, counts(i, first_column + j), allocation[j]).
void pass_per_problem(const CountMatrix& counts, int n, std::span<const int> allocation,
                      int first_column, std::span<double> out);

std::vector<double> replicate_accuracies(const AggregationCube& cube, const AggregationPlan& plan,
                                         int replicates, std::uint64_t seed);

// Fills out (canonical cube order) with simulated records.
void simulate_records(const TruePassRate& rates, int n, std::uint64_t seed, double collision_rate,
                      std::span<const std::string> problem_ids, std::span<GenerationRecord> out);

}  // namespace serial

namespace parallel {

void pass_per_problem(const CountMatrix& counts, int n, std::span<const int> allocation,
                      int first_column, std::span<double> out);

std::vector<double> replicate_accuracies(const AggregationCube& cube, const AggregationPlan& plan,
                                         int replicates, std::uint64_t seed);

void simulate_records(const TruePassRate& rates, int n, std::uint64_t seed, double collision_rate,
                      std::span<const std::string> problem_ids, std::span<GenerationRecord> out);

}  // namespace parallel
}  // namespace temporal
