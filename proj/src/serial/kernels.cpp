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

#include "temporal/kernels.hpp"

#include "../kernel_items.hpp"

namespace temporal::serial {

void pass_per_problem(const CountMatrix& counts, int n, std::span<const int> allocation, int first_column,
                      std::span<double> out) {
  for (int i = 0; i < counts.rows(); ++i)
    out[i] = detail::problem_pass(counts, i, n, allocation, first_column);
}

std::vector<double> replicate_accuracies(const AggregationCube& cube, const AggregationPlan& plan,
                                         int replicates, std::uint64_t seed) {
  std::vector<double> accuracies(static_cast<std::size_t>(replicates));
  detail::ReplicateScratch scratch(cube);
  for (int r = 0; r < replicates; ++r)
    accuracies[r] = detail::replicate_accuracy(cube, plan, seed, r, scratch);
  return accuracies;
}

void simulate_records(const TruePassRate& rates, int n, std::uint64_t seed, double collision_rate,
                      std::span<const std::string> problem_ids, std::span<GenerationRecord> out) {
  const auto cell_block = static_cast<std::size_t>(rates.num_checkpoints()) * n;
  for (int p = 0; p < rates.num_problems(); ++p)
    detail::simulate_problem(rates, p, n, seed, collision_rate, problem_ids[p],
                             out.subspan(p * cell_block, cell_block));
}

}  // namespace temporal::serial
