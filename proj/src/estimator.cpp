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

#include "temporal/estimator.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "temporal/error.hpp"
#include "temporal/kernels.hpp"
#include "temporal/partition.hpp"

namespace temporal {
namespace {

double mean_in_order(const std::vector<double>& values) {
  double sum = 0.0;
  for (double v : values) sum += v;
  return sum / static_cast<double>(values.size());
}

void check_budget(const PartitionPlan& plan, int n) {
  for (std::size_t j = 0; j < plan.allocation.size(); ++j) {
    if (plan.allocation[j] > n)
      throw Error(ErrorCode::kBudgetExceedsSamples,
                  "checkpoint " + std::to_string(j) + " needs " + std::to_string(plan.allocation[j]) +
                      " draws but only " + std::to_string(n) + " samples exist (k=" +
                      std::to_string(plan.k) + ", t=" + std::to_string(plan.t) + ")");
  }
}

}  // namespace

TruePassRate::TruePassRate(Grid<double> rates) : rates_(std::move(rates)) {
  for (double r : rates_.data())
    if (!(r >= 0.0 && r <= 1.0)) throw Error(ErrorCode::kInvalidConfig, "pass rate outside [0, 1]");
}

double survival_ratio(int n, int c, int kj) {
  if (n < 0 || c < 0 || c > n || kj < 0 || kj > n)
    throw Error(ErrorCode::kInvalidCounts, "need 0 <= C <= N and 0 <= k_j <= N, got N=" + std::to_string(n) +
                                               ", C=" + std::to_string(c) + ", k_j=" + std::to_string(kj));
  double ratio = 1.0;
  for (int m = 0; m < kj; ++m) {
    const int misses = n - c - m;
    if (misses <= 0) return 0.0;
    ratio *= static_cast<double>(misses) / static_cast<double>(n - m);
  }
  return ratio;
}

PassEstimate pass_at_k(const EvalDataset& dataset, int k, int checkpoint) {
  if (checkpoint < 0 || checkpoint >= dataset.num_checkpoints())
    throw Error(ErrorCode::kNotEnoughCheckpoints, "checkpoint " + std::to_string(checkpoint) +
                                                      " out of range for " +
                                                      std::to_string(dataset.num_checkpoints()) + " checkpoints");
  const auto plan = balanced_partition(k, 1);
  check_budget(plan, dataset.samples_per_cell());
  PassEstimate estimate{k, 1, 0.0, std::vector<double>(static_cast<std::size_t>(dataset.num_problems()))};
  parallel::pass_per_problem(dataset.correct_counts(), dataset.samples_per_cell(), plan.allocation, checkpoint,
                             estimate.per_problem);
  estimate.value = mean_in_order(estimate.per_problem);
  return estimate;
}

PassEstimate pass_at_k_given_t(const EvalDataset& dataset, int k, int t) {
  return pass_at_k_given_t(dataset.correct_counts(), dataset.samples_per_cell(), k, t);
}

PassEstimate pass_at_k_given_t(const CountMatrix& counts, int samples_per_cell, int k, int t) {
  const auto plan = balanced_partition(k, t);
  if (t > counts.cols())
    throw Error(ErrorCode::kNotEnoughCheckpoints,
                "t=" + std::to_string(t) + " exceeds " + std::to_string(counts.cols()) + " checkpoints");
  check_budget(plan, samples_per_cell);
  if (counts.rows() == 0) throw Error(ErrorCode::kEmptyDataset, "no problems");
  PassEstimate estimate{k, t, 0.0, std::vector<double>(static_cast<std::size_t>(counts.rows()))};
  parallel::pass_per_problem(counts, samples_per_cell, plan.allocation, 0, estimate.per_problem);
  estimate.value = mean_in_order(estimate.per_problem);
  return estimate;
}

PassEstimate exact_pass_at_k_given_t(const TruePassRate& rates, int k, int t) {
  const auto plan = balanced_partition(k, t);
  if (t > rates.num_checkpoints())
    throw Error(ErrorCode::kNotEnoughCheckpoints,
                "t=" + std::to_string(t) + " exceeds " + std::to_string(rates.num_checkpoints()) + " checkpoints");
  if (rates.num_problems() == 0) throw Error(ErrorCode::kEmptyDataset, "no problems");
  PassEstimate estimate{k, t, 0.0, std::vector<double>(static_cast<std::size_t>(rates.num_problems()))};
  for (int i = 0; i < rates.num_problems(); ++i) {
    double miss = 1.0;
    for (int j = 0; j < t; ++j) miss *= std::pow(1.0 - rates(i, j), plan.allocation[j]);
    estimate.per_problem[i] = 1.0 - miss;
  }
  estimate.value = mean_in_order(estimate.per_problem);
  return estimate;
}

}  // namespace temporal
