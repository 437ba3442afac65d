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

#include "temporal/aggregation.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <unordered_map>

#include "temporal/error.hpp"
#include "temporal/kernels.hpp"
#include "temporal/partition.hpp"

namespace temporal {

std::string_view strategy_name(Strategy strategy) {
  return strategy == Strategy::kMajority ? "majority" : "bon";
}

Strategy parse_strategy(std::string_view name) {
  if (name == "majority") return Strategy::kMajority;
  if (name == "bon") return Strategy::kBestOfN;
  throw Error(ErrorCode::kInvalidConfig, "unknown strategy '" + std::string(name) + "'");
}

std::string_view tie_rule_name(TieRule rule) {
  return rule == TieRule::kUniformRandom ? "uniform" : "latest";
}

TieRule parse_tie_rule(std::string_view name) {
  if (name == "uniform") return TieRule::kUniformRandom;
  if (name == "latest") return TieRule::kPreferLatest;
  throw Error(ErrorCode::kInvalidConfig, "unknown tie rule '" + std::string(name) + "'");
}

AggregationCube AggregationCube::from_dataset(const EvalDataset& dataset, int t) {
  AggregationCube cube;
  cube.problems = dataset.num_problems();
  cube.checkpoints = t;
  cube.samples = dataset.samples_per_cell();
  const auto size = static_cast<std::size_t>(cube.problems) * t * cube.samples;
  cube.answer_id.resize(size);
  cube.correct.resize(size);
  if (dataset.has_rewards()) cube.reward.resize(size);

  std::unordered_map<std::string_view, std::uint32_t> ids;
  for (int p = 0; p < cube.problems; ++p) {
    ids.clear();
    for (int c = 0; c < t; ++c) {
      const auto records = dataset.cell(p, c);
      for (int s = 0; s < cube.samples; ++s) {
        const auto& r = records[s];
        const auto at = cube.index(p, c, s);
        cube.answer_id[at] = ids.emplace(r.answer, static_cast<std::uint32_t>(ids.size())).first->second;
        cube.correct[at] = r.correct ? 1 : 0;
        if (!cube.reward.empty()) cube.reward[at] = *r.reward;
      }
    }
    cube.max_distinct_answers = std::max(cube.max_distinct_answers, static_cast<std::uint32_t>(ids.size()));
  }
  return cube;
}

ReplicateSummary summarize_replicates(std::span<const double> accuracies) {
  ReplicateSummary summary;
  if (accuracies.empty()) return summary;
  const auto count = static_cast<double>(accuracies.size());
  double sum = 0.0;
  for (double a : accuracies) sum += a;
  summary.mean = sum / count;
  if (accuracies.size() > 1) {
    double squares = 0.0;
    for (double a : accuracies) squares += (a - summary.mean) * (a - summary.mean);
    summary.std_error = std::sqrt(squares / (count - 1.0)) / std::sqrt(count);
  }
  return summary;
}

namespace {

AggregationEstimate run(const EvalDataset& dataset, Strategy strategy, TieRule tie_rule, int k, int t,
                        int replicates, std::uint64_t seed) {
  if (replicates < 1)
    throw Error(ErrorCode::kInvalidReplicates, "replicates must be >= 1, got " + std::to_string(replicates));
  auto plan = balanced_partition(k, t);
  if (t > dataset.num_checkpoints())
    throw Error(ErrorCode::kNotEnoughCheckpoints, "t=" + std::to_string(t) + " exceeds " +
                                                      std::to_string(dataset.num_checkpoints()) + " checkpoints");
  for (int kj : plan.allocation)
    if (kj > dataset.samples_per_cell())
      throw Error(ErrorCode::kBudgetExceedsSamples,
                  "k_j=" + std::to_string(kj) + " exceeds N=" + std::to_string(dataset.samples_per_cell()) +
                      " (k=" + std::to_string(k) + ", t=" + std::to_string(t) + ")");
  if (strategy == Strategy::kBestOfN && !dataset.has_rewards())
    throw Error(ErrorCode::kMissingReward, "best-of-n needs a reward on every record");

  const auto cube = AggregationCube::from_dataset(dataset, t);
  const AggregationPlan aggregation{strategy, tie_rule, std::move(plan.allocation)};
  const auto accuracies = parallel::replicate_accuracies(cube, aggregation, replicates, seed);
  const auto summary = summarize_replicates(accuracies);
  return AggregationEstimate{k, t, strategy, summary.mean, replicates, summary.std_error};
}

}  // namespace

AggregationEstimate majority_at_k_given_t(const EvalDataset& dataset, int k, int t, int replicates,
                                          std::uint64_t seed, TieRule tie_rule) {
  return run(dataset, Strategy::kMajority, tie_rule, k, t, replicates, seed);
}

AggregationEstimate best_of_n_at_k_given_t(const EvalDataset& dataset, int k, int t, int replicates,
                                           std::uint64_t seed) {
  return run(dataset, Strategy::kBestOfN, TieRule::kUniformRandom, k, t, replicates, seed);
}

}  // namespace temporal
