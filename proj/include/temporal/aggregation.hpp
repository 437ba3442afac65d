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

// Maj@k|t and BoN@k|t estimated by Monte Carlo resampling. Each replicate
// draws the round-robin allocation without replacement from the t latest
// checkpoints of every problem, applies the selection rule, and records the
// fraction of problems whose selected answer is correct.

#pragma once

#include <cstdint>
#include <string_view>

#include "temporal/dataset.hpp"

namespace temporal {

enum class Strategy { kMajority, kBestOfN };

// How a majority vote between equally frequent answers is settled.
enum class TieRule {
  kUniformRandom,  // uniform among tied answers, from the replicate's stream
  kPreferLatest,   // answer first drawn from the most recent checkpoint
};

std::string_view strategy_name(Strategy strategy);
Strategy parse_strategy(std::string_view name);
std::string_view tie_rule_name(TieRule rule);
TieRule parse_tie_rule(std::string_view name);

struct AggregationEstimate {
  int k = 0;
  int t = 0;
  Strategy strategy = Strategy::kMajority;
  double value = 0.0;      // mean replicate accuracy
  int replicates = 0;
  double std_error = 0.0;  // sample sd of replicate accuracies / sqrt(R)
};

// Votes are pooled over all k drawn answers (byte-exact string equality).
// The winner is correct when a strict majority of its drawn instances are
// marked correct.
AggregationEstimate majority_at_k_given_t(const EvalDataset& dataset, int k, int t, int replicates,
                                          std::uint64_t seed, TieRule tie_rule = TieRule::kUniformRandom);

// Picks the drawn record with the highest reward; equal rewards go to the
// lowest (checkpoint, sample).
AggregationEstimate best_of_n_at_k_given_t(const EvalDataset& dataset, int k, int t, int replicates,
                                           std::uint64_t seed);

}  // namespace temporal
