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

// Forgetting analytics over greedy-decoding trajectories.
//
// All scores are percentages of the problem count. Each is formed once from
// an integer count, and p_tfs is p_ecs - p_ft, so the identity between the
// three holds bit-for-bit.

#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "temporal/dataset.hpp"

namespace temporal {

enum class Transition { kForget, kImprove, kBothCorrect, kBothWrong };

std::string_view transition_name(Transition transition);

struct ForgettingReport {
  int num_problems = 0;
  int final_correct = 0;   // correct at the last checkpoint
  int ever_correct = 0;    // correct at one or more checkpoints
  int ever_forgotten = 0;  // at least one Forget transition
  std::optional<int> lost;

  double p_ft = 0.0;
  double p_ecs = 0.0;
  double p_tfs = 0.0;
  double ever_forgotten_pct = 0.0;
  std::optional<double> p_lost;

  // One row per problem, T - 1 transitions in chronological order.
  std::vector<std::vector<Transition>> transitions;

  int forgotten() const noexcept { return ever_correct - final_correct; }
};

ForgettingReport forgetting_report(const TrajectoryMatrix& trajectories);

// Percentage of problems correct under `base` but wrong under `final`.
double lost_score(const std::vector<bool>& base, const std::vector<bool>& final);

}  // namespace temporal
