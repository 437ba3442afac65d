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

// Synthetic checkpoint datasets with known per-cell pass rates.

#pragma once

#include <cstdint>
#include <string_view>

#include "temporal/dataset.hpp"
#include "temporal/estimator.hpp"

namespace temporal {

enum class RateModel {
  kIidUniform,   // r ~ U[0, 1]
  kBeta,         // r ~ Beta(alpha, beta)
  kOscillating,  // r = clamp(base + amplitude * sin(2 pi (j + phase_i) / period))
};

std::string_view rate_model_name(RateModel model);
RateModel parse_rate_model(std::string_view name);

struct SimConfig {
  int num_problems = 1;
  int num_checkpoints = 1;
  int samples_per_cell = 1;
  RateModel rate_model = RateModel::kIidUniform;
  double alpha = 1.0;
  double beta = 1.0;
  double base_rate = 0.5;
  double amplitude = 0.0;
  double period = 1.0;
  // Probability that an incorrect sample answers "WRONG-COMMON" instead of a
  // per-draw unique wrong answer.
  double collision_rate = 0.0;
  std::uint64_t seed = 0;

  // Throws InvalidConfig.
  void validate() const;
};

// Rows are problems, columns checkpoints in sampling order (0 = latest).
// Phases of the oscillating model are drawn per problem from U[0, period).
TruePassRate simulate_rates(const SimConfig& config);

// N Bernoulli(r_ij) samples per cell. Correct samples answer "GOLD" with
// reward ~ U[0.6, 1.0]; incorrect ones answer "WRONG-<j*N+s>" (unique within
// the problem) with reward ~ U[0.0, 0.7]. Problem ids are "p<i>".
EvalDataset simulate_dataset(const TruePassRate& rates, int samples_per_cell, std::uint64_t seed,
                             double collision_rate = 0.0);

// Convenience: rates and samples from one config.
EvalDataset simulate(const SimConfig& config);

}  // namespace temporal
