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

// Per-item work shared by the serial and OpenMP kernel loops.

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "temporal/kernels.hpp"

namespace temporal::detail {

// Per-thread buffers for one replicate.
struct ReplicateScratch {
  std::vector<int> order;
  std::vector<int> draw_checkpoint;
  std::vector<int> draw_sample;
  std::vector<int> votes;
  std::vector<int> correct_votes;
  std::vector<std::uint32_t> touched;
  std::vector<std::uint32_t> tied;

  explicit ReplicateScratch(const AggregationCube& cube);
};

double replicate_accuracy(const AggregationCube& cube, const AggregationPlan& plan, std::uint64_t seed,
                          std::int64_t replicate, ReplicateScratch& scratch);

double problem_pass(const CountMatrix& counts, int problem, int n, std::span<const int> allocation,
                    int first_column);

void simulate_problem(const TruePassRate& rates, int problem, int n, std::uint64_t seed, double collision_rate,
                      const std::string& problem_id, std::span<GenerationRecord> out);

}  // namespace temporal::detail
