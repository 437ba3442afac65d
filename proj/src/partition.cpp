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

#include "temporal/partition.hpp"

#include <string>

#include "temporal/error.hpp"

namespace temporal {

PartitionPlan balanced_partition(int k, int t) {
  if (k < 1 || t < 1)
    throw Error(ErrorCode::kInvalidBudget,
                "need k >= 1 and t >= 1, got k=" + std::to_string(k) + ", t=" + std::to_string(t));
  PartitionPlan plan;
  plan.k = k;
  plan.t = t;
  plan.allocation.assign(static_cast<std::size_t>(t), k / t);
  for (int j = 0; j < k % t; ++j) ++plan.allocation[j];
  plan.schedule.resize(static_cast<std::size_t>(k));
  for (int m = 0; m < k; ++m) plan.schedule[m] = m % t;
  return plan;
}

}  // namespace temporal
