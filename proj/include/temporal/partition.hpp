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

#pragma once

#include <vector>

namespace temporal {

// Split of a k-sample budget over the t latest checkpoints. Index j counts
// from the latest checkpoint (j = 0) backwards.
struct PartitionPlan {
  int k = 0;
  int t = 0;
  std::vector<int> allocation;  // k_j, length t
  std::vector<int> schedule;    // checkpoint of each draw, length k

  bool operator==(const PartitionPlan&) const = default;
};

// Round-robin allocation: draw m goes to checkpoint m mod t, so the first
// (k mod t) checkpoints receive floor(k/t) + 1 draws and the rest floor(k/t).
// t > k is allowed and leaves the oldest t - k checkpoints with zero draws.
PartitionPlan balanced_partition(int k, int t);

}  // namespace temporal
