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

#include "temporal/error.hpp"

namespace temporal {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kDuplicateRecord: return "DuplicateRecord";
    case ErrorCode::kRaggedCell: return "RaggedCell";
    case ErrorCode::kMissingCell: return "MissingCell";
    case ErrorCode::kNotGreedy: return "NotGreedy";
    case ErrorCode::kInvalidBudget: return "InvalidBudget";
    case ErrorCode::kInvalidCounts: return "InvalidCounts";
    case ErrorCode::kBudgetExceedsSamples: return "BudgetExceedsSamples";
    case ErrorCode::kNotEnoughCheckpoints: return "NotEnoughCheckpoints";
    case ErrorCode::kInvalidReplicates: return "InvalidReplicates";
    case ErrorCode::kMissingReward: return "MissingReward";
    case ErrorCode::kEmptyDataset: return "EmptyDataset";
    case ErrorCode::kShapeMismatch: return "ShapeMismatch";
    case ErrorCode::kInvalidConfig: return "InvalidConfig";
    case ErrorCode::kPoolMismatch: return "PoolMismatch";
    case ErrorCode::kIoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace temporal
