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

#include <stdexcept>
#include <string>
#include <string_view>

namespace temporal {

enum class ErrorCode {
  kParseError,
  kDuplicateRecord,
  kRaggedCell,
  kMissingCell,
  kNotGreedy,
  kInvalidBudget,
  kInvalidCounts,
  kBudgetExceedsSamples,
  kNotEnoughCheckpoints,
  kInvalidReplicates,
  kMissingReward,
  kEmptyDataset,
  kShapeMismatch,
  kInvalidConfig,
  kPoolMismatch,
  kIoError,
};

std::string_view error_code_name(ErrorCode code);

// All library failures are reported through this type. Everything except
// kIoError is a validation failure of caller-supplied data or parameters.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code),
        detail_(message) {}

  ErrorCode code() const noexcept { return code_; }
  // Message without the error-code prefix.
  const std::string& detail() const noexcept { return detail_; }
  bool is_io() const noexcept { return code_ == ErrorCode::kIoError; }

 private:
  ErrorCode code_;
  std::string detail_;
};

}  // namespace temporal
