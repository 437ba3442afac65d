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

// Small dataset builders shared by the test binaries.

#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "temporal/dataset.hpp"
#include "temporal/grid.hpp"

namespace temporal::testing {

struct Sample {
  std::string answer;
  bool correct = false;
  std::optional<double> reward;
};

// cells[p][c] holds the samples of problem "p<p>" at checkpoint c.
inline EvalDataset make_dataset(const std::vector<std::vector<std::vector<Sample>>>& cells) {
  std::vector<GenerationRecord> records;
  for (std::size_t p = 0; p < cells.size(); ++p)
    for (std::size_t c = 0; c < cells[p].size(); ++c)
      for (std::size_t s = 0; s < cells[p][c].size(); ++s) {
        const auto& x = cells[p][c][s];
        records.push_back(GenerationRecord{"p" + std::to_string(p), static_cast<int>(c), static_cast<int>(s),
                                           x.answer, x.correct, x.reward});
      }
  return EvalDataset::from_records(std::move(records));
}

// First C samples of each cell correct (answer "GOLD"), the rest distinct.
inline EvalDataset dataset_from_counts(const CountMatrix& counts, int n) {
  std::vector<GenerationRecord> records;
  std::vector<std::string> problems;
  for (int p = 0; p < counts.rows(); ++p) {
    problems.push_back("p" + std::to_string(p));
    for (int c = 0; c < counts.cols(); ++c)
      for (int s = 0; s < n; ++s) {
        const bool ok = s < counts(p, c);
        records.push_back(GenerationRecord{problems.back(), c, s, ok ? "GOLD" : "W" + std::to_string(c * n + s), ok,
                                           0.5});
      }
  }
  return EvalDataset::from_cube(std::move(problems), counts.cols(), n, std::move(records));
}

inline std::string line(const std::string& problem, const std::string& checkpoint, int sample,
                        const std::string& answer, bool correct) {
  return "{\"problem_id\":\"" + problem + "\",\"checkpoint\":\"" + checkpoint + "\",\"sample\":" +
         std::to_string(sample) + ",\"answer\":\"" + answer + "\",\"correct\":" + (correct ? "true" : "false") + "}";
}

}  // namespace temporal::testing
