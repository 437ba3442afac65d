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

#include "temporal/dynamics.hpp"

#include <string>

#include "temporal/error.hpp"

namespace temporal {
namespace {

double percent(int count, int total) { return 100.0 * count / total; }

Transition classify(bool before, bool after) {
  if (before && !after) return Transition::kForget;
  if (!before && after) return Transition::kImprove;
  return before ? Transition::kBothCorrect : Transition::kBothWrong;
}

}  // namespace

std::string_view transition_name(Transition transition) {
  switch (transition) {
    case Transition::kForget: return "Forget";
    case Transition::kImprove: return "Improve";
    case Transition::kBothCorrect: return "BothCorrect";
    case Transition::kBothWrong: return "BothWrong";
  }
  return "Unknown";
}

ForgettingReport forgetting_report(const TrajectoryMatrix& trajectories) {
  const int problems = trajectories.num_problems();
  if (problems == 0) throw Error(ErrorCode::kEmptyDataset, "trajectory has no problems");
  const int checkpoints = trajectories.num_checkpoints();

  ForgettingReport report;
  report.num_problems = problems;
  report.transitions.resize(static_cast<std::size_t>(problems));
  for (int i = 0; i < problems; ++i) {
    bool ever = false;
    bool forgot = false;
    auto& row = report.transitions[i];
    row.reserve(static_cast<std::size_t>(checkpoints - 1));
    for (int c = 0; c < checkpoints; ++c) {
      ever = ever || trajectories.correct(i, c);
      if (c > 0) {
        row.push_back(classify(trajectories.correct(i, c - 1), trajectories.correct(i, c)));
        forgot = forgot || row.back() == Transition::kForget;
      }
    }
    report.final_correct += trajectories.final_correct(i) ? 1 : 0;
    report.ever_correct += ever ? 1 : 0;
    report.ever_forgotten += forgot ? 1 : 0;
  }
  report.p_ft = percent(report.final_correct, problems);
  report.p_ecs = percent(report.ever_correct, problems);
  report.p_tfs = report.p_ecs - report.p_ft;
  report.ever_forgotten_pct = percent(report.ever_forgotten, problems);

  if (const auto& base = trajectories.base_correct()) {
    std::vector<bool> final(static_cast<std::size_t>(problems));
    for (int i = 0; i < problems; ++i) final[i] = trajectories.final_correct(i);
    int lost = 0;
    for (int i = 0; i < problems; ++i) lost += ((*base)[i] && !final[i]) ? 1 : 0;
    report.lost = lost;
    report.p_lost = lost_score(*base, final);
  }
  return report;
}

double lost_score(const std::vector<bool>& base, const std::vector<bool>& final) {
  if (base.size() != final.size())
    throw Error(ErrorCode::kShapeMismatch, "base has " + std::to_string(base.size()) + " problems, final has " +
                                               std::to_string(final.size()));
  if (base.empty()) throw Error(ErrorCode::kEmptyDataset, "no problems");
  int lost = 0;
  for (std::size_t i = 0; i < base.size(); ++i) lost += (base[i] && !final[i]) ? 1 : 0;
  return percent(lost, static_cast<int>(base.size()));
}

}  // namespace temporal
