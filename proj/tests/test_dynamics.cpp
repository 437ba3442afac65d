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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <random>

#include "temporal/dynamics.hpp"
#include "temporal/error.hpp"

using namespace temporal;

namespace {

TrajectoryMatrix make_traj(const std::vector<std::vector<int>>& rows,
                           std::optional<std::vector<bool>> base = std::nullopt) {
  std::vector<std::string> problems;
  Grid<std::uint8_t> grid(static_cast<int>(rows.size()), static_cast<int>(rows.front().size()));
  for (std::size_t p = 0; p < rows.size(); ++p) {
    problems.push_back("q" + std::to_string(p));
    for (std::size_t c = 0; c < rows[p].size(); ++c) grid(static_cast<int>(p), static_cast<int>(c)) = rows[p][c];
  }
  return TrajectoryMatrix(std::move(problems), std::move(grid), std::move(base));
}

// `problems` trajectories over 4 checkpoints: `final` correct at the end,
// `ever` - `final` correct only mid-way, the rest never correct.
TrajectoryMatrix with_marginals(int problems, int ever, int final) {
  std::vector<std::vector<int>> rows;
  for (int i = 0; i < problems; ++i) {
    if (i < final) rows.push_back({0, 1, 0, 1});
    else if (i < ever) rows.push_back({0, 1, 1, 0});
    else rows.push_back({0, 0, 0, 0});
  }
  return make_traj(rows);
}

double one_decimal(double v) { return std::round(v * 10.0) / 10.0; }

}  // namespace

TEST_CASE("hand-traced four-step trajectory") {
  const auto r = forgetting_report(make_traj({{1, 0, 1, 0}}));
  CHECK(r.p_ecs == 100.0);
  CHECK(r.p_ft == 0.0);
  CHECK(r.p_tfs == 100.0);
  CHECK(r.ever_forgotten == 1);
  CHECK(r.transitions[0] ==
        std::vector<Transition>{Transition::kForget, Transition::kImprove, Transition::kForget});
  CHECK_FALSE(r.p_lost.has_value());
}

TEST_CASE("all four transition kinds") {
  const auto r = forgetting_report(make_traj({{1, 1, 0, 0, 1}}));
  CHECK(r.transitions[0] == std::vector<Transition>{Transition::kBothCorrect, Transition::kForget,
                                                     Transition::kBothWrong, Transition::kImprove});
  CHECK(transition_name(Transition::kBothWrong) == "BothWrong");
}

TEST_CASE("small-run anchor: 76.7 ever correct, 30.0 final") {
  // 30 AIME problems: 23 ever correct, 9 correct at the end.
  const auto r = forgetting_report(with_marginals(30, 23, 9));
  CHECK(one_decimal(r.p_ecs) == 76.7);
  CHECK(one_decimal(r.p_ft) == 30.0);
  CHECK(one_decimal(r.p_tfs) == 46.7);
  CHECK(r.p_tfs == r.p_ecs - r.p_ft);
  CHECK(r.forgotten() == 14);
}

TEST_CASE("large-run anchor: 73.8 final, 89.6 ever correct, 15.8 forgotten") {
  const auto r = forgetting_report(with_marginals(500, 448, 369));
  CHECK(one_decimal(r.p_ft) == 73.8);
  CHECK(one_decimal(r.p_ecs) == 89.6);
  CHECK(one_decimal(r.p_tfs) == 15.8);
  CHECK(r.p_tfs == r.p_ecs - r.p_ft);
}

TEST_CASE("single checkpoint is degenerate but legal") {
  const auto r = forgetting_report(make_traj({{1}, {0}, {1}}));
  CHECK(r.p_ecs == r.p_ft);
  CHECK(r.p_tfs == 0.0);
  for (const auto& row : r.transitions) CHECK(row.empty());
}

TEST_CASE("empty trajectory is rejected") {
  CHECK_THROWS_WITH_AS(forgetting_report(TrajectoryMatrix({}, Grid<std::uint8_t>(0, 3))),
                       doctest::Contains("EmptyDataset"), Error);
}

TEST_CASE("lost score") {
  CHECK(lost_score({false, false, false}, {true, false, true}) == 0.0);
  CHECK(lost_score({true, false, true}, {true, false, true}) == 0.0);
  // Problems 0 and 3 regress: 2 of 4.
  CHECK(lost_score({true, true, false, true}, {false, true, false, false}) == 50.0);
  CHECK_THROWS_WITH_AS(lost_score({true}, {true, false}), doctest::Contains("ShapeMismatch"), Error);
}

TEST_CASE("p_lost from base vector uses only the final column") {
  const auto a = forgetting_report(make_traj({{1, 0}, {0, 1}, {1, 1}}, std::vector<bool>{true, true, false}));
  const auto b = forgetting_report(make_traj({{0, 0}, {1, 1}, {0, 1}}, std::vector<bool>{true, true, false}));
  REQUIRE(a.p_lost.has_value());
  CHECK(*a.p_lost == doctest::Approx(100.0 / 3.0));
  CHECK(a.p_lost == b.p_lost);
  CHECK(a.lost == 1);
}

TEST_CASE("random trajectories: identities and order invariance") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    const int problems = 1 + static_cast<int>(rng() % 40);
    const int checkpoints = 1 + static_cast<int>(rng() % 9);
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(problems));
    for (auto& row : rows)
      for (int c = 0; c < checkpoints; ++c) row.push_back(static_cast<int>(rng() % 2));
    std::vector<bool> base;
    for (int i = 0; i < problems; ++i) base.push_back(rng() % 2 == 0);
    const auto r = forgetting_report(make_traj(rows, base));

    CHECK(r.p_tfs == r.p_ecs - r.p_ft);
    CHECK(std::abs(r.p_tfs - 100.0 * r.forgotten() / problems) < 1e-12);
    CHECK((0.0 <= r.p_ft && r.p_ft <= r.p_ecs && r.p_ecs <= 100.0));
    for (int i = 0; i < problems; ++i) {
      const bool ever = std::find(rows[i].begin(), rows[i].end(), 1) != rows[i].end();
      const bool forgotten_at_end = ever && rows[i].back() == 0;
      const bool has_forget = std::find(r.transitions[i].begin(), r.transitions[i].end(), Transition::kForget) !=
                              r.transitions[i].end();
      if (forgotten_at_end) CHECK(has_forget);
      CHECK(r.transitions[i].size() == static_cast<std::size_t>(checkpoints - 1));
    }

    std::reverse(rows.begin(), rows.end());
    std::reverse(base.begin(), base.end());
    const auto flipped = forgetting_report(make_traj(rows, base));
    CHECK(flipped.p_ft == r.p_ft);
    CHECK(flipped.p_ecs == r.p_ecs);
    CHECK(flipped.p_tfs == r.p_tfs);
    CHECK(flipped.ever_forgotten_pct == r.ever_forgotten_pct);
    CHECK(flipped.p_lost == r.p_lost);
  }
}
