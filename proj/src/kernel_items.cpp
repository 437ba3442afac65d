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

#include "kernel_items.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "temporal/rng.hpp"

namespace temporal::detail {

ReplicateScratch::ReplicateScratch(const AggregationCube& cube)
    : order(static_cast<std::size_t>(cube.samples)),
      votes(cube.max_distinct_answers, 0),
      correct_votes(cube.max_distinct_answers, 0) {}

namespace {

// Draws allocation[c] samples without replacement from each checkpoint c
// (partial Fisher-Yates) into scratch.draw_checkpoint / draw_sample.
void draw_problem(const AggregationCube& cube, std::span<const int> allocation, std::mt19937_64& rng,
                  ReplicateScratch& scratch) {
  scratch.draw_checkpoint.clear();
  scratch.draw_sample.clear();
  const int n = cube.samples;
  for (int c = 0; c < static_cast<int>(allocation.size()); ++c) {
    const int kj = allocation[c];
    if (kj == 0) continue;
    std::iota(scratch.order.begin(), scratch.order.end(), 0);
    for (int m = 0; m < kj; ++m) {
      std::uniform_int_distribution<int> pick(m, n - 1);
      std::swap(scratch.order[m], scratch.order[pick(rng)]);
      scratch.draw_checkpoint.push_back(c);
      scratch.draw_sample.push_back(scratch.order[m]);
    }
  }
}

bool majority_correct(const AggregationCube& cube, int problem, TieRule tie_rule, std::mt19937_64& rng,
                      ReplicateScratch& s) {
  s.touched.clear();
  const auto draws = s.draw_sample.size();
  for (std::size_t d = 0; d < draws; ++d) {
    const auto at = cube.index(problem, s.draw_checkpoint[d], s.draw_sample[d]);
    const auto id = cube.answer_id[at];
    if (s.votes[id] == 0) s.touched.push_back(id);
    ++s.votes[id];
    s.correct_votes[id] += cube.correct[at];
  }
  int best = 0;
  for (auto id : s.touched) best = std::max(best, s.votes[id]);
  s.tied.clear();
  // touched is in first-draw order, and draws run latest checkpoint first.
  for (auto id : s.touched)
    if (s.votes[id] == best) s.tied.push_back(id);

  std::uint32_t winner = s.tied.front();
  if (s.tied.size() > 1 && tie_rule == TieRule::kUniformRandom) {
    std::uniform_int_distribution<std::size_t> pick(0, s.tied.size() - 1);
    winner = s.tied[pick(rng)];
  }
  const bool ok = 2 * s.correct_votes[winner] > s.votes[winner];
  for (auto id : s.touched) {
    s.votes[id] = 0;
    s.correct_votes[id] = 0;
  }
  return ok;
}

bool best_of_n_correct(const AggregationCube& cube, int problem, const ReplicateScratch& s) {
  std::size_t best = 0;
  auto best_at = cube.index(problem, s.draw_checkpoint[0], s.draw_sample[0]);
  for (std::size_t d = 1; d < s.draw_sample.size(); ++d) {
    const auto at = cube.index(problem, s.draw_checkpoint[d], s.draw_sample[d]);
    const bool higher = cube.reward[at] > cube.reward[best_at];
    const bool tie_wins = cube.reward[at] == cube.reward[best_at] &&
                          std::pair(s.draw_checkpoint[d], s.draw_sample[d]) <
                              std::pair(s.draw_checkpoint[best], s.draw_sample[best]);
    if (higher || tie_wins) {
      best = d;
      best_at = at;
    }
  }
  return cube.correct[best_at] != 0;
}

}  // namespace

double replicate_accuracy(const AggregationCube& cube, const AggregationPlan& plan, std::uint64_t seed,
                          std::int64_t replicate, ReplicateScratch& scratch) {
  auto rng = make_stream(seed, StreamDomain::kReplicates, static_cast<std::uint64_t>(replicate));
  int solved = 0;
  for (int p = 0; p < cube.problems; ++p) {
    draw_problem(cube, plan.allocation, rng, scratch);
    const bool ok = plan.strategy == Strategy::kMajority
                        ? majority_correct(cube, p, plan.tie_rule, rng, scratch)
                        : best_of_n_correct(cube, p, scratch);
    solved += ok ? 1 : 0;
  }
  return static_cast<double>(solved) / cube.problems;
}

double problem_pass(const CountMatrix& counts, int problem, int n, std::span<const int> allocation,
                    int first_column) {
  double survival = 1.0;
  for (std::size_t j = 0; j < allocation.size(); ++j)
    survival *= survival_ratio(n, counts(problem, first_column + static_cast<int>(j)), allocation[j]);
  return 1.0 - survival;
}

void simulate_problem(const TruePassRate& rates, int problem, int n, std::uint64_t seed, double collision_rate,
                      const std::string& problem_id, std::span<GenerationRecord> out) {
  auto rng = make_stream(seed, StreamDomain::kSamples, static_cast<std::uint64_t>(problem));
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const int checkpoints = rates.num_checkpoints();
  std::size_t i = 0;
  for (int c = 0; c < checkpoints; ++c) {
    const double r = rates(problem, c);
    for (int s = 0; s < n; ++s, ++i) {
      auto& record = out[i];
      record.problem_id = problem_id;
      record.checkpoint = c;
      record.sample = s;
      record.correct = unit(rng) < r;
      if (record.correct) {
        record.answer = "GOLD";
        record.reward = 0.6 + 0.4 * unit(rng);
      } else {
        const bool collide = collision_rate > 0.0 && unit(rng) < collision_rate;
        record.answer = collide ? std::string("WRONG-COMMON") : "WRONG-" + std::to_string(c * n + s);
        record.reward = 0.7 * unit(rng);
      }
    }
  }
}

}  // namespace temporal::detail
