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

#include <cmath>
#include <set>

#include "temporal/error.hpp"
#include "temporal/estimator.hpp"
#include "temporal/simulator.hpp"

using namespace temporal;

TEST_CASE("zero amplitude gives constant base rate") {
  SimConfig config;
  config.num_problems = 7;
  config.num_checkpoints = 5;
  config.rate_model = RateModel::kOscillating;
  config.base_rate = 0.35;
  config.amplitude = 0.0;
  config.period = 4.0;
  const auto rates = simulate_rates(config);
  for (double r : rates.matrix().data()) CHECK(r == 0.35);
}

TEST_CASE("oscillating rates are clamped and periodic") {
  SimConfig config;
  config.num_problems = 50;
  config.num_checkpoints = 12;
  config.rate_model = RateModel::kOscillating;
  config.base_rate = 0.2;
  config.amplitude = 0.5;
  config.period = 4.0;
  config.seed = 8;
  const auto rates = simulate_rates(config);
  bool clamped = false;
  for (int i = 0; i < rates.num_problems(); ++i)
    for (int j = 0; j < rates.num_checkpoints(); ++j) {
      CHECK((rates(i, j) >= 0.0 && rates(i, j) <= 1.0));
      clamped = clamped || rates(i, j) == 0.0;
      if (j + 4 < rates.num_checkpoints()) CHECK(rates(i, j) == doctest::Approx(rates(i, j + 4)).epsilon(1e-9));
    }
  CHECK(clamped);
}

TEST_CASE("seeded generation is deterministic") {
  SimConfig config;
  config.num_problems = 300;
  config.num_checkpoints = 3;
  config.samples_per_cell = 4;
  config.seed = 1234;
  CHECK(simulate_rates(config).matrix() == simulate_rates(config).matrix());
  CHECK(simulate(config).records() == simulate(config).records());
  config.seed = 1235;
  const auto other = simulate_rates(config);
  config.seed = 1234;
  CHECK_FALSE(other.matrix() == simulate_rates(config).matrix());
}

TEST_CASE("beta(1,1) is uniform on average") {
  SimConfig config;
  config.num_problems = 1000;
  config.num_checkpoints = 10;
  config.rate_model = RateModel::kBeta;
  config.alpha = 1.0;
  config.beta = 1.0;
  config.seed = 42;
  const auto rates = simulate_rates(config);
  double sum = 0.0;
  for (double r : rates.matrix().data()) sum += r;
  const double mean = sum / 10000.0;
  CHECK(mean >= 0.49);
  CHECK(mean <= 0.51);
}

TEST_CASE("degenerate rates") {
  const auto ones = simulate_dataset(TruePassRate(Grid<double>(4, 3, 1.0)), 6, 3);
  for (const auto& r : ones.records()) {
    CHECK(r.correct);
    CHECK(r.answer == "GOLD");
    CHECK((*r.reward >= 0.6 && *r.reward <= 1.0));
  }
  const auto zeros = simulate_dataset(TruePassRate(Grid<double>(4, 3, 0.0)), 6, 3);
  for (int t = 1; t <= 3; ++t)
    for (int k = 1; k <= 6 * t; ++k) CHECK(pass_at_k_given_t(zeros, k, t).value == 0.0);
  for (const auto& r : zeros.records()) CHECK((*r.reward >= 0.0 && *r.reward <= 0.7));
}

TEST_CASE("wrong answers are unique per problem unless they collide") {
  const auto d = simulate_dataset(TruePassRate(Grid<double>(2, 3, 0.0)), 5, 1);
  for (int p = 0; p < 2; ++p) {
    std::set<std::string> seen;
    for (int c = 0; c < 3; ++c)
      for (const auto& r : d.cell(p, c)) seen.insert(r.answer);
    CHECK(seen.size() == 15);
  }
  const auto collided = simulate_dataset(TruePassRate(Grid<double>(2, 3, 0.0)), 5, 1, 1.0);
  for (const auto& r : collided.records()) CHECK(r.answer == "WRONG-COMMON");
}

TEST_CASE("empirical pass rate concentrates on r") {
  const TruePassRate rates = [] {
    Grid<double> g(2, 2);
    g(0, 0) = 0.1;
    g(0, 1) = 0.5;
    g(1, 0) = 0.75;
    g(1, 1) = 0.97;
    return TruePassRate(g);
  }();
  const int n = 4;
  const int replicates = 10000;
  Grid<double> sum(2, 2, 0.0);
  for (int rep = 0; rep < replicates; ++rep) {
    const auto d = simulate_dataset(rates, n, static_cast<std::uint64_t>(rep));
    for (int p = 0; p < 2; ++p)
      for (int c = 0; c < 2; ++c) sum(p, c) += d.correct_count(p, c) / static_cast<double>(n);
  }
  for (int p = 0; p < 2; ++p)
    for (int c = 0; c < 2; ++c) {
      const double r = rates(p, c);
      const double se = std::sqrt(r * (1.0 - r) / n / replicates);
      CHECK(std::abs(sum(p, c) / replicates - r) <= 4.0 * se);
    }
}

TEST_CASE("estimator averaged over simulations matches the closed form") {
  Grid<double> g(3, 2);
  const double values[] = {0.05, 0.6, 0.3, 0.3, 0.9, 0.0};
  for (int i = 0; i < 6; ++i) g(i / 2, i % 2) = values[i];
  const TruePassRate rates(g);
  const int replicates = 20000;
  for (auto [k, t] : {std::pair{3, 1}, std::pair{3, 2}, std::pair{5, 2}}) {
    double sum = 0.0, squares = 0.0;
    for (int rep = 0; rep < replicates; ++rep) {
      const double v = pass_at_k_given_t(simulate_dataset(rates, 6, 1000 + rep), k, t).value;
      sum += v;
      squares += v * v;
    }
    const double mean = sum / replicates;
    const double se = std::sqrt((squares / replicates - mean * mean) / (replicates - 1));
    CHECK(std::abs(mean - exact_pass_at_k_given_t(rates, k, t).value) <= 4.0 * se);
  }
}

TEST_CASE("zero amplitude: Pass@k|t equals Pass@k|1 in expectation") {
  SimConfig config;
  config.num_problems = 40;
  config.num_checkpoints = 4;
  config.samples_per_cell = 8;
  config.rate_model = RateModel::kOscillating;
  config.base_rate = 0.15;
  config.amplitude = 0.0;
  config.period = 4.0;
  const int runs = 400;
  for (int t : {2, 4}) {
    double sum = 0.0, squares = 0.0;
    for (int run = 0; run < runs; ++run) {
      config.seed = 500 + static_cast<std::uint64_t>(run);
      const auto d = simulate(config);
      const double gap = pass_at_k_given_t(d, 8, t).value - pass_at_k_given_t(d, 8, 1).value;
      sum += gap;
      squares += gap * gap;
    }
    const double mean = sum / runs;
    const double se = std::sqrt((squares / runs - mean * mean) / (runs - 1));
    CHECK(se > 0.0);
    CHECK(std::abs(mean) <= 3.0 * se);
  }
}

TEST_CASE("invalid configurations") {
  auto bad = [](auto mutate) {
    SimConfig config;
    mutate(config);
    CHECK_THROWS_WITH_AS(simulate_rates(config), doctest::Contains("InvalidConfig"), Error);
  };
  bad([](SimConfig& c) { c.num_problems = 0; });
  bad([](SimConfig& c) { c.num_checkpoints = 0; });
  bad([](SimConfig& c) { c.samples_per_cell = 0; });
  bad([](SimConfig& c) { c.collision_rate = 1.5; });
  bad([](SimConfig& c) { c.rate_model = RateModel::kBeta; c.alpha = 0.0; });
  bad([](SimConfig& c) { c.rate_model = RateModel::kOscillating; c.period = 0.0; });
  bad([](SimConfig& c) { c.rate_model = RateModel::kOscillating; c.amplitude = -0.1; });
  CHECK_THROWS_AS(simulate_dataset(TruePassRate(Grid<double>(1, 1, 0.5)), 0, 1), Error);
  CHECK(parse_rate_model("beta") == RateModel::kBeta);
  CHECK_THROWS_AS(parse_rate_model("gaussian"), Error);
}
