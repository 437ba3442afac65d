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

#include "temporal/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "temporal/error.hpp"
#include "temporal/kernels.hpp"
#include "temporal/rng.hpp"

namespace temporal {

std::string_view rate_model_name(RateModel model) {
  switch (model) {
    case RateModel::kIidUniform: return "iid_uniform";
    case RateModel::kBeta: return "beta";
    case RateModel::kOscillating: return "oscillating";
  }
  return "unknown";
}

RateModel parse_rate_model(std::string_view name) {
  if (name == "iid_uniform") return RateModel::kIidUniform;
  if (name == "beta") return RateModel::kBeta;
  if (name == "oscillating") return RateModel::kOscillating;
  throw Error(ErrorCode::kInvalidConfig, "unknown rate model '" + std::string(name) + "'");
}

void SimConfig::validate() const {
  auto fail = [](const std::string& what) { throw Error(ErrorCode::kInvalidConfig, what); };
  if (num_problems < 1) fail("num_problems must be >= 1");
  if (num_checkpoints < 1) fail("num_checkpoints must be >= 1");
  if (samples_per_cell < 1) fail("samples_per_cell must be >= 1");
  if (!(collision_rate >= 0.0 && collision_rate <= 1.0)) fail("collision_rate must lie in [0, 1]");
  switch (rate_model) {
    case RateModel::kIidUniform:
      break;
    case RateModel::kBeta:
      if (!(alpha > 0.0 && std::isfinite(alpha)) || !(beta > 0.0 && std::isfinite(beta)))
        fail("beta model needs finite alpha > 0 and beta > 0");
      break;
    case RateModel::kOscillating:
      if (!std::isfinite(base_rate) || !(amplitude >= 0.0 && std::isfinite(amplitude)))
        fail("oscillating model needs finite base_rate and amplitude >= 0");
      if (!(period > 0.0 && std::isfinite(period))) fail("oscillating model needs period > 0");
      break;
  }
}

TruePassRate simulate_rates(const SimConfig& config) {
  config.validate();
  Grid<double> rates(config.num_problems, config.num_checkpoints);
  for (int i = 0; i < config.num_problems; ++i) {
    auto rng = make_stream(config.seed, StreamDomain::kRates, static_cast<std::uint64_t>(i));
    switch (config.rate_model) {
      case RateModel::kIidUniform: {
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        for (int j = 0; j < config.num_checkpoints; ++j) rates(i, j) = unit(rng);
        break;
      }
      case RateModel::kBeta: {
        std::gamma_distribution<double> ga(config.alpha, 1.0);
        std::gamma_distribution<double> gb(config.beta, 1.0);
        for (int j = 0; j < config.num_checkpoints; ++j) {
          const double x = ga(rng);
          const double y = gb(rng);
          rates(i, j) = x + y > 0.0 ? std::clamp(x / (x + y), 0.0, 1.0) : 0.5;
        }
        break;
      }
      case RateModel::kOscillating: {
        const double phase = std::uniform_real_distribution<double>(0.0, config.period)(rng);
        for (int j = 0; j < config.num_checkpoints; ++j) {
          const double wave = std::sin(2.0 * std::numbers::pi * (j + phase) / config.period);
          rates(i, j) = std::clamp(config.base_rate + config.amplitude * wave, 0.0, 1.0);
        }
        break;
      }
    }
  }
  return TruePassRate(std::move(rates));
}

EvalDataset simulate_dataset(const TruePassRate& rates, int samples_per_cell, std::uint64_t seed,
                             double collision_rate) {
  if (samples_per_cell < 1) throw Error(ErrorCode::kInvalidConfig, "samples_per_cell must be >= 1");
  if (!(collision_rate >= 0.0 && collision_rate <= 1.0))
    throw Error(ErrorCode::kInvalidConfig, "collision_rate must lie in [0, 1]");
  if (rates.num_problems() < 1 || rates.num_checkpoints() < 1)
    throw Error(ErrorCode::kInvalidConfig, "rate matrix is empty");
  std::vector<std::string> problems(static_cast<std::size_t>(rates.num_problems()));
  for (int i = 0; i < rates.num_problems(); ++i) problems[i] = "p" + std::to_string(i);
  std::vector<GenerationRecord> records(problems.size() * rates.num_checkpoints() * samples_per_cell);
  parallel::simulate_records(rates, samples_per_cell, seed, collision_rate, problems, records);
  const int checkpoints = rates.num_checkpoints();
  return EvalDataset::from_cube(std::move(problems), checkpoints, samples_per_cell, std::move(records));
}

EvalDataset simulate(const SimConfig& config) {
  const auto rates = simulate_rates(config);
  return simulate_dataset(rates, config.samples_per_cell, config.seed, config.collision_rate);
}

}  // namespace temporal
