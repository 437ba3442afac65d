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

// Metric tables and their CSV / JSON forms.
//
// Fractions are written with 6 decimals; dynamics percentages with 1. The
// `unit` column says which convention a row uses.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "temporal/aggregation.hpp"
#include "temporal/dataset.hpp"
#include "temporal/dynamics.hpp"
#include "temporal/estimator.hpp"
#include "temporal/partition.hpp"

namespace temporal {

inline constexpr std::string_view kToolVersion = "0.1.0";

enum class Metric { kPass, kMajority, kBestOfN };

std::string_view metric_name(Metric metric);
Metric parse_metric(std::string_view name);

struct MetricRow {
  std::string metric;
  int k = 0;
  int t = 0;
  double value = 0.0;
  std::optional<double> std_error;
  std::string unit = "fraction";

  bool operator==(const MetricRow&) const = default;
};

struct ReportMetadata {
  std::string dataset;       // input path(s), '+'-joined
  std::string dataset_hash;  // sha256 of canonical JSONL, '+'-joined for pools
  std::optional<std::uint64_t> seed;
  std::string tool_version = std::string(kToolVersion);
  std::optional<std::string> timestamp;  // absent in deterministic mode

  bool operator==(const ReportMetadata&) const = default;
};

struct MetricReport {
  std::vector<MetricRow> rows;
  ReportMetadata metadata;

  // Orders rows by (metric, t, k).
  void sort_rows();
  bool operator==(const MetricReport&) const = default;
};

// One row per (k, t) pair. Errors from the estimators are re-thrown with the
// offending (k, t) prefixed to the message.
MetricReport sweep(const EvalDataset& dataset, Metric metric, std::span<const int> k_values,
                   std::span<const int> t_values, int replicates, std::uint64_t seed,
                   TieRule tie_rule = TieRule::kUniformRandom);

// Majority vote under round-robin sampling over a pool of models, each
// dataset contributing its latest checkpoint as one pool member. Emits a
// "majority_pool" row and, when the first dataset has enough checkpoints, a
// "majority_temporal" row for that dataset with t = pool size.
MetricReport compare_pools(std::span<const EvalDataset> datasets, int k, int replicates, std::uint64_t seed,
                           TieRule tie_rule = TieRule::kUniformRandom);

// Pool members stacked as checkpoints of one dataset (member j -> checkpoint j).
EvalDataset pool_dataset(std::span<const EvalDataset> datasets);

// Hex SHA-256 of the canonical JSONL form.
std::string dataset_digest(const EvalDataset& dataset);
std::string current_timestamp();

// Rounds to the 6-decimal grid used in serialized fractions.
double round_fraction(double value);

void write_csv(std::ostream& out, const MetricReport& report);
void write_json(std::ostream& out, const MetricReport& report);
MetricReport read_csv(std::istream& in);
MetricReport read_json(std::istream& in);

std::string plan_json(const PartitionPlan& plan);
void write_per_problem_csv(std::ostream& out, const EvalDataset& dataset, const PassEstimate& estimate);
void write_per_problem_json(std::ostream& out, const EvalDataset& dataset, const PassEstimate& estimate);
void write_dynamics_json(std::ostream& out, const TrajectoryMatrix& trajectories, const ForgettingReport& report,
                         const ReportMetadata& metadata);
// Columns problem_id, step, event; step s is the transition into
// chronological column s + 1.
void write_transitions_csv(std::ostream& out, const TrajectoryMatrix& trajectories,
                           const ForgettingReport& report);

}  // namespace temporal
