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

// Generation records and the two checkpoint-indexed containers built from
// them.
//
// Two checkpoint orientations are used and never mixed implicitly:
//
//   * Sampling order (EvalDataset, the JSONL `checkpoint` field): index 0 is
//     the latest checkpoint, larger indices are older ones.
//   * Chronological order (TrajectoryMatrix columns): column 0 is the
//     earliest checkpoint, column T-1 the final one.
//
// chronological_column() converts between the two.

#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "temporal/grid.hpp"

namespace temporal {

// Checkpoint label reserved for base-model (pre-fine-tuning) records.
inline constexpr int kBaseCheckpoint = -1;

struct GenerationRecord {
  std::string problem_id;
  int checkpoint = 0;  // sampling order, or kBaseCheckpoint
  int sample = 0;
  std::string answer;
  bool correct = false;
  std::optional<double> reward;

  bool is_base() const noexcept { return checkpoint == kBaseCheckpoint; }
  bool operator==(const GenerationRecord&) const = default;
};

// Counters for input that was accepted but not used.
struct LoadStats {
  std::int64_t lines = 0;
  std::int64_t unknown_fields = 0;
  std::int64_t skipped_base_records = 0;
};

// Immutable (problem x checkpoint x sample) cube with uniform N per cell.
class EvalDataset {
 public:
  // Validates uniqueness, completeness and uniform cell size. Problems keep
  // the order of their first appearance in `records`.
  static EvalDataset from_records(std::vector<GenerationRecord> records);

  // `records` must already be in canonical (problem, checkpoint, sample)
  // order with problems.size() * num_checkpoints * samples_per_cell entries.
  // Only positions are checked; used by generators that build the cube
  // directly.
  static EvalDataset from_cube(std::vector<std::string> problems, int num_checkpoints,
                               int samples_per_cell, std::vector<GenerationRecord> records);

  const std::vector<std::string>& problems() const noexcept { return problems_; }
  int num_problems() const noexcept { return static_cast<int>(problems_.size()); }
  int num_checkpoints() const noexcept { return num_checkpoints_; }
  int samples_per_cell() const noexcept { return samples_per_cell_; }

  const CountMatrix& correct_counts() const noexcept { return counts_; }
  int correct_count(int problem, int checkpoint) const { return counts_(problem, checkpoint); }

  // Records of one cell, ordered by sample index.
  std::span<const GenerationRecord> cell(int problem, int checkpoint) const;
  // All records in canonical order.
  const std::vector<GenerationRecord>& records() const noexcept { return records_; }

  // True iff every record carries a reward.
  bool has_rewards() const noexcept { return has_rewards_; }

 private:
  EvalDataset() = default;
  void finalize();

  std::vector<std::string> problems_;
  int num_checkpoints_ = 0;
  int samples_per_cell_ = 0;
  std::vector<GenerationRecord> records_;
  CountMatrix counts_;
  bool has_rewards_ = false;
};

// Greedy-decoding correctness, one sample per (problem, checkpoint), with
// columns in chronological order.
class TrajectoryMatrix {
 public:
  TrajectoryMatrix(std::vector<std::string> problems, Grid<std::uint8_t> correct,
                   std::optional<std::vector<bool>> base_correct = std::nullopt);

  const std::vector<std::string>& problems() const noexcept { return problems_; }
  int num_problems() const noexcept { return static_cast<int>(problems_.size()); }
  int num_checkpoints() const noexcept { return correct_.cols(); }

  bool correct(int problem, int column) const { return correct_(problem, column) != 0; }
  bool final_correct(int problem) const { return correct(problem, num_checkpoints() - 1); }
  const Grid<std::uint8_t>& matrix() const noexcept { return correct_; }
  const std::optional<std::vector<bool>>& base_correct() const noexcept { return base_correct_; }

 private:
  std::vector<std::string> problems_;
  Grid<std::uint8_t> correct_;
  std::optional<std::vector<bool>> base_correct_;
};

// Maps a sampling-order checkpoint index to its chronological column and
// back (the mapping is its own inverse).
constexpr int chronological_column(int checkpoint, int num_checkpoints) {
  return num_checkpoints - 1 - checkpoint;
}

// Parses one JSONL line. `line_number` is only used in error messages.
GenerationRecord parse_record(const std::string& line, std::int64_t line_number,
                              LoadStats* stats = nullptr);
std::string format_record(const GenerationRecord& record);

std::vector<GenerationRecord> read_records(std::istream& in, LoadStats* stats = nullptr);

// Base-model records in the stream are skipped and counted.
EvalDataset load_dataset(std::istream& in, LoadStats* stats = nullptr);
EvalDataset load_dataset(const std::filesystem::path& path, LoadStats* stats = nullptr);

// Records labelled "base" populate base_correct; all others must form a
// complete one-sample-per-cell grid. The JSONL checkpoint index is in sampling
// order and is reversed into chronological columns here.
TrajectoryMatrix load_trajectories(std::istream& in, LoadStats* stats = nullptr);
TrajectoryMatrix load_trajectories(const std::filesystem::path& path, LoadStats* stats = nullptr);

// Per-problem correctness from a stream holding exactly one record per
// problem (checkpoint label ignored), ordered like `problems`.
std::vector<bool> load_base_correct(std::istream& in, const std::vector<std::string>& problems);

// Canonical JSONL: one record per line in (problem, checkpoint, sample) order.
void write_jsonl(std::ostream& out, const EvalDataset& dataset);
std::string to_jsonl(const EvalDataset& dataset);

}  // namespace temporal
