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

#include "temporal/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <unordered_map>
#include <utility>

#include <nlohmann/json.hpp>

#include "temporal/error.hpp"

namespace temporal {
namespace {

using nlohmann::json;

[[noreturn]] void parse_fail(std::int64_t line_number, const std::string& what) {
  throw Error(ErrorCode::kParseError, "line " + std::to_string(line_number) + ": " + what);
}

std::string cell_name(const std::string& problem, int checkpoint) {
  return "(problem '" + problem + "', checkpoint " + std::to_string(checkpoint) + ")";
}

int parse_checkpoint(const json& value, std::int64_t line_number) {
  if (value.is_string()) {
    const auto& text = value.get_ref<const std::string&>();
    if (text == "base") return kBaseCheckpoint;
    int index = 0;
    const char* first = text.data();
    const char* last = first + text.size();
    auto [ptr, ec] = std::from_chars(first, last, index);
    if (text.empty() || ec != std::errc() || ptr != last || index < 0 || text.front() == '+')
      parse_fail(line_number, "checkpoint must be a decimal index or \"base\", got \"" + text + "\"");
    return index;
  }
  if (value.is_number_integer()) {
    const auto index = value.get<std::int64_t>();
    if (index < 0 || index > std::numeric_limits<int>::max())
      parse_fail(line_number, "checkpoint index out of range");
    return static_cast<int>(index);
  }
  parse_fail(line_number, "checkpoint must be a string");
}

std::ifstream open_input(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open " + path.string());
  return in;
}

// Problems in order of first appearance.
std::pair<std::vector<std::string>, std::unordered_map<std::string, int>> index_problems(
    const std::vector<GenerationRecord>& records) {
  std::vector<std::string> problems;
  std::unordered_map<std::string, int> index;
  for (const auto& r : records) {
    if (index.emplace(r.problem_id, static_cast<int>(problems.size())).second)
      problems.push_back(r.problem_id);
  }
  return {std::move(problems), std::move(index)};
}

}  // namespace

GenerationRecord parse_record(const std::string& line, std::int64_t line_number, LoadStats* stats) {
  json j;
  try {
    j = json::parse(line);
  } catch (const json::parse_error& e) {
    parse_fail(line_number, std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object()) parse_fail(line_number, "record must be a JSON object");

  GenerationRecord record;
  bool seen_problem = false, seen_checkpoint = false, seen_sample = false;
  bool seen_answer = false, seen_correct = false;
  for (const auto& [key, value] : j.items()) {
    if (key == "problem_id") {
      if (!value.is_string()) parse_fail(line_number, "problem_id must be a string");
      record.problem_id = value.get<std::string>();
      seen_problem = true;
    } else if (key == "checkpoint") {
      record.checkpoint = parse_checkpoint(value, line_number);
      seen_checkpoint = true;
    } else if (key == "sample") {
      if (!value.is_number_integer()) parse_fail(line_number, "sample must be an integer");
      const auto sample = value.get<std::int64_t>();
      if (sample < 0 || sample > std::numeric_limits<int>::max())
        parse_fail(line_number, "sample index out of range");
      record.sample = static_cast<int>(sample);
      seen_sample = true;
    } else if (key == "answer") {
      if (!value.is_string()) parse_fail(line_number, "answer must be a string");
      record.answer = value.get<std::string>();
      seen_answer = true;
    } else if (key == "correct") {
      if (!value.is_boolean()) parse_fail(line_number, "correct must be a boolean");
      record.correct = value.get<bool>();
      seen_correct = true;
    } else if (key == "reward") {
      if (value.is_number()) {
        record.reward = value.get<double>();
      } else if (!value.is_null()) {
        parse_fail(line_number, "reward must be a number");
      }
    } else if (stats != nullptr) {
      ++stats->unknown_fields;
    }
  }
  if (!seen_problem) parse_fail(line_number, "missing field problem_id");
  if (!seen_checkpoint) parse_fail(line_number, "missing field checkpoint");
  if (!seen_sample) parse_fail(line_number, "missing field sample");
  if (!seen_answer) parse_fail(line_number, "missing field answer");
  if (!seen_correct) parse_fail(line_number, "missing field correct");
  return record;
}

std::string format_record(const GenerationRecord& record) {
  nlohmann::ordered_json j;
  j["problem_id"] = record.problem_id;
  j["checkpoint"] = record.is_base() ? std::string("base") : std::to_string(record.checkpoint);
  j["sample"] = record.sample;
  j["answer"] = record.answer;
  j["correct"] = record.correct;
  if (record.reward) j["reward"] = *record.reward;
  return j.dump();
}

std::vector<GenerationRecord> read_records(std::istream& in, LoadStats* stats) {
  std::vector<GenerationRecord> records;
  std::string line;
  std::int64_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    records.push_back(parse_record(line, line_number, stats));
  }
  if (in.bad()) throw Error(ErrorCode::kIoError, "read failure");
  if (stats != nullptr) stats->lines += line_number;
  return records;
}

EvalDataset EvalDataset::from_records(std::vector<GenerationRecord> records) {
  if (records.empty()) throw Error(ErrorCode::kEmptyDataset, "no records");
  int max_checkpoint = 0;
  for (const auto& r : records) {
    if (r.is_base())
      throw Error(ErrorCode::kInvalidConfig,
                  "base-model record for problem '" + r.problem_id + "' in an evaluation dataset");
    max_checkpoint = std::max(max_checkpoint, r.checkpoint);
  }
  auto [problems, problem_index] = index_problems(records);
  const int num_checkpoints = max_checkpoint + 1;
  const auto num_problems = problems.size();

  std::vector<std::vector<std::size_t>> cells(num_problems * static_cast<std::size_t>(num_checkpoints));
  for (std::size_t i = 0; i < records.size(); ++i) {
    const auto p = static_cast<std::size_t>(problem_index.at(records[i].problem_id));
    cells[p * num_checkpoints + records[i].checkpoint].push_back(i);
  }

  for (std::size_t p = 0; p < num_problems; ++p) {
    for (int c = 0; c < num_checkpoints; ++c) {
      auto& cell = cells[p * num_checkpoints + c];
      std::sort(cell.begin(), cell.end(), [&](std::size_t a, std::size_t b) {
        return records[a].sample < records[b].sample;
      });
      for (std::size_t s = 1; s < cell.size(); ++s) {
        if (records[cell[s]].sample == records[cell[s - 1]].sample)
          throw Error(ErrorCode::kDuplicateRecord,
                      cell_name(problems[p], c) + " sample " + std::to_string(records[cell[s]].sample));
      }
    }
  }
  for (std::size_t p = 0; p < num_problems; ++p)
    for (int c = 0; c < num_checkpoints; ++c)
      if (cells[p * num_checkpoints + c].empty())
        throw Error(ErrorCode::kMissingCell, cell_name(problems[p], c) + " has no records");

  const auto n = cells.front().size();
  for (std::size_t p = 0; p < num_problems; ++p) {
    for (int c = 0; c < num_checkpoints; ++c) {
      const auto& cell = cells[p * num_checkpoints + c];
      if (cell.size() != n)
        throw Error(ErrorCode::kRaggedCell, cell_name(problems[p], c) + " has " +
                                                std::to_string(cell.size()) + " samples, expected " +
                                                std::to_string(n));
      if (records[cell.back()].sample != static_cast<int>(n) - 1)
        throw Error(ErrorCode::kRaggedCell,
                    cell_name(problems[p], c) + " sample indices are not contiguous from 0");
    }
  }

  std::vector<GenerationRecord> ordered;
  ordered.reserve(records.size());
  for (const auto& cell : cells)
    for (auto i : cell) ordered.push_back(std::move(records[i]));
  return from_cube(std::move(problems), num_checkpoints, static_cast<int>(n), std::move(ordered));
}

EvalDataset EvalDataset::from_cube(std::vector<std::string> problems, int num_checkpoints,
                                   int samples_per_cell, std::vector<GenerationRecord> records) {
  if (problems.empty()) throw Error(ErrorCode::kEmptyDataset, "no problems");
  if (num_checkpoints < 1 || samples_per_cell < 1)
    throw Error(ErrorCode::kShapeMismatch, "cube needs at least one checkpoint and one sample");
  const auto expected = problems.size() * static_cast<std::size_t>(num_checkpoints) *
                        static_cast<std::size_t>(samples_per_cell);
  if (records.size() != expected)
    throw Error(ErrorCode::kShapeMismatch, "cube has " + std::to_string(records.size()) +
                                               " records, expected " + std::to_string(expected));
  std::size_t i = 0;
  for (const auto& problem : problems) {
    for (int c = 0; c < num_checkpoints; ++c) {
      for (int s = 0; s < samples_per_cell; ++s, ++i) {
        const auto& r = records[i];
        if (r.problem_id != problem || r.checkpoint != c || r.sample != s)
          throw Error(ErrorCode::kShapeMismatch,
                      "record " + std::to_string(i) + " is out of canonical order");
      }
    }
  }
  EvalDataset dataset;
  dataset.problems_ = std::move(problems);
  dataset.num_checkpoints_ = num_checkpoints;
  dataset.samples_per_cell_ = samples_per_cell;
  dataset.records_ = std::move(records);
  dataset.finalize();
  return dataset;
}

void EvalDataset::finalize() {
  counts_ = CountMatrix(num_problems(), num_checkpoints_);
  has_rewards_ = true;
  for (int p = 0; p < num_problems(); ++p) {
    for (int c = 0; c < num_checkpoints_; ++c) {
      int correct = 0;
      for (const auto& r : cell(p, c)) {
        correct += r.correct ? 1 : 0;
        has_rewards_ = has_rewards_ && r.reward.has_value();
      }
      counts_(p, c) = correct;
    }
  }
}

std::span<const GenerationRecord> EvalDataset::cell(int problem, int checkpoint) const {
  const auto n = static_cast<std::size_t>(samples_per_cell_);
  const auto offset = (static_cast<std::size_t>(problem) * num_checkpoints_ + checkpoint) * n;
  return std::span<const GenerationRecord>(records_).subspan(offset, n);
}

TrajectoryMatrix::TrajectoryMatrix(std::vector<std::string> problems, Grid<std::uint8_t> correct,
                                   std::optional<std::vector<bool>> base_correct)
    : problems_(std::move(problems)), correct_(std::move(correct)), base_correct_(std::move(base_correct)) {
  if (correct_.rows() != static_cast<int>(problems_.size()))
    throw Error(ErrorCode::kShapeMismatch, "trajectory rows do not match problem count");
  if (correct_.cols() < 1 && !problems_.empty())
    throw Error(ErrorCode::kShapeMismatch, "trajectory needs at least one checkpoint");
  if (base_correct_ && base_correct_->size() != problems_.size())
    throw Error(ErrorCode::kShapeMismatch, "base vector length does not match problem count");
}

EvalDataset load_dataset(std::istream& in, LoadStats* stats) {
  auto records = read_records(in, stats);
  const auto base_end = std::remove_if(records.begin(), records.end(),
                                       [](const GenerationRecord& r) { return r.is_base(); });
  if (stats != nullptr) stats->skipped_base_records += std::distance(base_end, records.end());
  records.erase(base_end, records.end());
  return EvalDataset::from_records(std::move(records));
}

EvalDataset load_dataset(const std::filesystem::path& path, LoadStats* stats) {
  auto in = open_input(path);
  return load_dataset(in, stats);
}

TrajectoryMatrix load_trajectories(std::istream& in, LoadStats* stats) {
  auto records = read_records(in, stats);
  std::vector<GenerationRecord> base;
  std::vector<GenerationRecord> checkpoints;
  for (auto& r : records) (r.is_base() ? base : checkpoints).push_back(std::move(r));
  if (checkpoints.empty()) throw Error(ErrorCode::kEmptyDataset, "no checkpoint records");

  auto [problems, problem_index] = index_problems(checkpoints);
  int max_checkpoint = 0;
  for (const auto& r : checkpoints) max_checkpoint = std::max(max_checkpoint, r.checkpoint);
  const int num_checkpoints = max_checkpoint + 1;
  const int num_problems = static_cast<int>(problems.size());

  Grid<int> seen(num_problems, num_checkpoints, 0);
  Grid<std::uint8_t> correct(num_problems, num_checkpoints, 0);
  for (const auto& r : checkpoints) {
    const int p = problem_index.at(r.problem_id);
    if (++seen(p, r.checkpoint) > 1)
      throw Error(ErrorCode::kNotGreedy, cell_name(r.problem_id, r.checkpoint) + " has more than one sample");
    correct(p, chronological_column(r.checkpoint, num_checkpoints)) = r.correct ? 1 : 0;
  }
  for (int p = 0; p < num_problems; ++p)
    for (int c = 0; c < num_checkpoints; ++c)
      if (seen(p, c) == 0) throw Error(ErrorCode::kMissingCell, cell_name(problems[p], c) + " has no record");

  std::optional<std::vector<bool>> base_correct;
  if (!base.empty()) {
    std::vector<int> base_seen(problems.size(), 0);
    base_correct.emplace(problems.size(), false);
    for (const auto& r : base) {
      const auto it = problem_index.find(r.problem_id);
      if (it == problem_index.end())
        throw Error(ErrorCode::kShapeMismatch, "base record for unknown problem '" + r.problem_id + "'");
      if (++base_seen[it->second] > 1)
        throw Error(ErrorCode::kNotGreedy, "problem '" + r.problem_id + "' has more than one base record");
      (*base_correct)[it->second] = r.correct;
    }
    for (int p = 0; p < num_problems; ++p)
      if (base_seen[p] == 0)
        throw Error(ErrorCode::kMissingCell, "problem '" + problems[p] + "' has no base record");
  }
  return TrajectoryMatrix(std::move(problems), std::move(correct), std::move(base_correct));
}

TrajectoryMatrix load_trajectories(const std::filesystem::path& path, LoadStats* stats) {
  auto in = open_input(path);
  return load_trajectories(in, stats);
}

std::vector<bool> load_base_correct(std::istream& in, const std::vector<std::string>& problems) {
  const auto records = read_records(in);
  std::unordered_map<std::string, int> index;
  for (std::size_t p = 0; p < problems.size(); ++p) index.emplace(problems[p], static_cast<int>(p));
  std::vector<bool> base(problems.size(), false);
  std::vector<int> seen(problems.size(), 0);
  for (const auto& r : records) {
    const auto it = index.find(r.problem_id);
    if (it == index.end())
      throw Error(ErrorCode::kShapeMismatch, "base record for unknown problem '" + r.problem_id + "'");
    if (++seen[it->second] > 1)
      throw Error(ErrorCode::kNotGreedy, "problem '" + r.problem_id + "' has more than one base record");
    base[it->second] = r.correct;
  }
  for (std::size_t p = 0; p < problems.size(); ++p)
    if (seen[p] == 0) throw Error(ErrorCode::kMissingCell, "problem '" + problems[p] + "' has no base record");
  return base;
}

void write_jsonl(std::ostream& out, const EvalDataset& dataset) {
  for (const auto& r : dataset.records()) out << format_record(r) << '\n';
}

std::string to_jsonl(const EvalDataset& dataset) {
  std::ostringstream out;
  write_jsonl(out, dataset);
  return out.str();
}

}  // namespace temporal
