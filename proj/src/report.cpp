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

#include "temporal/report.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ctime>
#include <istream>
#include <ostream>
#include <sstream>
#include <tuple>

#include <fmt/format.h>
#include <nlohmann/json.hpp>
#include <openssl/evp.h>

#include "temporal/error.hpp"

namespace temporal {
namespace {

using ojson = nlohmann::ordered_json;

// RFC 4180 quoting for free-text fields such as problem ids.
std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\r\n") == std::string::npos) return text;
  std::string quoted = "\"";
  for (char ch : text) {
    if (ch == '"') quoted += '"';
    quoted += ch;
  }
  return quoted + '"';
}

double round_percent(double value) { return std::round(value * 10.0) / 10.0; }

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? "+" : "") + parts[i];
  return out;
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, sep)) fields.push_back(field);
  if (!line.empty() && line.back() == sep) fields.emplace_back();
  return fields;
}

int parse_int(const std::string& text, const char* what) {
  try {
    std::size_t used = 0;
    const int value = std::stoi(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return value;
  } catch (const std::exception&) {
    throw Error(ErrorCode::kParseError, std::string("bad ") + what + " '" + text + "'");
  }
}

double parse_double(const std::string& text, const char* what) {
  try {
    std::size_t used = 0;
    const double value = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return value;
  } catch (const std::exception&) {
    throw Error(ErrorCode::kParseError, std::string("bad ") + what + " '" + text + "'");
  }
}

ojson metadata_json(const ReportMetadata& m) {
  ojson j;
  j["dataset"] = m.dataset;
  j["dataset_hash"] = m.dataset_hash;
  j["seed"] = m.seed ? ojson(*m.seed) : ojson(nullptr);
  j["tool_version"] = m.tool_version;
  if (m.timestamp) j["timestamp"] = *m.timestamp;
  return j;
}

MetricRow cell_row(const EvalDataset& dataset, Metric metric, int k, int t, int replicates, std::uint64_t seed,
                   TieRule tie_rule) {
  switch (metric) {
    case Metric::kPass:
      return MetricRow{"pass", k, t, pass_at_k_given_t(dataset, k, t).value, std::nullopt, "fraction"};
    case Metric::kMajority: {
      const auto e = majority_at_k_given_t(dataset, k, t, replicates, seed, tie_rule);
      return MetricRow{"majority", k, t, e.value, e.std_error, "fraction"};
    }
    case Metric::kBestOfN: {
      const auto e = best_of_n_at_k_given_t(dataset, k, t, replicates, seed);
      return MetricRow{"bon", k, t, e.value, e.std_error, "fraction"};
    }
  }
  throw Error(ErrorCode::kInvalidConfig, "unknown metric");
}

}  // namespace

std::string_view metric_name(Metric metric) {
  switch (metric) {
    case Metric::kPass: return "pass";
    case Metric::kMajority: return "majority";
    case Metric::kBestOfN: return "bon";
  }
  return "unknown";
}

Metric parse_metric(std::string_view name) {
  if (name == "pass") return Metric::kPass;
  if (name == "majority") return Metric::kMajority;
  if (name == "bon") return Metric::kBestOfN;
  throw Error(ErrorCode::kInvalidConfig, "unknown metric '" + std::string(name) + "'");
}

void MetricReport::sort_rows() {
  std::stable_sort(rows.begin(), rows.end(), [](const MetricRow& a, const MetricRow& b) {
    return std::tie(a.metric, a.t, a.k) < std::tie(b.metric, b.t, b.k);
  });
}

MetricReport sweep(const EvalDataset& dataset, Metric metric, std::span<const int> k_values,
                   std::span<const int> t_values, int replicates, std::uint64_t seed, TieRule tie_rule) {
  MetricReport report;
  for (int t : t_values) {
    for (int k : k_values) {
      try {
        report.rows.push_back(cell_row(dataset, metric, k, t, replicates, seed, tie_rule));
      } catch (const Error& e) {
        throw Error(e.code(), "k=" + std::to_string(k) + ", t=" + std::to_string(t) + ": " + e.detail());
      }
    }
  }
  report.sort_rows();
  if (metric != Metric::kPass) report.metadata.seed = seed;
  return report;
}

EvalDataset pool_dataset(std::span<const EvalDataset> datasets) {
  if (datasets.empty()) throw Error(ErrorCode::kEmptyDataset, "empty model pool");
  const auto& first = datasets.front();
  for (std::size_t m = 1; m < datasets.size(); ++m) {
    if (datasets[m].problems() != first.problems())
      throw Error(ErrorCode::kPoolMismatch, "pool member " + std::to_string(m) + " has a different problem list");
    if (datasets[m].samples_per_cell() != first.samples_per_cell())
      throw Error(ErrorCode::kPoolMismatch, "pool member " + std::to_string(m) + " has N=" +
                                                std::to_string(datasets[m].samples_per_cell()) + ", expected " +
                                                std::to_string(first.samples_per_cell()));
  }
  const int members = static_cast<int>(datasets.size());
  const int n = first.samples_per_cell();
  std::vector<GenerationRecord> records;
  records.reserve(static_cast<std::size_t>(first.num_problems()) * members * n);
  for (int p = 0; p < first.num_problems(); ++p) {
    for (int m = 0; m < members; ++m) {
      for (const auto& r : datasets[m].cell(p, 0)) {
        records.push_back(r);
        records.back().checkpoint = m;
      }
    }
  }
  return EvalDataset::from_cube(first.problems(), members, n, std::move(records));
}

MetricReport compare_pools(std::span<const EvalDataset> datasets, int k, int replicates, std::uint64_t seed,
                           TieRule tie_rule) {
  const auto pool = pool_dataset(datasets);
  const int members = pool.num_checkpoints();
  MetricReport report;
  const auto pooled = majority_at_k_given_t(pool, k, members, replicates, seed, tie_rule);
  report.rows.push_back(MetricRow{"majority_pool", k, members, pooled.value, pooled.std_error, "fraction"});
  if (datasets.front().num_checkpoints() >= members) {
    const auto temporal = majority_at_k_given_t(datasets.front(), k, members, replicates, seed, tie_rule);
    report.rows.push_back(
        MetricRow{"majority_temporal", k, members, temporal.value, temporal.std_error, "fraction"});
  }
  report.sort_rows();
  std::vector<std::string> hashes;
  for (const auto& d : datasets) hashes.push_back(dataset_digest(d));
  report.metadata.dataset_hash = join(hashes);
  report.metadata.seed = seed;
  return report;
}

std::string dataset_digest(const EvalDataset& dataset) {
  const auto text = to_jsonl(dataset);
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  if (EVP_Digest(text.data(), text.size(), digest, &length, EVP_sha256(), nullptr) != 1)
    throw Error(ErrorCode::kIoError, "sha256 failed");
  std::string hex;
  hex.reserve(length * 2);
  for (unsigned int i = 0; i < length; ++i) hex += fmt::format("{:02x}", digest[i]);
  return hex;
}

std::string current_timestamp() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm utc{};
  gmtime_r(&now, &utc);
  char buffer[32];
  std::strftime(buffer, sizeof buffer, "%Y-%m-%dT%H:%M:%SZ", &utc);
  return buffer;
}

double round_fraction(double value) { return std::round(value * 1e6) / 1e6; }

void write_csv(std::ostream& out, const MetricReport& report) {
  const auto& m = report.metadata;
  out << "# dataset=" << m.dataset << '\n';
  out << "# dataset_hash=" << m.dataset_hash << '\n';
  out << "# seed=" << (m.seed ? std::to_string(*m.seed) : std::string()) << '\n';
  out << "# tool_version=" << m.tool_version << '\n';
  if (m.timestamp) out << "# timestamp=" << *m.timestamp << '\n';
  out << "metric,k,t,value,std_error,unit\n";
  for (const auto& row : report.rows) {
    out << fmt::format("{},{},{},{:.6f},{},{}\n", row.metric, row.k, row.t, round_fraction(row.value),
                       row.std_error ? fmt::format("{:.6f}", round_fraction(*row.std_error)) : std::string(),
                       row.unit);
  }
}

void write_json(std::ostream& out, const MetricReport& report) {
  ojson j;
  j["metadata"] = metadata_json(report.metadata);
  j["rows"] = ojson::array();
  for (const auto& row : report.rows) {
    ojson r;
    r["metric"] = row.metric;
    r["k"] = row.k;
    r["t"] = row.t;
    r["value"] = round_fraction(row.value);
    r["std_error"] = row.std_error ? ojson(round_fraction(*row.std_error)) : ojson(nullptr);
    r["unit"] = row.unit;
    j["rows"].push_back(std::move(r));
  }
  out << j.dump(2) << '\n';
}

MetricReport read_csv(std::istream& in) {
  MetricReport report;
  std::string line;
  bool header = false;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line.rfind("# ", 0) == 0) {
      const auto eq = line.find('=');
      if (eq == std::string::npos) continue;
      const auto key = line.substr(2, eq - 2);
      const auto value = line.substr(eq + 1);
      auto& m = report.metadata;
      if (key == "dataset") m.dataset = value;
      else if (key == "dataset_hash") m.dataset_hash = value;
      else if (key == "seed" && !value.empty()) m.seed = std::stoull(value);
      else if (key == "tool_version") m.tool_version = value;
      else if (key == "timestamp") m.timestamp = value;
      continue;
    }
    if (!header) {
      if (line != "metric,k,t,value,std_error,unit") throw Error(ErrorCode::kParseError, "unexpected CSV header");
      header = true;
      continue;
    }
    const auto f = split(line, ',');
    if (f.size() != 6) throw Error(ErrorCode::kParseError, "CSV row needs 6 fields: " + line);
    MetricRow row;
    row.metric = f[0];
    row.k = parse_int(f[1], "k");
    row.t = parse_int(f[2], "t");
    row.value = parse_double(f[3], "value");
    if (!f[4].empty()) row.std_error = parse_double(f[4], "std_error");
    row.unit = f[5];
    report.rows.push_back(std::move(row));
  }
  return report;
}

MetricReport read_json(std::istream& in) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParseError, e.what());
  }
  MetricReport report;
  try {
    const auto& m = j.at("metadata");
    report.metadata.dataset = m.at("dataset").get<std::string>();
    report.metadata.dataset_hash = m.at("dataset_hash").get<std::string>();
    if (!m.at("seed").is_null()) report.metadata.seed = m.at("seed").get<std::uint64_t>();
    report.metadata.tool_version = m.at("tool_version").get<std::string>();
    if (m.contains("timestamp")) report.metadata.timestamp = m.at("timestamp").get<std::string>();
    for (const auto& r : j.at("rows")) {
      MetricRow row;
      row.metric = r.at("metric").get<std::string>();
      row.k = r.at("k").get<int>();
      row.t = r.at("t").get<int>();
      row.value = r.at("value").get<double>();
      if (!r.at("std_error").is_null()) row.std_error = r.at("std_error").get<double>();
      row.unit = r.at("unit").get<std::string>();
      report.rows.push_back(std::move(row));
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParseError, e.what());
  }
  return report;
}

std::string plan_json(const PartitionPlan& plan) {
  ojson j;
  j["k"] = plan.k;
  j["t"] = plan.t;
  j["allocation"] = plan.allocation;
  j["schedule"] = plan.schedule;
  return j.dump();
}

void write_per_problem_csv(std::ostream& out, const EvalDataset& dataset, const PassEstimate& estimate) {
  out << "problem_id,k,t,value\n";
  for (std::size_t i = 0; i < estimate.per_problem.size(); ++i)
    out << fmt::format("{},{},{},{:.6f}\n", csv_field(dataset.problems()[i]), estimate.k, estimate.t,
                       round_fraction(estimate.per_problem[i]));
}

void write_per_problem_json(std::ostream& out, const EvalDataset& dataset, const PassEstimate& estimate) {
  ojson rows = ojson::array();
  for (std::size_t i = 0; i < estimate.per_problem.size(); ++i) {
    ojson r;
    r["problem_id"] = dataset.problems()[i];
    r["k"] = estimate.k;
    r["t"] = estimate.t;
    r["value"] = round_fraction(estimate.per_problem[i]);
    rows.push_back(std::move(r));
  }
  out << rows.dump(2) << '\n';
}

void write_dynamics_json(std::ostream& out, const TrajectoryMatrix& trajectories, const ForgettingReport& report,
                         const ReportMetadata& metadata) {
  ojson j;
  j["metadata"] = metadata_json(metadata);
  j["unit"] = "percent";
  j["num_problems"] = report.num_problems;
  j["num_checkpoints"] = trajectories.num_checkpoints();
  j["p_ft"] = round_percent(report.p_ft);
  j["p_ecs"] = round_percent(report.p_ecs);
  j["p_tfs"] = round_percent(report.p_tfs);
  j["ever_forgotten_pct"] = round_percent(report.ever_forgotten_pct);
  j["p_lost"] = report.p_lost ? ojson(round_percent(*report.p_lost)) : ojson(nullptr);
  ojson counts;
  counts["final_correct"] = report.final_correct;
  counts["ever_correct"] = report.ever_correct;
  counts["forgotten"] = report.forgotten();
  counts["ever_forgotten"] = report.ever_forgotten;
  counts["lost"] = report.lost ? ojson(*report.lost) : ojson(nullptr);
  j["counts"] = std::move(counts);
  out << j.dump(2) << '\n';
}

void write_transitions_csv(std::ostream& out, const TrajectoryMatrix& trajectories,
                           const ForgettingReport& report) {
  out << "problem_id,step,event\n";
  for (int i = 0; i < trajectories.num_problems(); ++i) {
    const auto& row = report.transitions[i];
    for (std::size_t s = 0; s < row.size(); ++s)
      out << csv_field(trajectories.problems()[i]) << ',' << s << ',' << transition_name(row[s]) << '\n';
  }
}

}  // namespace temporal
