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

// temporal-eval: command-line front end.
//
// Exit codes: 0 success, 2 validation error, 3 I/O error.

#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "temporal/aggregation.hpp"
#include "temporal/dataset.hpp"
#include "temporal/dynamics.hpp"
#include "temporal/error.hpp"
#include "temporal/estimator.hpp"
#include "temporal/kernels.hpp"
#include "temporal/partition.hpp"
#include "temporal/report.hpp"
#include "temporal/simulator.hpp"

namespace {

using namespace temporal;

constexpr int kExitValidation = 2;
constexpr int kExitIo = 3;

struct CommonOptions {
  std::string out;
  std::string format = "json";
  std::uint64_t seed = 0;
  bool deterministic = false;
  int threads = 0;
};

// Writes to --out when given, stdout otherwise.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (path.empty() || path == "-") return;
    file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
    if (!*file_) throw Error(ErrorCode::kIoError, "cannot open " + path + " for writing");
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }
  void finish() {
    stream().flush();
    if (!stream()) throw Error(ErrorCode::kIoError, "write failed");
  }

 private:
  std::unique_ptr<std::ofstream> file_;
};

void warn_stats(const LoadStats& stats, const std::string& path) {
  if (stats.unknown_fields > 0)
    std::cerr << "warning: " << path << ": ignored " << stats.unknown_fields << " unknown field(s)\n";
  if (stats.skipped_base_records > 0)
    std::cerr << "warning: " << path << ": skipped " << stats.skipped_base_records << " base-model record(s)\n";
}

EvalDataset load(const std::string& path) {
  LoadStats stats;
  auto dataset = load_dataset(std::filesystem::path(path), &stats);
  warn_stats(stats, path);
  return dataset;
}

ReportMetadata metadata_for(const CommonOptions& common, const std::string& dataset_path,
                            const std::string& dataset_hash, bool seeded) {
  ReportMetadata m;
  m.dataset = dataset_path;
  m.dataset_hash = dataset_hash;
  if (seeded) m.seed = common.seed;
  if (!common.deterministic) m.timestamp = current_timestamp();
  return m;
}

void emit_report(const CommonOptions& common, const MetricReport& report) {
  Output out(common.out);
  if (common.format == "csv") {
    write_csv(out.stream(), report);
  } else {
    write_json(out.stream(), report);
  }
  out.finish();
}

void add_common(CLI::App* cmd, CommonOptions& common, bool seeded, bool formatted) {
  cmd->add_option("--out", common.out, "Output path (default: stdout)");
  if (formatted)
    cmd->add_option("--format", common.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  if (seeded) cmd->add_option("--seed", common.seed, "Random seed");
  cmd->add_flag("--deterministic", common.deterministic, "Omit the timestamp from report metadata");
  cmd->add_option("--threads", common.threads, "OpenMP threads (0: runtime default)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Checkpoint-aware evaluation: Pass@k|t, Maj@k|t, BoN@k|t and forgetting dynamics"};
  app.require_subcommand(1);
  CommonOptions common;
  std::function<void()> action;

  // plan
  int plan_k = 0, plan_t = 0;
  auto* plan = app.add_subcommand("plan", "Print the round-robin allocation and draw schedule");
  plan->add_option("--k", plan_k, "Sample budget")->required();
  plan->add_option("--t", plan_t, "Number of checkpoints")->required();
  plan->add_option("--out", common.out, "Output path (default: stdout)");
  plan->callback([&] {
    action = [&] {
      Output out(common.out);
      out.stream() << plan_json(balanced_partition(plan_k, plan_t)) << '\n';
      out.finish();
    };
  });

  // passk
  std::string input;
  int k = 1, t = 1;
  bool per_problem = false;
  auto* passk = app.add_subcommand("passk", "Unbiased Pass@k|t estimate");
  passk->add_option("--input", input, "Generation records (JSONL)")->required();
  passk->add_option("--k", k, "Sample budget")->required();
  passk->add_option("--t", t, "Number of latest checkpoints");
  passk->add_flag("--per-problem", per_problem, "Emit per-problem estimates");
  add_common(passk, common, false, true);
  passk->callback([&] {
    action = [&] {
      const auto dataset = load(input);
      const auto estimate = pass_at_k_given_t(dataset, k, t);
      if (per_problem) {
        Output out(common.out);
        if (common.format == "csv") {
          write_per_problem_csv(out.stream(), dataset, estimate);
        } else {
          write_per_problem_json(out.stream(), dataset, estimate);
        }
        out.finish();
        return;
      }
      MetricReport report;
      report.rows.push_back(MetricRow{"pass", k, t, estimate.value, std::nullopt, "fraction"});
      report.metadata = metadata_for(common, input, dataset_digest(dataset), false);
      emit_report(common, report);
    };
  });

  // aggregate
  std::string strategy = "majority";
  std::string tie_rule = "uniform";
  int replicates = 1000;
  auto* aggregate = app.add_subcommand("aggregate", "Monte Carlo Maj@k|t or BoN@k|t");
  aggregate->add_option("--input", input, "Generation records (JSONL)")->required();
  aggregate->add_option("--strategy", strategy, "majority or bon")->check(CLI::IsMember({"majority", "bon"}));
  aggregate->add_option("--k", k, "Sample budget")->required();
  aggregate->add_option("--t", t, "Number of latest checkpoints");
  aggregate->add_option("--replicates", replicates, "Monte Carlo replicates");
  aggregate->add_option("--tie-rule", tie_rule, "Majority tie rule: uniform or latest")
      ->check(CLI::IsMember({"uniform", "latest"}));
  add_common(aggregate, common, true, true);
  aggregate->callback([&] {
    action = [&] {
      const auto dataset = load(input);
      const auto s = parse_strategy(strategy);
      const auto e = s == Strategy::kMajority
                         ? majority_at_k_given_t(dataset, k, t, replicates, common.seed, parse_tie_rule(tie_rule))
                         : best_of_n_at_k_given_t(dataset, k, t, replicates, common.seed);
      MetricReport report;
      report.rows.push_back(MetricRow{std::string(strategy_name(s)), k, t, e.value, e.std_error, "fraction"});
      report.metadata = metadata_for(common, input, dataset_digest(dataset), true);
      emit_report(common, report);
    };
  });

  // dynamics
  std::string base_path, transitions_path;
  auto* dynamics = app.add_subcommand("dynamics", "Forgetting scores over greedy trajectories");
  dynamics->add_option("--input", input, "One record per (problem, checkpoint), JSONL")->required();
  dynamics->add_option("--base", base_path, "Base-model records, one per problem");
  dynamics->add_option("--transitions", transitions_path, "Write per-problem transitions CSV here");
  add_common(dynamics, common, false, false);
  dynamics->callback([&] {
    action = [&] {
      LoadStats stats;
      auto trajectories = load_trajectories(std::filesystem::path(input), &stats);
      warn_stats(stats, input);
      if (!base_path.empty()) {
        std::ifstream base_in(base_path, std::ios::binary);
        if (!base_in) throw Error(ErrorCode::kIoError, "cannot open " + base_path);
        auto base = load_base_correct(base_in, trajectories.problems());
        trajectories = TrajectoryMatrix(trajectories.problems(), trajectories.matrix(), std::move(base));
      }
      const auto report = forgetting_report(trajectories);
      Output out(common.out);
      write_dynamics_json(out.stream(), trajectories, report, metadata_for(common, input, "", false));
      out.finish();
      if (!transitions_path.empty()) {
        Output csv(transitions_path);
        write_transitions_csv(csv.stream(), trajectories, report);
        csv.finish();
      }
    };
  });

  // simulate
  SimConfig sim;
  std::string rate_model = "iid_uniform";
  auto* simulate_cmd = app.add_subcommand("simulate", "Write a synthetic dataset as JSONL");
  simulate_cmd->add_option("--problems", sim.num_problems, "Number of problems")->required();
  simulate_cmd->add_option("--checkpoints", sim.num_checkpoints, "Number of checkpoints")->required();
  simulate_cmd->add_option("--n", sim.samples_per_cell, "Samples per (problem, checkpoint)")->required();
  simulate_cmd->add_option("--rate-model", rate_model, "iid_uniform, beta or oscillating")
      ->check(CLI::IsMember({"iid_uniform", "beta", "oscillating"}));
  simulate_cmd->add_option("--alpha", sim.alpha, "Beta model alpha");
  simulate_cmd->add_option("--beta", sim.beta, "Beta model beta");
  simulate_cmd->add_option("--base-rate", sim.base_rate, "Oscillating model mean rate");
  simulate_cmd->add_option("--amplitude", sim.amplitude, "Oscillating model amplitude");
  simulate_cmd->add_option("--period", sim.period, "Oscillating model period in checkpoints");
  simulate_cmd->add_option("--collision-rate", sim.collision_rate, "Probability a wrong answer is shared");
  add_common(simulate_cmd, common, true, false);
  simulate_cmd->callback([&] {
    action = [&] {
      sim.rate_model = parse_rate_model(rate_model);
      sim.seed = common.seed;
      const auto dataset = simulate(sim);
      Output out(common.out);
      write_jsonl(out.stream(), dataset);
      out.finish();
    };
  });

  // sweep
  std::string metric = "pass";
  std::vector<int> k_values, t_values{1};
  auto* sweep_cmd = app.add_subcommand("sweep", "Metric table over (k, t) pairs");
  sweep_cmd->add_option("--input", input, "Generation records (JSONL)")->required();
  sweep_cmd->add_option("--metric", metric, "pass, majority or bon")
      ->check(CLI::IsMember({"pass", "majority", "bon"}));
  sweep_cmd->add_option("--k", k_values, "Comma-separated budgets")->delimiter(',');
  sweep_cmd->add_option("--t", t_values, "Comma-separated checkpoint counts")->delimiter(',');
  sweep_cmd->add_option("--replicates", replicates, "Monte Carlo replicates (majority, bon)");
  sweep_cmd->add_option("--tie-rule", tie_rule, "Majority tie rule: uniform or latest")
      ->check(CLI::IsMember({"uniform", "latest"}));
  add_common(sweep_cmd, common, true, true);
  sweep_cmd->callback([&] {
    action = [&] {
      const auto dataset = load(input);
      const auto m = parse_metric(metric);
      auto report = sweep(dataset, m, k_values, t_values, replicates, common.seed, parse_tie_rule(tie_rule));
      report.metadata = metadata_for(common, input, dataset_digest(dataset), m != Metric::kPass);
      emit_report(common, report);
    };
  });

  // compare-pools
  std::vector<std::string> inputs;
  auto* pools = app.add_subcommand("compare-pools", "Majority vote over a model pool vs temporal sampling");
  pools->add_option("--input", inputs, "One dataset per pool member (repeat the flag)")->required();
  pools->add_option("--k", k, "Sample budget")->required();
  pools->add_option("--replicates", replicates, "Monte Carlo replicates");
  pools->add_option("--tie-rule", tie_rule, "Majority tie rule: uniform or latest")
      ->check(CLI::IsMember({"uniform", "latest"}));
  add_common(pools, common, true, true);
  pools->callback([&] {
    action = [&] {
      std::vector<EvalDataset> datasets;
      for (const auto& path : inputs) datasets.push_back(load(path));
      auto report = compare_pools(datasets, k, replicates, common.seed, parse_tie_rule(tie_rule));
      std::string joined;
      for (const auto& path : inputs) joined += (joined.empty() ? "" : "+") + path;
      auto metadata = metadata_for(common, joined, report.metadata.dataset_hash, true);
      report.metadata = std::move(metadata);
      emit_report(common, report);
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitValidation;
  }

  try {
    set_num_threads(common.threads);
    action();
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.is_io() ? kExitIo : kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  }
  return 0;
}
