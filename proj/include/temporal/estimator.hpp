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

// Pass@k and its multi-checkpoint generalisation Pass@k|t.
//
// With N samples per (problem, checkpoint) cell and C_ij of them correct,
// the per-problem estimate is
//
//   P_i = 1 - prod_j  binom(N - C_ij, k_j) / binom(N, k_j)
//
// where k_j is the round-robin allocation of k over the t latest
// checkpoints. Each ratio is the probability that k_j draws without
// replacement miss every correct sample; its expectation over
// C_ij ~ Binomial(N, r_ij) is (1 - r_ij)^k_j, so P_i is unbiased for
// 1 - prod_j (1 - r_ij)^k_j.

#pragma once

#include <vector>

#include "temporal/dataset.hpp"
#include "temporal/grid.hpp"

namespace temporal {

struct PassEstimate {
  int k = 0;
  int t = 0;
  double value = 0.0;               // unweighted mean of per_problem
  std::vector<double> per_problem;  // each in [0, 1]
};

// Ground-truth single-sample pass rates r_ij, sampling-order columns.
class TruePassRate {
 public:
  explicit TruePassRate(Grid<double> rates);

  int num_problems() const noexcept { return rates_.rows(); }
  int num_checkpoints() const noexcept { return rates_.cols(); }
  double operator()(int problem, int checkpoint) const { return rates_(problem, checkpoint); }
  const Grid<double>& matrix() const noexcept { return rates_; }

 private:
  Grid<double> rates_;
};

// binom(n - c, kj) / binom(n, kj) as the telescoping product
// prod_{m < kj} (n - c - m) / (n - m). Exactly 0 once a factor hits zero,
// exactly 1 for kj = 0.
double survival_ratio(int n, int c, int kj);

// Standard Pass@k on one checkpoint (sampling order, 0 = latest).
PassEstimate pass_at_k(const EvalDataset& dataset, int k, int checkpoint = 0);

PassEstimate pass_at_k_given_t(const EvalDataset& dataset, int k, int t);
PassEstimate pass_at_k_given_t(const CountMatrix& counts, int samples_per_cell, int k, int t);

// Closed-form Pass@k|t from known rates; the analytic target of the estimator.
PassEstimate exact_pass_at_k_given_t(const TruePassRate& rates, int k, int t);

}  // namespace temporal
