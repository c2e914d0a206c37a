// Copyright 2026 The Newsrank Authors.
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

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "newsrank/dataset.h"
#include "newsrank/models/forecast.h"
#include "newsrank/random.h"

namespace newsrank {

struct ActualPredicted {
  double actual = 0.0;
  double predicted = 0.0;
};

// Mean of |actual - predicted| / actual. Throws DomainError when an actual
// value is zero; callers restrict to the top articles first.
double mape(std::span<const ActualPredicted> pairs);

// DCG of the first k items ranked by prediction (ties: lower actual first)
// divided by the DCG of the ideal ranking; 1 when the ideal DCG is zero.
// Gains are the raw actual values, discounts 1 / log2(rank + 1).
double ndcg_at_k(std::span<const ActualPredicted> items, std::size_t k);

struct EvalConfig {
  std::vector<int> start_steps{5, 10, 15, 20};
  std::size_t k_top = 100;
  int n_bootstrap = 100;
  std::size_t bootstrap_size = 2000;
  std::uint64_t seed = 0;

  void validate(int target_step) const;
};

struct MetricSummary {
  // Mean of the bootstrap replicates.
  double point = 0.0;
  double q025 = 0.0;
  double q50 = 0.0;
  double q975 = 0.0;
  std::vector<double> replicates;
};

struct StartTimeResult {
  int start_step = 0;
  MetricSummary mape;
  MetricSummary ndcg;
};

struct EvalReport {
  std::string model_kind;
  EvalConfig config;
  std::size_t n_articles = 0;
  std::vector<StartTimeResult> results;

  const StartTimeResult& at(int start_step) const;
  nlohmann::ordered_json to_json() const;
};

// Bootstrap of MAPE over the top-k articles (by actual value, zero actuals
// excluded) and NDCG@k over the whole resample. Replicate b always draws the
// same article indices for a given seed, so models evaluated with one config
// see identical resamples.
std::pair<MetricSummary, MetricSummary> bootstrap_metrics(
    std::span<const ActualPredicted> predictions, const EvalConfig& config);

// Forecast of f_N made after observing the first `start_step` values.
double predict_at(const Forecaster& model, const LabeledExample& example,
                  int start_step, int target_step);

// Throws CorpusError when fewer than bootstrap_size examples are given.
EvalReport bootstrap_eval(std::span<const LabeledExample> validation,
                          const Forecaster& model, const EvalConfig& config,
                          int target_step);

// Stratified subsample with M = floor(0.05 * n): the M largest targets, M
// drawn from [p75, p95) and M drawn from below p75 (nearest-rank
// percentiles). Strata with at least M members are sampled without
// replacement, smaller ones with replacement, empty ones fall back to the
// whole set. Returns indices into `targets`; size is exactly 3M.
std::vector<std::size_t> balance_training_set(std::span<const double> targets,
                                              Rng& rng);

}  // namespace newsrank
