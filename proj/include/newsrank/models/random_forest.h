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
#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

#include "json.hpp"
#include "newsrank/models/forecast.h"

namespace newsrank {

// CART regression tree stored as a flat node array. Children of an internal
// node are adjacent: right == left + 1.
class RegressionTree {
 public:
  struct Node {
    double value = 0.0;        // threshold, or the leaf mean for leaves
    std::int32_t feature = -1;  // -1 marks a leaf
    std::int32_t left = -1;

    bool is_leaf() const { return feature < 0; }
  };

  RegressionTree() = default;
  explicit RegressionTree(std::vector<Node> nodes);

  // Goes left when x[feature] <= threshold.
  double predict(std::span<const double> x) const;

  const std::vector<Node>& nodes() const { return nodes_; }
  std::size_t leaf_count() const;
  int depth() const;

  void write_json(std::ostream& out) const;
  // Accepts {"nodes": [{"feature","threshold","left","right","leaf_value"}]}.
  static RegressionTree from_json(const nlohmann::ordered_json& j);

 private:
  std::vector<Node> nodes_;
};

struct ForestOptions {
  int n_estimators = 500;
  // Draw a with-replacement bootstrap of the samples for every tree.
  bool bootstrap = true;
  // Candidate features per split; 0 means ceil(dim / 3).
  std::size_t max_features = 0;
  std::uint64_t seed = 0;
  // Worker threads for tree fitting; 0 means hardware concurrency. Results do
  // not depend on this value.
  unsigned threads = 0;
};

// Averaging ensemble of fully grown CART trees (min_samples_leaf = 1,
// unlimited depth, splits minimize the weighted child variance).
class RandomForest {
 public:
  RandomForest() = default;
  RandomForest(std::size_t dim, std::vector<RegressionTree> trees);

  static RandomForest fit(const ArDataset& data, const ForestOptions& options);

  std::size_t dim() const { return dim_; }
  const std::vector<RegressionTree>& trees() const { return trees_; }

  double predict(std::span<const double> x) const;
  std::vector<double> predict_per_tree(std::span<const double> x) const;
  // Empirical (1-coverage)/2 and 1-(1-coverage)/2 quantiles of the per-tree
  // predictions. lo <= hi always; lo <= mean <= hi is not guaranteed.
  std::pair<double, double> predict_interval(std::span<const double> x,
                                             double coverage = 0.95) const;

 private:
  void check_dim(std::span<const double> x) const;

  std::size_t dim_ = 0;
  std::vector<RegressionTree> trees_;
};

// Random forest used as a one-step autoregressive model.
class RandomForestArModel final : public Forecaster {
 public:
  RandomForestArModel(int order, std::size_t static_dim, RandomForest forest,
                      ForestOptions options = {});

  std::string kind() const override { return "rf"; }
  int min_history() const override { return order_; }
  int order() const override { return order_; }
  std::size_t static_dim() const override { return static_dim_; }
  bool supports_interval() const override { return true; }

  const RandomForest& forest() const { return forest_; }
  const ForestOptions& options() const { return options_; }

  // Point forecast: recursion on the ensemble mean. Intervals: quantiles over
  // the trees' own recursive rollouts at each step.
  Forecast forecast(std::span<const double> ts, std::span<const double> statics,
                    int target_step, bool with_interval) const override;
  void write_params(std::ostream& out) const override;

  double coverage = 0.95;

 private:
  int order_;
  std::size_t static_dim_;
  RandomForest forest_;
  ForestOptions options_;
};

RandomForestArModel rf_fit(const ArDataset& data, int order,
                           std::size_t static_dim,
                           const ForestOptions& options);

}  // namespace newsrank
