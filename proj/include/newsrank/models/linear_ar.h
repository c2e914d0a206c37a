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

#include <vector>

#include "newsrank/models/forecast.h"

namespace newsrank {

// One-step linear model over [k lags, K, statics, 1].
class LinearArModel final : public Forecaster {
 public:
  LinearArModel(int order, std::size_t static_dim,
                std::vector<double> coefficients);

  std::string kind() const override { return "linear_ar"; }
  int min_history() const override { return order_; }
  int order() const override { return order_; }
  std::size_t static_dim() const override { return static_dim_; }

  // Coefficients for the regressors followed by the intercept.
  const std::vector<double>& coefficients() const { return coefficients_; }

  double predict_one(std::span<const double> regressors) const;

  Forecast forecast(std::span<const double> ts, std::span<const double> statics,
                    int target_step, bool with_interval) const override;
  void write_params(std::ostream& out) const override;

 private:
  int order_;
  std::size_t static_dim_;
  std::vector<double> coefficients_;
};

struct LinearArFit {
  LinearArModel model;
  bool rank_deficient = false;
  std::size_t rank = 0;
};

// Minimum-norm ordinary least squares. A rank-deficient design still fits
// and sets rank_deficient (also reported on std::clog).
LinearArFit linear_ar_fit(const ArDataset& data, int order,
                          std::size_t static_dim);

}  // namespace newsrank
