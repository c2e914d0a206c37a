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

#include <span>

#include "newsrank/models/forecast.h"

namespace newsrank {

// Least-squares line through (K-k+1, f_{K-k+1}) .. (K, f_K), evaluated at
// `target_step`. Throws InsufficientHistoryError when K < k.
double baseline_predict(std::span<const double> ts, int window,
                        int target_step);

// Linear extrapolation of the most recent observations; ignores static
// features.
class BaselineModel final : public Forecaster {
 public:
  explicit BaselineModel(int window = 3, std::size_t static_dim = 0);

  std::string kind() const override { return "baseline"; }
  int min_history() const override { return window_; }
  int order() const override { return window_; }
  std::size_t static_dim() const override { return static_dim_; }

  Forecast forecast(std::span<const double> ts, std::span<const double> statics,
                    int target_step, bool with_interval) const override;
  void write_params(std::ostream& out) const override;

 private:
  int window_;
  std::size_t static_dim_;
};

}  // namespace newsrank
