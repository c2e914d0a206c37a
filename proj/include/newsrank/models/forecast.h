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
#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace newsrank {

// Predicted cumulative values for steps K+1..N, optionally with per-step
// prediction intervals.
struct Forecast {
  std::vector<double> values;
  std::vector<std::pair<double, double>> intervals;

  bool empty() const { return values.empty(); }
  // Prediction at step N; `last_observed` when nothing had to be forecast.
  double final_value(double last_observed) const {
    return values.empty() ? last_observed : values.back();
  }
};

// Cumulative counts cannot decrease: values[i] = max(values[i], previous),
// starting from `floor`.
void clamp_monotone(std::vector<double>& values, double floor);

// Common interface of the four forecasters. `ts` holds f_1..f_K, `statics`
// the content and context bits, `target_step` is N.
class Forecaster {
 public:
  virtual ~Forecaster() = default;

  virtual std::string kind() const = 0;
  // Number of observed steps the model needs before it can forecast.
  virtual int min_history() const = 0;
  virtual int order() const = 0;
  virtual std::size_t static_dim() const = 0;
  virtual bool supports_interval() const { return false; }
  virtual std::string transform() const { return "none"; }

  virtual Forecast forecast(std::span<const double> ts,
                            std::span<const double> statics, int target_step,
                            bool with_interval = false) const = 0;

  // Streams the model-specific "params" JSON value.
  virtual void write_params(std::ostream& out) const = 0;

 protected:
  void check_inputs(std::span<const double> ts, std::span<const double> statics,
                    int target_step) const;
};

// Regressor row shared by the autoregressive models:
// [f_{K-k+1}, ..., f_K, K, statics...].
std::vector<double> ar_regressors(std::span<const double> lags, int step_index,
                                  std::span<const double> statics);

inline std::size_t ar_input_dim(int order, std::size_t static_dim) {
  return static_cast<std::size_t>(order) + 1 + static_dim;
}

struct ArSample {
  std::vector<double> input;
  double target = 0.0;
};

// Sliding windows over f_1..f_K: sample j (1-based) has lags f_j..f_{j+k-1},
// step index j+k-1 and target f_{j+k}. Empty when K <= k.
std::vector<ArSample> make_ar_samples(std::span<const std::int64_t> series,
                                      int order,
                                      std::span<const double> statics);

// Row-major design matrix plus targets, the training input of the AR models.
struct ArDataset {
  std::size_t dim = 0;
  std::vector<double> x;
  std::vector<double> y;

  std::size_t size() const { return y.size(); }
  std::span<const double> row(std::size_t i) const {
    return {x.data() + i * dim, dim};
  }
  void append(const ArSample& sample);
  void append(const std::vector<ArSample>& samples) {
    for (const ArSample& s : samples) append(s);
  }
};

using OneStepPredictor = std::function<double(std::span<const double>)>;

// Iterates a one-step model from K to target_step, feeding each clamped
// prediction back as the newest lag and advancing the step index.
Forecast predict_recursive(const OneStepPredictor& one_step, int order,
                           std::span<const double> ts,
                           std::span<const double> statics, int target_step);

}  // namespace newsrank
