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

#include "newsrank/models/forecast.h"

#include <algorithm>

#include "newsrank/error.h"

namespace newsrank {

void clamp_monotone(std::vector<double>& values, double floor) {
  double previous = floor;
  for (double& v : values) {
    v = std::max(v, previous);
    previous = v;
  }
}

void Forecaster::check_inputs(std::span<const double> ts,
                              std::span<const double> statics,
                              int target_step) const {
  if (statics.size() != static_dim()) {
    throw InputError(kind() + " model expects " +
                     std::to_string(static_dim()) + " static features, got " +
                     std::to_string(statics.size()));
  }
  if (static_cast<int>(ts.size()) < min_history()) {
    throw InsufficientHistoryError(
        kind() + " model needs at least " + std::to_string(min_history()) +
        " observed steps, got " + std::to_string(ts.size()));
  }
  if (target_step < static_cast<int>(ts.size())) {
    throw InputError("target step precedes the observed series");
  }
}

std::vector<double> ar_regressors(std::span<const double> lags, int step_index,
                                  std::span<const double> statics) {
  std::vector<double> row;
  row.reserve(lags.size() + 1 + statics.size());
  row.insert(row.end(), lags.begin(), lags.end());
  row.push_back(static_cast<double>(step_index));
  row.insert(row.end(), statics.begin(), statics.end());
  return row;
}

std::vector<ArSample> make_ar_samples(std::span<const std::int64_t> series,
                                      int order,
                                      std::span<const double> statics) {
  if (order < 1) throw InputError("autoregressive order must be positive");
  std::vector<ArSample> samples;
  const int n = static_cast<int>(series.size());
  std::vector<double> lags(static_cast<std::size_t>(order));
  for (int start = 0; start + order < n; ++start) {
    for (int i = 0; i < order; ++i) {
      lags[i] = static_cast<double>(series[start + i]);
    }
    samples.push_back({ar_regressors(lags, start + order, statics),
                       static_cast<double>(series[start + order])});
  }
  return samples;
}

void ArDataset::append(const ArSample& sample) {
  if (dim == 0) dim = sample.input.size();
  if (sample.input.size() != dim) {
    throw InputError("autoregressive sample dimension mismatch");
  }
  x.insert(x.end(), sample.input.begin(), sample.input.end());
  y.push_back(sample.target);
}

Forecast predict_recursive(const OneStepPredictor& one_step, int order,
                           std::span<const double> ts,
                           std::span<const double> statics, int target_step) {
  if (static_cast<int>(ts.size()) < order) {
    throw InsufficientHistoryError("series shorter than the model order");
  }
  std::vector<double> history(ts.begin(), ts.end());
  Forecast forecast;
  for (int known = static_cast<int>(ts.size()); known < target_step; ++known) {
    const std::span<const double> lags(history.data() + known - order,
                                       static_cast<std::size_t>(order));
    const double next =
        std::max(one_step(ar_regressors(lags, known, statics)), history.back());
    history.push_back(next);
    forecast.values.push_back(next);
  }
  return forecast;
}

}  // namespace newsrank
