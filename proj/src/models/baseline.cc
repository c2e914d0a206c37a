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

#include "newsrank/models/baseline.h"

#include <ostream>

#include "newsrank/error.h"

namespace newsrank {

double baseline_predict(std::span<const double> ts, int window,
                        int target_step) {
  const int k = static_cast<int>(ts.size());
  if (window < 2) throw InputError("baseline window must be at least 2");
  if (k < window) {
    throw InsufficientHistoryError("baseline needs " + std::to_string(window) +
                                   " observations, got " + std::to_string(k));
  }
  // Centered closed-form fit over steps K-window+1..K.
  double mean_x = 0.0, mean_y = 0.0;
  for (int i = k - window; i < k; ++i) {
    mean_x += i + 1;
    mean_y += ts[i];
  }
  mean_x /= window;
  mean_y /= window;
  double sxy = 0.0, sxx = 0.0;
  for (int i = k - window; i < k; ++i) {
    const double dx = (i + 1) - mean_x;
    sxy += dx * (ts[i] - mean_y);
    sxx += dx * dx;
  }
  const double slope = sxy / sxx;
  return mean_y + slope * (target_step - mean_x);
}

BaselineModel::BaselineModel(int window, std::size_t static_dim)
    : window_(window), static_dim_(static_dim) {
  if (window < 2) throw ConfigError("baseline window must be at least 2");
}

Forecast BaselineModel::forecast(std::span<const double> ts,
                                 std::span<const double> statics,
                                 int target_step, bool) const {
  check_inputs(ts, statics, target_step);
  Forecast f;
  for (int step = static_cast<int>(ts.size()) + 1; step <= target_step;
       ++step) {
    f.values.push_back(baseline_predict(ts, window_, step));
  }
  clamp_monotone(f.values, ts.back());
  return f;
}

void BaselineModel::write_params(std::ostream& out) const {
  out << nlohmann::json{{"window", window_}, {"static_dim", static_dim_}}
             .dump();
}

}  // namespace newsrank
