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

#include <cstddef>
#include <span>
#include <vector>

namespace newsrank {

// Linear-interpolation quantile of ascending `sorted` data (the "linear"
// method: position q * (n - 1)). q in [0, 1].
double quantile_sorted(std::span<const double> sorted, double q);

// Copies and sorts, then interpolates.
double quantile(std::vector<double> values, double q);

// Nearest-rank percentile: the ceil(p/100 * n)-th smallest value (1-based),
// p in (0, 100].
double nearest_rank_percentile(std::span<const double> sorted, double p);

double mean(std::span<const double> values);

}  // namespace newsrank
