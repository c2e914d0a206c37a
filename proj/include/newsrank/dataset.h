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
#include <vector>

#include "newsrank/features.h"
#include "newsrank/ingest.h"
#include "newsrank/timeseries.h"

namespace newsrank {

// A fully observed article ready for training or evaluation.
struct LabeledExample {
  std::string url;
  std::vector<std::int64_t> series;  // f_1..f_N
  std::vector<double> statics;
  std::int64_t target = 0;  // mentions in [t0, t0 + delta]
};

// Examples for every matching whose horizon is observed by `observed_until`;
// immature articles are skipped.
std::vector<LabeledExample> prepare_examples(
    const std::vector<Matching>& matchings, Timestamp observed_until,
    const Horizon& horizon, const FeatureSpace& space);

// Matchings whose target window ends by `observed_until`.
std::vector<Matching> mature_matchings(const std::vector<Matching>& matchings,
                                       Timestamp observed_until,
                                       const Horizon& horizon);

std::vector<double> as_doubles(std::span<const std::int64_t> values);

}  // namespace newsrank
