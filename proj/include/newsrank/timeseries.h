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
#include <map>
#include <vector>

#include "newsrank/ingest.h"
#include "newsrank/time.h"

namespace newsrank {

// Hourly (by default) cumulative mention counts anchored at publication.
// cumulative[k-1] holds the mentions in [t0, t0 + k*step).
struct MentionSeries {
  Timestamp t0;
  Duration step = kHour;
  std::vector<std::int64_t> cumulative;

  int size() const { return static_cast<int>(cumulative.size()); }
};

// Prediction target horizon; steps * step == delta.
class Horizon {
 public:
  Horizon(Duration delta = Duration{24 * 3600}, Duration step = kHour);

  Duration delta() const { return delta_; }
  Duration step() const { return step_; }
  int steps() const { return steps_; }

 private:
  Duration delta_;
  Duration step_;
  int steps_;
};

// Series with every complete step up to t1. Mentions before t0 fall into the
// first bucket. Throws DomainError when t1 <= t0 or step <= 0.
MentionSeries build_series(const Matching& matching, Timestamp t1,
                           Duration step = kHour);

// Distinct mentions in the closed interval [t0, t0 + delta]. Throws
// NotMatureError when observed_until < t0 + delta.
std::int64_t target_mentions(const Matching& matching, Duration delta,
                             Timestamp observed_until);

// Smallest elapsed time after which at least `fraction` of all mentions have
// happened. Throws DomainError for zero mentions or fraction outside (0, 1].
Duration lifespan(const Matching& matching, double fraction = 0.9);

// Lifespan counts keyed by whole-hour bucket, over matchings with at least
// `min_mentions` mentions.
std::map<std::int64_t, std::int64_t> lifespan_histogram(
    const std::vector<Matching>& matchings, std::int64_t min_mentions = 100,
    double fraction = 0.9);

}  // namespace newsrank
