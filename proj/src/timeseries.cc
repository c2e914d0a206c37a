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

#include "newsrank/timeseries.h"

#include <algorithm>
#include <cmath>

#include "newsrank/error.h"

namespace newsrank {

Horizon::Horizon(Duration delta, Duration step)
    : delta_(delta), step_(step), steps_(0) {
  if (step <= Duration::zero() || delta < step ||
      delta.count() % step.count() != 0) {
    throw DomainError("horizon must be a positive whole number of steps");
  }
  steps_ = static_cast<int>(delta / step);
}

MentionSeries build_series(const Matching& matching, Timestamp t1,
                           Duration step) {
  const Timestamp t0 = matching.article.published_at;
  if (t1 <= t0) throw DomainError("series end must be after publication");
  if (step <= Duration::zero()) throw DomainError("step must be positive");

  MentionSeries series;
  series.t0 = t0;
  series.step = step;
  const auto steps = static_cast<std::size_t>((t1 - t0) / step);
  std::vector<std::int64_t> per_bucket(steps, 0);
  for (const Mention& m : matching.mentions) {
    const auto elapsed = m.published_at - t0;
    const std::int64_t bucket =
        elapsed < Duration::zero() ? 0 : elapsed / step;
    if (bucket < static_cast<std::int64_t>(steps)) ++per_bucket[bucket];
  }
  series.cumulative.resize(steps);
  std::int64_t running = 0;
  for (std::size_t k = 0; k < steps; ++k) {
    running += per_bucket[k];
    series.cumulative[k] = running;
  }
  return series;
}

std::int64_t target_mentions(const Matching& matching, Duration delta,
                             Timestamp observed_until) {
  const Timestamp end = matching.article.published_at + delta;
  if (observed_until < end) {
    throw NotMatureError("article " + matching.article.url +
                         " is not fully observed until " +
                         format_timestamp(end));
  }
  return std::count_if(
      matching.mentions.begin(), matching.mentions.end(),
      [&](const Mention& m) { return m.published_at <= end; });
}

Duration lifespan(const Matching& matching, double fraction) {
  if (matching.mentions.empty()) {
    throw DomainError("lifespan undefined for an article without mentions");
  }
  if (!(fraction > 0.0 && fraction <= 1.0)) {
    throw DomainError("lifespan fraction must lie in (0, 1]");
  }
  const Timestamp t0 = matching.article.published_at;
  std::vector<Duration> elapsed;
  elapsed.reserve(matching.mentions.size());
  for (const Mention& m : matching.mentions) {
    elapsed.push_back(std::max(Duration::zero(), m.published_at - t0));
  }
  std::sort(elapsed.begin(), elapsed.end());
  const double total = static_cast<double>(elapsed.size());
  // Smallest count c with c >= fraction * total; the slack absorbs rounding
  // in products such as 0.9 * 10.
  auto needed = static_cast<std::size_t>(std::ceil(fraction * total - 1e-9));
  needed = std::clamp<std::size_t>(needed, 1, elapsed.size());
  return elapsed[needed - 1];
}

std::map<std::int64_t, std::int64_t> lifespan_histogram(
    const std::vector<Matching>& matchings, std::int64_t min_mentions,
    double fraction) {
  std::map<std::int64_t, std::int64_t> histogram;
  for (const Matching& m : matchings) {
    const auto n = static_cast<std::int64_t>(m.mentions.size());
    if (n == 0 || n < min_mentions) continue;
    ++histogram[lifespan(m, fraction) / kHour];
  }
  return histogram;
}

}  // namespace newsrank
