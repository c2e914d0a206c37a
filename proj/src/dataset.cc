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

#include "newsrank/dataset.h"

namespace newsrank {

std::vector<Matching> mature_matchings(const std::vector<Matching>& matchings,
                                       Timestamp observed_until,
                                       const Horizon& horizon) {
  std::vector<Matching> out;
  for (const Matching& m : matchings) {
    if (m.article.published_at + horizon.delta() <= observed_until) {
      out.push_back(m);
    }
  }
  return out;
}

std::vector<LabeledExample> prepare_examples(
    const std::vector<Matching>& matchings, Timestamp observed_until,
    const Horizon& horizon, const FeatureSpace& space) {
  std::vector<LabeledExample> examples;
  for (const Matching& m : matchings) {
    const Timestamp end = m.article.published_at + horizon.delta();
    if (end > observed_until) continue;
    LabeledExample ex;
    ex.url = m.article.url;
    ex.series = build_series(m, end, horizon.step()).cumulative;
    ex.statics = space.extract(m.article, {}).static_features();
    ex.target = target_mentions(m, horizon.delta(), observed_until);
    examples.push_back(std::move(ex));
  }
  return examples;
}

std::vector<double> as_doubles(std::span<const std::int64_t> values) {
  return {values.begin(), values.end()};
}

}  // namespace newsrank
