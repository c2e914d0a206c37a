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


#include "doctest.h"
#include "support/properties.h"

namespace newsrank::testing {
namespace {

constexpr int kCases = 500;
constexpr std::uint64_t kSeed = 20181201;

void expect(const PropertyResult& r) {
  INFO(r.name << ": " << r.first_failure);
  CHECK(r.cases >= kCases);
  CHECK(r.failures == 0);
}

TEST_CASE("merge is idempotent") { expect(prop_merge_idempotent(kCases, kSeed)); }
TEST_CASE("merge ignores input order") { expect(prop_merge_permutation(kCases, kSeed)); }
TEST_CASE("merge leaves no mergeable pair") { expect(prop_merge_complete(kCases, kSeed)); }
TEST_CASE("merge conserves mentions") { expect(prop_mention_conservation(kCases, kSeed)); }
TEST_CASE("canonical URLs are fixed points") { expect(prop_canonical_idempotent(kCases, kSeed)); }
TEST_CASE("ingest restores the anomaly ledger") { expect(prop_anomaly_ledger(kCases, kSeed)); }
TEST_CASE("forecasts never decrease") { expect(prop_monotone_forecasts(kCases, kSeed)); }
TEST_CASE("balanced sets have three equal strata") { expect(prop_balanced_set(kCases, kSeed)); }
TEST_CASE("ranking is a permutation of the window") { expect(prop_ranking_permutation(kCases, kSeed)); }
TEST_CASE("metric bounds and scale invariance") { expect(prop_metrics(kCases, kSeed)); }
TEST_CASE("bootstrap point lies within the replicates") { expect(prop_bootstrap_point(kCases, kSeed)); }
TEST_CASE("series invariants") { expect(prop_series(kCases, kSeed)); }
TEST_CASE("feature invariants") { expect(prop_features(kCases, kSeed)); }
TEST_CASE("forest predicts the mean of its trees") { expect(prop_forest_mean(kCases, kSeed)); }

}  // namespace
}  // namespace newsrank::testing
