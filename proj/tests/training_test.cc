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


#include "newsrank/training.h"

#include <sstream>

#include "doctest.h"
#include "newsrank/error.h"
#include "newsrank/model_io.h"
#include "support/corpus.h"

namespace newsrank {
namespace {

std::string serialized(const TrainingRun& run) {
  std::ostringstream out;
  write_model(out, *run.model, run.features);
  return out.str();
}

TEST_CASE("model kind names") {
  for (ModelKind k : {ModelKind::kBaseline, ModelKind::kLinearAr,
                      ModelKind::kRandomForest, ModelKind::kSeq2Seq}) {
    CHECK(parse_model_kind(model_kind_name(k)) == k);
  }
  CHECK_THROWS_AS(parse_model_kind("gbm"), ConfigError);
}

TEST_CASE("training from a store") {
  const Store store = testing::synthetic_store(400, 21);
  FeatureConfig fc;
  fc.n_top_publishers = 5;
  const Horizon horizon;
  TrainOptions o;
  o.forest.n_estimators = 5;
  o.seed = 2;

  SUBCASE("balanced forest") {
    const TrainingRun run = train_from_store(store, fc, horizon, o);
    CHECK(run.model->kind() == "rf");
    CHECK(run.features.publishers.size() == 5);
    CHECK(run.model->static_dim() == fc.keywords.size() + 5);
    CHECK(run.mature_articles > 0);
    CHECK(run.mature_articles <= 400);
    CHECK(run.training_examples == 3 * (run.mature_articles / 20));
    const TrainingRun again = train_from_store(store, fc, horizon, o);
    CHECK(serialized(run) == serialized(again));
  }
  SUBCASE("unbalanced linear AR") {
    o.kind = ModelKind::kLinearAr;
    o.balance = false;
    const TrainingRun run = train_from_store(store, fc, horizon, o);
    CHECK(run.model->kind() == "linear_ar");
    CHECK(run.training_examples == run.mature_articles);
  }
  SUBCASE("seq2seq") {
    o.kind = ModelKind::kSeq2Seq;
    o.s2s.hidden = 4;
    o.s2s.dense = 4;
    o.s2s_train.schedule = {{1, 1e-3}};
    const TrainingRun run = train_from_store(store, fc, horizon, o);
    CHECK(run.model->kind() == "s2s");
    const TrainingRun again = train_from_store(store, fc, horizon, o);
    CHECK(serialized(run) == serialized(again));
  }
  SUBCASE("baseline") {
    o.kind = ModelKind::kBaseline;
    const TrainingRun run = train_from_store(store, fc, horizon, o);
    CHECK(run.model->kind() == "baseline");
    CHECK(run.model->order() == 3);
  }
}

TEST_CASE("a store without mature articles is rejected") {
  Store store = testing::synthetic_store(30, 3);
  store.observed_until = from_unix(0);
  CHECK_THROWS_AS(train_from_store(store, FeatureConfig{}, Horizon(), {}),
                  CorpusError);
}

TEST_CASE("dataset assembly") {
  std::vector<LabeledExample> ex(2);
  ex[0].series = {1, 2, 3, 4, 5};
  ex[0].statics = {1};
  ex[1].series = {0, 0, 1, 1, 2};
  ex[1].statics = {0};
  const ArDataset d = make_ar_dataset(ex, 2);
  CHECK(d.size() == 6);
  CHECK(d.dim == ar_input_dim(2, 1));
  CHECK(d.y[0] == 3);
  CHECK(d.y[3] == 1);
  TrainOptions o;
  CHECK_THROWS_AS(train_model({}, 1, 5, o), InputError);
  CHECK_THROWS_AS(train_model(ex, 2, 5, o), ConfigError);
}

}  // namespace
}  // namespace newsrank
