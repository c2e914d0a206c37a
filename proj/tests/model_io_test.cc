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


#include "newsrank/model_io.h"

#include <sstream>

#include "doctest.h"
#include "newsrank/error.h"
#include "newsrank/models/baseline.h"
#include "newsrank/models/linear_ar.h"
#include "newsrank/models/random_forest.h"
#include "newsrank/models/seq2seq.h"

namespace newsrank {
namespace {

FeatureSpace space() {
  FeatureSpace s;
  s.keywords = KeywordMap(std::vector<KeywordMap::Concept>{
      {"zcash", {"zcash"}}, {"bitcoin", {"bitcoin", "btc"}}});
  s.publishers = PublisherList({"www.b.example", "www.a.example"});
  return s;
}

const std::vector<double> kTs{1, 4, 9, 12, 15};
const std::vector<double> kStatics{1, 0, 0, 1};

LoadedModel round_trip(const Forecaster& m) {
  std::stringstream buf;
  write_model(buf, m, space());
  std::stringstream again(buf.str());
  LoadedModel back = read_model(again);
  std::stringstream second;
  write_model(second, *back.model, back.features);
  CHECK(second.str() == buf.str());
  return back;
}

void same_forecast(const Forecaster& a, const Forecaster& b) {
  const Forecast fa = a.forecast(kTs, kStatics, 24, true);
  const Forecast fb = b.forecast(kTs, kStatics, 24, true);
  CHECK(fa.values == fb.values);
  CHECK(fa.intervals == fb.intervals);
}

TEST_CASE("every model kind survives a round trip") {
  SUBCASE("baseline") {
    const BaselineModel m(4, 4);
    const LoadedModel back = round_trip(m);
    CHECK(back.model->kind() == "baseline");
    CHECK(back.model->order() == 4);
    same_forecast(m, *back.model);
  }
  SUBCASE("linear AR") {
    const LinearArModel m(2, 4, {0.9, 0.2, 0.5, 1, -1, 0.25, 0, 3});
    const LoadedModel back = round_trip(m);
    CHECK(back.model->kind() == "linear_ar");
    same_forecast(m, *back.model);
  }
  SUBCASE("random forest") {
    ArDataset data;
    for (int s = 1; s <= 6; ++s) {
      std::vector<std::int64_t> series;
      for (int k = 1; k <= 24; ++k) series.push_back(s * k + (k % 3));
      const std::vector<double> st{double(s % 2), 0, 1, 0};
      data.append(make_ar_samples(series, 2, st));
    }
    ForestOptions o;
    o.n_estimators = 7;
    o.seed = 3;
    const RandomForestArModel m = rf_fit(data, 2, 4, o);
    const LoadedModel back = round_trip(m);
    CHECK(back.model->kind() == "rf");
    CHECK(back.model->supports_interval());
    same_forecast(m, *back.model);
  }
  SUBCASE("seq2seq") {
    Seq2SeqConfig c;
    c.hidden = 5;
    c.dense = 3;
    const Seq2SeqModel m(c, 4, 24, 8);
    const LoadedModel back = round_trip(m);
    CHECK(back.model->kind() == "s2s");
    CHECK(back.model->transform() == "log1p");
    same_forecast(m, *back.model);
    const auto& s = dynamic_cast<const Seq2SeqModel&>(*back.model);
    CHECK(s.parameters() == m.parameters());
  }
}

TEST_CASE("feature order is preserved") {
  const BaselineModel m(3, 4);
  const LoadedModel back = round_trip(m);
  REQUIRE(back.features.keywords.size() == 2);
  CHECK(back.features.keywords.concepts()[0].name == "zcash");
  CHECK(back.features.keywords.concepts()[1].keywords ==
        std::vector<std::string>{"bitcoin", "btc"});
  CHECK(back.features.publishers.hosts() ==
        std::vector<std::string>{"www.b.example", "www.a.example"});
}

TEST_CASE("malformed model files") {
  std::stringstream out;
  CHECK_THROWS_AS(write_model(out, BaselineModel(3, 2), space()), ConfigError);
  std::stringstream unknown(
      R"({"schema_version":1,"model_kind":"svm","order":1,"transform":"none",)"
      R"("features":{"keywords":{},"publishers":[]},"params":{"static_dim":0}})");
  CHECK_THROWS_AS(read_model(unknown), Error);
  std::stringstream garbage("{not json");
  CHECK_THROWS_AS(read_model(garbage), Error);
  CHECK_THROWS_AS(load_model("/nonexistent/model.json"), IoError);
}

}  // namespace
}  // namespace newsrank
