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


#include "newsrank/features.h"

#include <algorithm>
#include <filesystem>
#include <map>

#include "doctest.h"
#include "newsrank/error.h"

namespace newsrank {
namespace {

const Timestamp kT0 = parse_timestamp("2018-12-01T10:00:00Z");

Article titled(const std::string& title, const std::string& host = "a.com") {
  return make_article("https://" + host + "/x", title, kT0, "");
}

const KeywordMap kTwo({{"bitcoin", {"bitcoin", "btc"}},
                       {"ethereum", {"ethereum", "eth"}}});

TEST_CASE("tokenize lowercases and splits on ASCII punctuation") {
  CHECK(tokenize("ETH/BTC: up 5%!") ==
        std::vector<std::string>{"eth", "btc", "up", "5"});
  CHECK(tokenize("Caf\xC3\xA9-news") ==
        std::vector<std::string>{"caf\xC3\xA9", "news"});
  CHECK(tokenize("").empty());
}

TEST_CASE("content feature examples") {
  CHECK(content_features(titled("Bitcoin hits new low"), kTwo) ==
        BitVector{1, 0});
  CHECK(content_features(titled(""), kTwo) == BitVector{0, 0});
  CHECK(content_features(titled("ETH and BTC rally"), kTwo) ==
        BitVector{1, 1});
  CHECK(content_features(titled("An ethereal bitcoiner"), kTwo) ==
        BitVector{0, 0});
}

TEST_CASE("multi-word keywords match contiguous tokens") {
  const KeywordMap m(std::vector<KeywordMap::Concept>{{"bitcoin_cash", {"bitcoin cash"}}});
  CHECK(content_features(titled("Bitcoin Cash fork"), m) == BitVector{1});
  CHECK(content_features(titled("Bitcoin and cash"), m) == BitVector{0});
}

TEST_CASE("keyword map validation") {
  CHECK_THROWS_AS(KeywordMap(std::vector<KeywordMap::Concept>{{"a", {"x"}}, {"a", {"y"}}}), ConfigError);
  CHECK_THROWS_AS(KeywordMap(std::vector<KeywordMap::Concept>{{"a", {}}}), ConfigError);
}

TEST_CASE("keyword map JSON keeps concept order") {
  const KeywordMap m({{"zeta", {"z"}}, {"alpha", {"a"}}});
  const KeywordMap back = KeywordMap::from_json(m.to_json());
  REQUIRE(back.size() == 2);
  CHECK(back.concepts()[0].name == "zeta");
  CHECK(back.concepts()[1].name == "alpha");
}

TEST_CASE("default keyword map covers twenty concepts") {
  CHECK(default_keyword_map().size() == 20);
}

Matching on(const std::string& host, int mentions) {
  Matching m{titled("T", host), {}};
  for (int i = 0; i < mentions; ++i) {
    m.mentions.push_back({host + std::to_string(i), kT0});
  }
  return m;
}

TEST_CASE("top publishers by summed mentions with lexicographic ties") {
  const PublisherList p =
      top_publishers({on("c.com", 3), on("a.com", 5), on("b.com", 3)});
  REQUIRE(p.size() == kDefaultTopPublishers);
  CHECK(p.hosts()[0] == "a.com");
  CHECK(p.hosts()[1] == "b.com");
  CHECK(p.hosts()[2] == "c.com");
  for (std::size_t i = 3; i < p.size(); ++i) {
    CHECK(PublisherList::is_sentinel(p.hosts()[i]));
  }
  CHECK_THROWS_AS(top_publishers({}), InputError);
}

TEST_CASE("top publishers equal a full-sort oracle") {
  std::vector<Matching> training;
  std::map<std::string, int> counts;
  for (int i = 0; i < 60; ++i) {
    const std::string host = "h" + std::to_string((i * 7) % 17) + ".com";
    const int n = (i * 13) % 9;
    training.push_back(on(host, n));
    counts[host] += n;
  }
  std::vector<std::pair<int, std::string>> sorted;
  for (const auto& [h, c] : counts) sorted.push_back({-c, h});
  std::sort(sorted.begin(), sorted.end());
  const PublisherList p = top_publishers(training);
  for (std::size_t i = 0; i < p.size(); ++i) {
    CHECK(p.hosts()[i] == sorted[i].second);
  }
}

TEST_CASE("context features are one-hot or empty") {
  const PublisherList p({"a.com", "b.com", "c.com", "", ""});
  CHECK(context_features(titled("T", "c.com"), p) ==
        BitVector{0, 0, 1, 0, 0});
  CHECK(context_features(titled("T", "z.com"), p) ==
        BitVector{0, 0, 0, 0, 0});
  CHECK_THROWS_AS(PublisherList({"a.com", "a.com"}), ConfigError);
}

TEST_CASE("time series features keep complete steps only") {
  const MentionSeries s{kT0, kHour, {2, 3, 6, 6, 7}};
  CHECK(time_series_features(s, kT0 + 3 * kHour) ==
        std::vector<std::int64_t>{2, 3, 6});
  CHECK(time_series_features(s, kT0 + Duration{5400}) ==
        std::vector<std::int64_t>{2});
  CHECK_THROWS_AS(time_series_features(s, kT0 + Duration{1800}), DomainError);
  CHECK_THROWS_AS(time_series_features(s, kT0 + 6 * kHour), DomainError);
}

TEST_CASE("feature space extracts content then context") {
  FeatureSpace space{kTwo, PublisherList({"a.com", "b.com"})};
  const FeatureVector fv = space.extract(titled("btc", "b.com"), {1, 2});
  CHECK(fv.K == 2);
  CHECK(fv.static_features() == std::vector<double>{1, 0, 0, 1});
  const FeatureSpace back = FeatureSpace::from_json(space.to_json());
  CHECK(back.static_dim() == 4);
  CHECK(back.publishers.hosts() == space.publishers.hosts());
}

TEST_CASE("shipped feature config loads") {
  const auto path =
      std::filesystem::path(NEWSRANK_SOURCE_DIR) / "config" / "features.json";
  const FeatureConfig c = FeatureConfig::load(path);
  CHECK(c.n_top_publishers == 10);
  CHECK(c.keywords.size() == default_keyword_map().size());
  CHECK(c.keywords.concepts()[0].name == "bitcoin");
}

}  // namespace
}  // namespace newsrank
