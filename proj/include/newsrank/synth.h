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
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "newsrank/features.h"
#include "newsrank/ingest.h"
#include "newsrank/time.h"

namespace newsrank {

// Mention cascades with rate (A / tau) exp(-t / tau) per article.
struct CascadeParams {
  // Expected total mentions over all articles.
  double amplitude = 40.0;
  double tau_hours = 4.0;
  // Popularity strata (low, medium, high): selection weights and amplitude
  // multipliers. Multipliers are rescaled so the mixture mean is 1.
  std::vector<double> mixture_weights{0.75, 0.2, 0.05};
  std::vector<double> stratum_multipliers{0.25, 2.0, 8.0};
  // Log-scale spread of the mean-preserving lognormal jitter on the
  // amplitude and on tau. Zero disables it.
  double amplitude_jitter = 0.5;
  double tau_jitter = 0.25;
  // Publisher i of the host list is drawn with weight (i + 1)^-skew.
  double publisher_skew = 1.1;
  std::size_t n_publishers = 30;
  // Per-concept probability that the title mentions it. Missing entries use
  // default_keyword_probability.
  std::vector<std::pair<std::string, double>> keyword_probabilities{
      {"bitcoin", 0.35}, {"ethereum", 0.15}, {"ripple", 0.08}};
  double default_keyword_probability = 0.03;
  KeywordMap keywords = default_keyword_map();
  Timestamp start = from_unix(1541030400);  // 2018-11-01T00:00:00Z
  int span_days = 30;
  // Mentions are generated up to this many hours after publication.
  double horizon_hours = 48.0;
  std::size_t n_users = 5000;
  std::uint64_t seed = 0;

  // Throws ConfigError.
  void validate() const;
};

struct SyntheticCorpus {
  std::vector<Article> articles;
  std::vector<Tweet> tweets;
  std::vector<MatchingRecord> matchings;
  // Publication window that contains every regular article.
  TimeWindow window;
  // Time after the last generated mention.
  Timestamp observed_until;
};

// Hosts used for publisher draws, most popular first.
std::vector<std::string> synthetic_hosts(std::size_t n);

SyntheticCorpus generate_corpus(std::size_t n_articles,
                                const CascadeParams& params);

// Writes articles.jsonl, tweets.jsonl and matchings.jsonl.
void write_corpus(const std::filesystem::path& dir,
                  const SyntheticCorpus& corpus);

struct AnomalySpec {
  // Extra article records whose URL differs from an existing one only by a
  // query string.
  std::size_t query_duplicates = 0;
  std::size_t duplicate_tweets = 0;
  std::size_t far_future = 0;
  // Publication dates two thousand years in the past.
  std::size_t ancient = 0;
  std::uint64_t seed = 0;

  bool empty() const {
    return query_duplicates + duplicate_tweets + far_future + ancient == 0;
  }
};

// Ground truth for ingest: every field is the count or set ingest must
// report back.
struct AnomalyLedger {
  std::vector<std::string> duplicated_urls;
  std::vector<std::string> duplicate_urls;  // the query-string variants
  std::vector<std::string> duplicated_tweet_ids;
  std::vector<std::string> far_future_urls;
  std::vector<std::string> ancient_urls;

  std::size_t expected_merged() const { return duplicate_urls.size(); }
  std::size_t expected_duplicate_tweets() const {
    return duplicated_tweet_ids.size();
  }
  std::size_t expected_outside_window() const {
    return far_future_urls.size() + ancient_urls.size();
  }
};

// Modifies the corpus in place. Each anomaly targets a distinct article.
AnomalyLedger inject_anomalies(SyntheticCorpus& corpus,
                               const AnomalySpec& spec);

}  // namespace newsrank
