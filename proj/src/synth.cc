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


#include "newsrank/synth.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <numeric>
#include <random>

#include "newsrank/error.h"
#include "newsrank/random.h"

namespace newsrank {

namespace {

constexpr std::uint64_t kTweetIdBase = 1060000000000000000ULL;

constexpr const char* kHostWords[] = {
    "coinwire",     "blockledger", "cryptodaily", "hashpost",   "satoshitimes",
    "chainbrief",   "tokenreport", "minerjournal", "altcoinbuzz", "walletwatch",
    "defiherald",   "nodegazette", "forkchronicle", "ledgerline", "bytecoinnews",
    "cryptoglobe",  "blockbulletin", "coinmarketer", "hodlpress",  "chainobserver",
    "mempooltoday", "tickertape",  "cryptoledger", "blockwatch",  "coinfeed",
    "hashrateweekly", "stakingpost", "exchangedesk", "tradingwire", "coinrumors",
};

constexpr const char* kTitleWords[] = {
    "market",  "update",   "price",   "analysis", "report",  "rally",
    "slides",  "surges",   "regulators", "exchange", "weekly", "outlook",
    "traders", "funds",    "miners",  "volatility", "record", "investors",
};

double lognormal_factor(double sigma, Rng& rng) {
  if (sigma == 0.0) return 1.0;
  std::normal_distribution<double> normal(0.0, sigma);
  return std::exp(normal(rng) - 0.5 * sigma * sigma);
}

std::string pad(std::size_t value, int width) {
  std::string s = std::to_string(value);
  if (static_cast<int>(s.size()) < width) {
    s.insert(0, static_cast<std::size_t>(width) - s.size(), '0');
  }
  return s;
}

// Distinct indices drawn uniformly from [0, n).
std::vector<std::size_t> sample_distinct(std::size_t n, std::size_t k,
                                         Rng& rng) {
  std::vector<std::size_t> all(n);
  std::iota(all.begin(), all.end(), std::size_t{0});
  for (std::size_t j = 0; j < k; ++j) {
    std::uniform_int_distribution<std::size_t> pick(j, n - 1);
    std::swap(all[j], all[pick(rng)]);
  }
  all.resize(k);
  return all;
}

}  // namespace

void CascadeParams::validate() const {
  if (!(amplitude > 0.0)) throw ConfigError("amplitude must be positive");
  if (!(tau_hours > 0.0)) throw ConfigError("tau must be positive");
  if (mixture_weights.empty() ||
      mixture_weights.size() != stratum_multipliers.size()) {
    throw ConfigError("mixture weights and multipliers differ in length");
  }
  double total = 0.0;
  for (double w : mixture_weights) {
    if (!(w >= 0.0)) throw ConfigError("negative mixture weight");
    total += w;
  }
  if (std::abs(total - 1.0) > 1e-9) {
    throw ConfigError("mixture weights must sum to 1");
  }
  for (double m : stratum_multipliers) {
    if (!(m > 0.0)) throw ConfigError("stratum multipliers must be positive");
  }
  if (amplitude_jitter < 0.0 || tau_jitter < 0.0) {
    throw ConfigError("jitter must be non-negative");
  }
  if (n_publishers == 0 ||
      n_publishers > std::size(kHostWords)) {
    throw ConfigError("publisher count must lie in [1, " +
                      std::to_string(std::size(kHostWords)) + "]");
  }
  for (const auto& [name, p] : keyword_probabilities) {
    if (!(p >= 0.0 && p <= 1.0)) {
      throw ConfigError("keyword probability for " + name + " outside [0, 1]");
    }
  }
  if (span_days < 1) throw ConfigError("span must be at least one day");
  if (!(horizon_hours > 0.0)) throw ConfigError("horizon must be positive");
  if (n_users == 0) throw ConfigError("user pool is empty");
}

std::vector<std::string> synthetic_hosts(std::size_t n) {
  n = std::min(n, std::size(kHostWords));
  std::vector<std::string> hosts;
  for (std::size_t i = 0; i < n; ++i) {
    hosts.push_back(std::string("www.") + kHostWords[i] + ".example");
  }
  return hosts;
}

SyntheticCorpus generate_corpus(std::size_t n_articles,
                                const CascadeParams& params) {
  if (n_articles == 0) throw InputError("corpus needs at least one article");
  params.validate();

  double mixture_mean = 0.0;
  for (std::size_t s = 0; s < params.mixture_weights.size(); ++s) {
    mixture_mean += params.mixture_weights[s] * params.stratum_multipliers[s];
  }

  const std::vector<std::string> hosts = synthetic_hosts(params.n_publishers);
  std::vector<double> host_weights;
  for (std::size_t i = 0; i < hosts.size(); ++i) {
    host_weights.push_back(
        std::pow(static_cast<double>(i + 1), -params.publisher_skew));
  }

  std::map<std::string, double> probability_by_concept;
  for (const auto& [name, p] : params.keyword_probabilities) {
    probability_by_concept[name] = p;
  }
  std::vector<double> concept_probability;
  for (const KeywordMap::Concept& c : params.keywords.concepts()) {
    const auto it = probability_by_concept.find(c.name);
    concept_probability.push_back(it == probability_by_concept.end()
                                      ? params.default_keyword_probability
                                      : it->second);
  }

  SyntheticCorpus corpus;
  corpus.window = {params.start,
                   params.start + Duration{std::int64_t{86400} *
                                           params.span_days}};
  const auto span_seconds = std::int64_t{86400} * params.span_days;
  const int buckets = static_cast<int>(std::ceil(params.horizon_hours));
  Timestamp last = params.start;
  std::uint64_t next_tweet = kTweetIdBase;

  for (std::size_t i = 0; i < n_articles; ++i) {
    Rng rng = substream(params.seed, i);

    std::uniform_int_distribution<std::int64_t> offset(0, span_seconds - 1);
    const Timestamp t0 = params.start + Duration{offset(rng)};
    std::discrete_distribution<std::size_t> host_pick(host_weights.begin(),
                                                      host_weights.end());
    const std::string& host = hosts[host_pick(rng)];

    std::string title = std::string(kTitleWords[i % std::size(kTitleWords)]);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const auto& concepts = params.keywords.concepts();
    for (std::size_t c = 0; c < concepts.size(); ++c) {
      if (unit(rng) < concept_probability[c]) {
        title += " " + concepts[c].keywords.front();
      }
    }
    std::uniform_int_distribution<std::size_t> word(0,
                                                    std::size(kTitleWords) - 1);
    title += std::string(" ") + kTitleWords[word(rng)] + " " +
             kTitleWords[word(rng)] + " no. " + std::to_string(i + 1);
    title[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(title[0])));

    std::string slug = title;
    std::transform(slug.begin(), slug.end(), slug.begin(), [](unsigned char ch) {
      return std::isalnum(ch) ? static_cast<char>(std::tolower(ch)) : '-';
    });
    slug.erase(std::unique(slug.begin(), slug.end(),
                           [](char a, char b) { return a == '-' && b == '-'; }),
               slug.end());
    const std::string date = format_timestamp(t0).substr(0, 10);
    const std::string url = "https://" + host + "/news/" + date.substr(0, 4) +
                            "/" + date.substr(5, 2) + "/" + slug + "-" +
                            pad(i + 1, 6);

    std::discrete_distribution<std::size_t> stratum(
        params.mixture_weights.begin(), params.mixture_weights.end());
    const double amplitude =
        params.amplitude *
        params.stratum_multipliers[stratum(rng)] / mixture_mean *
        lognormal_factor(params.amplitude_jitter, rng);
    const double tau =
        params.tau_hours * lognormal_factor(params.tau_jitter, rng);

    corpus.articles.push_back(make_article(
        url, title, t0, title + ". Synthetic article body " + pad(i + 1, 6) + "."));

    std::vector<std::string> ids;
    std::uniform_int_distribution<std::size_t> user(0, params.n_users - 1);
    const double bucket_mass = 1.0 - std::exp(-1.0 / tau);
    for (int k = 1; k <= buckets; ++k) {
      const double lo = k - 1;
      const double hi = std::min<double>(k, params.horizon_hours);
      const double rate =
          amplitude * (std::exp(-lo / tau) - std::exp(-hi / tau));
      std::poisson_distribution<int> count(rate);
      const int n = rate > 0.0 ? count(rng) : 0;
      for (int m = 0; m < n; ++m) {
        // Inverse CDF of the decaying rate restricted to the bucket.
        const double u = unit(rng);
        double t = lo - tau * std::log1p(-u * bucket_mass);
        t = std::clamp(t, lo, std::nextafter(hi, lo));
        const Timestamp at = t0 + Duration{static_cast<std::int64_t>(
                                      std::floor(t * 3600.0))};
        Tweet tweet;
        tweet.id = std::to_string(next_tweet++);
        tweet.user = "user" + pad(user(rng), 5);
        tweet.text = title + " " + url;
        tweet.published_at = at;
        tweet.links = {url};
        ids.push_back(tweet.id);
        last = std::max(last, at);
        corpus.tweets.push_back(std::move(tweet));
      }
    }

    // Matching records arrive in one to three chunks.
    std::uniform_int_distribution<int> chunks(1, 3);
    const int n_chunks = ids.empty() ? 1 : std::min<int>(chunks(rng),
                                                         static_cast<int>(ids.size()));
    for (int c = 0; c < n_chunks; ++c) {
      MatchingRecord record{url, {}};
      for (std::size_t j = static_cast<std::size_t>(c); j < ids.size();
           j += static_cast<std::size_t>(n_chunks)) {
        record.tweet_ids.push_back(ids[j]);
      }
      corpus.matchings.push_back(std::move(record));
    }
  }
  corpus.observed_until = std::max(
      last + Duration{1},
      corpus.window.end +
          Duration{static_cast<std::int64_t>(params.horizon_hours * 3600)});
  std::stable_sort(corpus.tweets.begin(), corpus.tweets.end(),
                   [](const Tweet& a, const Tweet& b) {
                     return a.published_at < b.published_at;
                   });
  return corpus;
}

void write_corpus(const std::filesystem::path& dir,
                  const SyntheticCorpus& corpus) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create " + dir.string() + ": " + ec.message());
  write_records(dir / "articles.jsonl", corpus.articles);
  write_records(dir / "tweets.jsonl", corpus.tweets);
  write_records(dir / "matchings.jsonl", corpus.matchings);
}

AnomalyLedger inject_anomalies(SyntheticCorpus& corpus,
                               const AnomalySpec& spec) {
  AnomalyLedger ledger;
  if (spec.empty()) return ledger;
  const std::size_t n_targets =
      spec.query_duplicates + spec.far_future + spec.ancient;
  if (n_targets > corpus.articles.size()) {
    throw InputError("more anomalies requested than articles available");
  }
  Rng rng = substream(spec.seed, 0);
  const std::vector<std::size_t> targets =
      sample_distinct(corpus.articles.size(), n_targets, rng);

  std::map<std::string, std::vector<std::string>> tweets_by_url;
  for (const MatchingRecord& r : corpus.matchings) {
    auto& ids = tweets_by_url[r.article_url];
    ids.insert(ids.end(), r.tweet_ids.begin(), r.tweet_ids.end());
  }

  std::size_t next = 0;
  for (std::size_t q = 0; q < spec.query_duplicates; ++q, ++next) {
    const Article original = corpus.articles[targets[next]];
    const std::string variant =
        original.url + "?utm_source=feed&utm_medium=rss&ref=" + std::to_string(q);
    corpus.articles.push_back(make_article(variant, original.title,
                                           original.published_at,
                                           original.text));
    // Half of the original's mentions are also reported against the variant.
    const auto& ids = tweets_by_url[original.url];
    MatchingRecord record{variant, {}};
    for (std::size_t j = 0; j < ids.size(); j += 2) {
      record.tweet_ids.push_back(ids[j]);
    }
    corpus.matchings.push_back(std::move(record));
    ledger.duplicated_urls.push_back(original.url);
    ledger.duplicate_urls.push_back(variant);
  }
  for (std::size_t f = 0; f < spec.far_future; ++f, ++next) {
    Article& a = corpus.articles[targets[next]];
    a.published_at += Duration{std::int64_t{10} * 365 * 86400};
    ledger.far_future_urls.push_back(a.url);
  }
  for (std::size_t f = 0; f < spec.ancient; ++f, ++next) {
    Article& a = corpus.articles[targets[next]];
    a.published_at -= Duration{std::int64_t{2000} * 365 * 86400};
    ledger.ancient_urls.push_back(a.url);
  }

  if (spec.duplicate_tweets > corpus.tweets.size()) {
    throw InputError("more duplicate tweets requested than tweets available");
  }
  for (std::size_t idx :
       sample_distinct(corpus.tweets.size(), spec.duplicate_tweets, rng)) {
    corpus.tweets.push_back(corpus.tweets[idx]);
    ledger.duplicated_tweet_ids.push_back(corpus.tweets[idx].id);
  }
  return ledger;
}

}  // namespace newsrank
