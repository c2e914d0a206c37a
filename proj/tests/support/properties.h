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


// Randomized invariant checks shared by the property suite and the
// acceptance gate. Each check runs `cases` generated instances and reports
// the first counterexample.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "newsrank/eval.h"
#include "newsrank/features.h"
#include "newsrank/ingest.h"
#include "newsrank/models/baseline.h"
#include "newsrank/models/linear_ar.h"
#include "newsrank/models/random_forest.h"
#include "newsrank/models/seq2seq.h"
#include "newsrank/serve.h"
#include "newsrank/synth.h"
#include "newsrank/timeseries.h"
#include "newsrank/url.h"
#include "support/corpus.h"

namespace newsrank::testing {

using Gen = std::mt19937_64;

struct PropertyResult {
  std::string name;
  int cases = 0;
  int failures = 0;
  std::string first_failure;

  bool ok() const { return failures == 0 && cases > 0; }
};

// Runs `body` once per case with its own generator; `body` returns an empty
// string on success or a description of the violation.
inline PropertyResult run_property(
    const std::string& name, int cases, std::uint64_t seed,
    const std::function<std::string(Gen&, int)>& body) {
  PropertyResult r{name, cases, 0, {}};
  for (int c = 0; c < cases; ++c) {
    Gen gen(seed * 1000003ULL + static_cast<std::uint64_t>(c));
    std::string why;
    try {
      why = body(gen, c);
    } catch (const std::exception& e) {
      why = std::string("exception: ") + e.what();
    }
    if (!why.empty()) {
      if (r.failures++ == 0) {
        r.first_failure = "case " + std::to_string(c) + ": " + why;
      }
    }
  }
  return r;
}

inline int uniform(Gen& g, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(g);
}

// Small pools so that merges actually happen: hosts in varying case, query
// strings and fragments, composed and decomposed accents, padded titles.
inline std::vector<Matching> random_batch(Gen& g) {
  static const char* kHosts[] = {"news.example.com", "NEWS.example.com",
                                 "coin.example.org"};
  static const char* kPaths[] = {"/a", "/a/", "/b/c", "/"};
  static const char* kSuffix[] = {"", "?utm=x", "#frag", "?p=1#f"};
  static const char* kTitles[] = {"Caf\xC3\xA9 coin", "Cafe\xCC\x81 coin",
                                  "  Caf\xC3\xA9 coin ", "Other title"};
  const int n = uniform(g, 0, 14);
  std::vector<Matching> out;
  std::set<std::string> unused;
  for (int i = 0; i < n; ++i) {
    const std::string url = std::string("https://") + kHosts[uniform(g, 0, 2)] +
                            kPaths[uniform(g, 0, 3)] + kSuffix[uniform(g, 0, 3)];
    const Timestamp t0 = from_unix(1541030400 + 3600 * uniform(g, 0, 1));
    Matching m;
    m.article = make_article(url, kTitles[uniform(g, 0, 3)], t0,
                             "text " + std::to_string(uniform(g, 0, 1)));
    std::set<int> ids;
    const int k = uniform(g, 0, 6);
    while (static_cast<int>(ids.size()) < k) ids.insert(uniform(g, 0, 25));
    for (int id : ids) {
      // One timestamp per tweet id, as in real data.
      m.mentions.push_back(
          {"t" + std::to_string(id), from_unix(1541030400 + 97 * id)});
    }
    out.push_back(std::move(m));
  }
  return out;
}

struct MergeKeyOracle {
  std::string url, title;
  std::int64_t t;
  auto operator<=>(const MergeKeyOracle&) const = default;
};

inline MergeKeyOracle oracle_key(const Article& a) {
  return {canonicalize_url(a.url), normalize_title(a.title),
          to_unix(a.published_at)};
}

inline PropertyResult prop_merge_idempotent(int cases, std::uint64_t seed) {
  return run_property("merge idempotence", cases, seed, [](Gen& g, int) {
    const auto once = merge_matchings(random_batch(g));
    return merge_matchings(once) == once ? "" : std::string("merge twice differs");
  });
}

inline PropertyResult prop_merge_permutation(int cases, std::uint64_t seed) {
  return run_property("merge permutation invariance", cases, seed,
                      [](Gen& g, int) {
    auto batch = random_batch(g);
    const auto a = merge_matchings(batch);
    std::shuffle(batch.begin(), batch.end(), g);
    for (Matching& m : batch) std::shuffle(m.mentions.begin(), m.mentions.end(), g);
    return merge_matchings(batch) == a ? "" : std::string("order changed result");
  });
}

inline PropertyResult prop_merge_complete(int cases, std::uint64_t seed) {
  return run_property("no mergeable pair after merge", cases, seed,
                      [](Gen& g, int) -> std::string {
    const auto out = merge_matchings(random_batch(g));
    std::set<MergeKeyOracle> keys;
    for (const Matching& m : out) {
      if (!keys.insert(oracle_key(m.article)).second) {
        return "two outputs share " + m.article.canonical_url;
      }
    }
    return "";
  });
}

inline PropertyResult prop_mention_conservation(int cases, std::uint64_t seed) {
  return run_property("mention conservation", cases, seed,
                      [](Gen& g, int) -> std::string {
    const auto batch = random_batch(g);
    std::map<MergeKeyOracle, std::set<std::string>> want;
    for (const Matching& m : batch) {
      auto& ids = want[oracle_key(m.article)];
      for (const Mention& x : m.mentions) ids.insert(x.tweet_id);
    }
    const auto out = merge_matchings(batch);
    if (out.size() != want.size()) return "group count differs";
    for (const Matching& m : out) {
      std::set<std::string> ids;
      for (const Mention& x : m.mentions) ids.insert(x.tweet_id);
      if (ids.size() != m.mentions.size()) return "duplicate tweet id kept";
      if (ids != want[oracle_key(m.article)]) return "mention set differs";
    }
    return "";
  });
}

inline std::string random_url(Gen& g) {
  static const char* kSchemes[] = {"http", "https", "HTTPS"};
  static const char* kHosts[] = {"Example.COM", "a.b.example", "x.example:8080",
                                 "user@host.example"};
  static const char* kSegs[] = {"", "a", "B", "c.html", "%7Euser", "d-e"};
  std::string url = std::string(kSchemes[uniform(g, 0, 2)]) + "://" +
                    kHosts[uniform(g, 0, 3)];
  const int depth = uniform(g, 0, 3);
  for (int i = 0; i < depth; ++i) url += std::string("/") + kSegs[uniform(g, 0, 5)];
  if (uniform(g, 0, 1)) url += "/";
  if (uniform(g, 0, 1)) url += "?q=" + std::to_string(uniform(g, 0, 9));
  if (uniform(g, 0, 1)) url += "#f";
  return url;
}

inline PropertyResult prop_canonical_idempotent(int cases, std::uint64_t seed) {
  return run_property("canonicalize idempotence", cases, seed,
                      [](Gen& g, int) -> std::string {
    const std::string url = random_url(g);
    const std::string once = canonicalize_url(url);
    if (canonicalize_url(once) != once) return "not idempotent for " + url;
    if (once.find_first_of("?#") != std::string::npos) {
      return "query or fragment left in " + once;
    }
    return "";
  });
}

inline PropertyResult prop_anomaly_ledger(int cases, std::uint64_t seed) {
  return run_property("anomaly ledger recovery", cases, seed,
                      [](Gen& g, int c) -> std::string {
    CascadeParams p;
    p.seed = static_cast<std::uint64_t>(c);
    p.amplitude = 10;
    p.span_days = 3;
    const std::size_t n = static_cast<std::size_t>(uniform(g, 8, 30));
    SyntheticCorpus corpus = generate_corpus(n, p);

    AnomalySpec spec;
    spec.seed = static_cast<std::uint64_t>(c);
    spec.query_duplicates = static_cast<std::size_t>(uniform(g, 0, 3));
    spec.far_future = static_cast<std::size_t>(uniform(g, 0, 2));
    spec.ancient = static_cast<std::size_t>(uniform(g, 0, 2));
    spec.duplicate_tweets = std::min<std::size_t>(
        corpus.tweets.size(), static_cast<std::size_t>(uniform(g, 0, 5)));

    std::map<std::string, std::size_t> mentions_by_url;
    for (const MatchingRecord& r : corpus.matchings) {
      mentions_by_url[r.article_url] += r.tweet_ids.size();
    }
    const std::size_t tweets_before = corpus.tweets.size();
    const AnomalyLedger ledger = inject_anomalies(corpus, spec);

    IngestReport report;
    const Store store = store_from_corpus(corpus, &report);
    std::ostringstream why;
    if (report.merged_away != ledger.expected_merged()) why << "merged ";
    if (report.duplicate_tweets != ledger.expected_duplicate_tweets()) {
      why << "duplicate tweets ";
    }
    if (report.outside_window != ledger.expected_outside_window()) {
      why << "outside window ";
    }
    std::size_t expected_mentions = tweets_before;
    for (const auto& u : ledger.far_future_urls) expected_mentions -= mentions_by_url[u];
    for (const auto& u : ledger.ancient_urls) expected_mentions -= mentions_by_url[u];
    std::size_t got = 0;
    for (const Matching& m : store.matchings) got += m.mentions.size();
    if (got != expected_mentions) why << "mention total ";
    if (store.matchings.size() != n - ledger.expected_outside_window()) {
      why << "article count ";
    }
    return why.str();
  });
}

inline std::vector<double> random_cumulative(Gen& g, int length) {
  std::vector<double> ts;
  double acc = 0;
  std::geometric_distribution<int> jump(0.3);
  for (int i = 0; i < length; ++i) {
    acc += uniform(g, 0, 9) == 0 ? 50 * jump(g) : jump(g);
    ts.push_back(acc);
  }
  return ts;
}

inline std::string check_monotone(const Forecast& f, std::size_t expected,
                                  double last) {
  if (f.values.size() != expected) return "wrong forecast length";
  double prev = last;
  for (double v : f.values) {
    if (!(v >= prev)) return "forecast decreases";
    prev = v;
  }
  return "";
}

inline PropertyResult prop_monotone_forecasts(int cases, std::uint64_t seed) {
  constexpr int kN = 24;
  constexpr std::size_t kStatic = 3;
  // One small forest fitted on random rising series, reused by all cases.
  ArDataset data;
  Gen fit_gen(seed);
  for (int s = 0; s < 40; ++s) {
    const auto ts = random_cumulative(fit_gen, kN);
    std::vector<std::int64_t> series(ts.begin(), ts.end());
    const std::vector<double> st{double(s % 2), 0, double(s % 3 == 0)};
    data.append(make_ar_samples(series, 3, st));
  }
  ForestOptions fo;
  fo.n_estimators = 8;
  fo.seed = seed;
  fo.threads = 1;
  const RandomForestArModel forest = rf_fit(data, 3, kStatic, fo);

  return run_property("monotone forecasts", cases, seed,
                      [&forest](Gen& g, int c) -> std::string {
    std::normal_distribution<double> normal(0.0, 1.0);
    std::vector<double> st(kStatic);
    for (double& v : st) v = uniform(g, 0, 1);

    const int window = uniform(g, 2, 5);
    const BaselineModel baseline(window, kStatic);
    const int order = uniform(g, 1, 5);
    std::vector<double> coef(ar_input_dim(order, kStatic) + 1);
    for (double& v : coef) v = normal(g) * 2;
    const LinearArModel linear(order, kStatic, coef);
    Seq2SeqConfig sc;
    sc.hidden = 3;
    sc.dense = 3;
    sc.init_scale = 1.0;
    const Seq2SeqModel s2s(sc, kStatic, kN, static_cast<std::uint64_t>(c));

    const Forecaster* models[] = {&baseline, &linear, &forest, &s2s};
    for (const Forecaster* m : models) {
      const int k = uniform(g, std::max(1, m->min_history()), kN);
      const auto ts = random_cumulative(g, k);
      const Forecast f = m->forecast(ts, st, kN, m->supports_interval());
      const std::string why =
          check_monotone(f, static_cast<std::size_t>(kN - k), ts.back());
      if (!why.empty()) return m->kind() + ": " + why;
      if (m->supports_interval() && f.intervals.size() != f.values.size()) {
        return m->kind() + ": interval count";
      }
    }
    return "";
  });
}

// Nearest-rank percentile by full sort.
inline double percentile_oracle(std::vector<double> v, double p) {
  std::sort(v.begin(), v.end());
  const auto rank = static_cast<std::size_t>(std::ceil(p / 100.0 * v.size()));
  return v[std::max<std::size_t>(rank, 1) - 1];
}

inline PropertyResult prop_balanced_set(int cases, std::uint64_t seed) {
  return run_property("balanced set", cases, seed,
                      [](Gen& g, int c) -> std::string {
    const int n = uniform(g, 20, 1500);
    std::vector<double> t(static_cast<std::size_t>(n));
    std::geometric_distribution<int> geo(c % 3 == 0 ? 0.9 : 0.05);
    for (double& v : t) v = geo(g);
    Rng rng(static_cast<std::uint64_t>(c));
    const auto idx = balance_training_set(t, rng);
    const std::size_t m = static_cast<std::size_t>(n) / 20;
    if (idx.size() != 3 * m) return "size is not 3M";
    for (std::size_t i : idx) {
      if (i >= t.size()) return "index outside input";
    }
    std::vector<double> top, sorted = t;
    for (std::size_t i = 0; i < m; ++i) top.push_back(t[idx[i]]);
    std::sort(top.begin(), top.end(), std::greater<>());
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    if (!std::equal(top.begin(), top.end(), sorted.begin())) {
      return "top stratum is not the M largest";
    }
    if (std::set<std::size_t>(idx.begin(), idx.begin() + m).size() != m) {
      return "top stratum repeats an article";
    }
    const double p75 = percentile_oracle(t, 75), p95 = percentile_oracle(t, 95);
    std::size_t band = 0, low = 0;
    for (double v : t) {
      band += v >= p75 && v < p95;
      low += v < p75;
    }
    for (std::size_t i = m; i < 2 * m; ++i) {
      if (band > 0 && !(t[idx[i]] >= p75 && t[idx[i]] < p95)) {
        return "medium draw outside the band";
      }
    }
    for (std::size_t i = 2 * m; i < 3 * m; ++i) {
      if (low > 0 && !(t[idx[i]] < p75)) return "low draw above p75";
    }
    if (band >= m &&
        std::set<std::size_t>(idx.begin() + m, idx.begin() + 2 * m).size() != m) {
      return "medium drawn with replacement";
    }
    return "";
  });
}

// Doubling forecaster keeps the ranking check independent of model fitting.
class LastValueModel final : public Forecaster {
 public:
  std::string kind() const override { return "baseline"; }
  int min_history() const override { return 2; }
  int order() const override { return 2; }
  std::size_t static_dim() const override { return 0; }
  Forecast forecast(std::span<const double> ts, std::span<const double>,
                    int target_step, bool) const override {
    Forecast f;
    f.values.assign(static_cast<std::size_t>(target_step) - ts.size(),
                    2 * ts.back());
    return f;
  }
  void write_params(std::ostream&) const override {}
};

inline PropertyResult prop_ranking_permutation(int cases, std::uint64_t seed) {
  const LoadedModel model{std::make_unique<LastValueModel>(), FeatureSpace{}};
  return run_property("ranking permutation", cases, seed,
                      [&model](Gen& g, int) -> std::string {
    const Timestamp now = from_unix(1543622400);
    Store store;
    store.observed_until = now;
    std::multiset<std::string> want;
    const int n = uniform(g, 0, 25);
    for (int i = 0; i < n; ++i) {
      const Timestamp t0 = now - Duration{uniform(g, -3600, 30 * 3600)};
      Matching m;
      m.article = make_article("https://p.example/" + std::to_string(i),
                               "t" + std::to_string(uniform(g, 0, 2)), t0, "");
      const int k = uniform(g, 0, 8);
      for (int j = 0; j < k; ++j) {
        m.mentions.push_back({std::to_string(i) + "-" + std::to_string(j),
                              t0 + Duration{uniform(g, 0, 20 * 3600)}});
      }
      if (t0 <= now && t0 >= now - Duration{86400}) want.insert(m.article.url);
      store.matchings.push_back(std::move(m));
    }
    const Store copy = store;
    const auto ranked = scoring_pass(store, model, now);
    if (!(store.matchings == copy.matchings)) return "store modified";
    std::multiset<std::string> got;
    std::set<std::string> ids;
    for (std::size_t i = 0; i < ranked.size(); ++i) {
      if (ranked[i].rank != static_cast<int>(i + 1)) return "ranks not 1..n";
      got.insert(ranked[i].article_url);
      ids.insert(ranked[i].id);
      if (i > 0 && ranked[i].predicted_24h && !ranked[i - 1].predicted_24h) {
        return "null prediction ranked above a value";
      }
      if (i > 0 && ranked[i].predicted_24h && ranked[i - 1].predicted_24h &&
          *ranked[i].predicted_24h > *ranked[i - 1].predicted_24h) {
        return "predictions out of order";
      }
    }
    if (got != want) return "ranked set differs from the window";
    if (ids.size() != ranked.size()) return "duplicate id";
    return "";
  });
}

inline PropertyResult prop_metrics(int cases, std::uint64_t seed) {
  return run_property("metric bounds and scale invariance", cases, seed,
                      [](Gen& g, int) -> std::string {
    const int n = uniform(g, 1, 60);
    std::uniform_real_distribution<double> u(0.5, 300.0);
    std::vector<ActualPredicted> a, scaled;
    const double c = u(g);
    for (int i = 0; i < n; ++i) {
      const double x = uniform(g, 0, 3) == 0 ? uniform(g, 1, 4) : u(g);
      const double p = uniform(g, 0, 3) == 0 ? uniform(g, 0, 4) : u(g);
      a.push_back({x, p});
      scaled.push_back({c * x, c * p});
    }
    const double v = ndcg_at_k(a, static_cast<std::size_t>(uniform(g, 1, n)));
    if (!(v >= 0.0 && v <= 1.0)) return "ndcg outside [0, 1]";
    const double m1 = mape(a), m2 = mape(scaled);
    if (std::abs(m1 - m2) > 1e-12 * std::max(1.0, m1)) return "mape not scale invariant";
    return "";
  });
}

inline PropertyResult prop_bootstrap_point(int cases, std::uint64_t seed) {
  return run_property("bootstrap point inside replicates", cases, seed,
                      [](Gen& g, int c) -> std::string {
    std::uniform_real_distribution<double> u(1.0, 100.0);
    std::vector<ActualPredicted> preds(static_cast<std::size_t>(uniform(g, 5, 60)));
    for (auto& p : preds) p = {u(g), u(g)};
    EvalConfig cfg;
    cfg.n_bootstrap = uniform(g, 1, 12);
    cfg.bootstrap_size = static_cast<std::size_t>(uniform(g, 5, 40));
    cfg.k_top = static_cast<std::size_t>(uniform(g, 1, static_cast<int>(cfg.bootstrap_size)));
    cfg.seed = static_cast<std::uint64_t>(c);
    const auto [m, n] = bootstrap_metrics(preds, cfg);
    for (const MetricSummary* s : {&m, &n}) {
      const auto [lo, hi] =
          std::minmax_element(s->replicates.begin(), s->replicates.end());
      if (s->point < *lo - 1e-12 || s->point > *hi + 1e-12) {
        return "point outside replicate range";
      }
      if (!(s->q025 <= s->q975)) return "quantiles out of order";
    }
    return "";
  });
}

inline PropertyResult prop_series(int cases, std::uint64_t seed) {
  return run_property("series invariants", cases, seed,
                      [](Gen& g, int) -> std::string {
    const Timestamp t0 = from_unix(1541030400);
    Matching m;
    m.article = make_article("https://s.example/a", "t", t0, "");
    const int n = uniform(g, 0, 40);
    for (int i = 0; i < n; ++i) {
      // Some mentions land exactly on bucket edges.
      const int off = uniform(g, 0, 1) ? 1800 * uniform(g, 0, 60)
                                       : uniform(g, 0, 30 * 3600);
      m.mentions.push_back({std::to_string(i), t0 + Duration{off}});
    }
    const int hours = uniform(g, 1, 24);
    const Timestamp t1 = t0 + Duration{hours * 3600 + uniform(g, 0, 3599)};
    const MentionSeries hourly = build_series(m, t1, kHour);
    const MentionSeries half = build_series(m, t1, Duration{1800});
    if (hourly.size() != hours) return "wrong series length";
    for (int k = 1; k < hourly.size(); ++k) {
      if (hourly.cumulative[k] < hourly.cumulative[k - 1]) return "decreasing";
    }
    if (hourly.cumulative.back() > n) return "exceeds total mentions";
    for (int k = 0; k < hourly.size(); ++k) {
      if (half.cumulative[2 * k + 1] != hourly.cumulative[k]) {
        return "refine then coarsen differs";
      }
    }
    const auto target = target_mentions(m, Duration{86400}, t0 + Duration{86400});
    if (target < hourly.cumulative.back()) return "target below f_K";
    const auto a = time_series_features(hourly, t1);
    const auto b = time_series_features(hourly, t1 - Duration{uniform(g, 0, 3600 * (hours - 1))});
    if (!std::equal(b.begin(), b.end(), a.begin())) return "prefix property";
    return "";
  });
}

inline PropertyResult prop_features(int cases, std::uint64_t seed) {
  static const char* kWords[] = {"bitcoin", "btc", "ethereal", "eth", "ether",
                                 "price", "crash", "Bitcoin,", "cash", "the"};
  const std::vector<std::string> hosts = synthetic_hosts(12);
  return run_property("feature invariants", cases, seed,
                      [&hosts](Gen& g, int) -> std::string {
    std::string title;
    const int len = uniform(g, 1, 8);
    for (int i = 0; i < len; ++i) title += std::string(kWords[uniform(g, 0, 9)]) + " ";
    const Article a = make_article(
        "https://" + hosts[static_cast<std::size_t>(uniform(g, 0, 11))] + "/x",
        title, from_unix(0), "");
    std::vector<std::string> pick(hosts.begin(), hosts.begin() + 10);
    std::shuffle(pick.begin(), pick.end(), g);
    const BitVector ctx = context_features(a, PublisherList(pick));
    if (std::count(ctx.begin(), ctx.end(), 1) > 1) return "context weight > 1";

    std::vector<KeywordMap::Concept> concepts{{"bitcoin", {"bitcoin"}},
                                              {"ethereum", {"ether"}}};
    const BitVector before = content_features(a, KeywordMap(concepts));
    concepts[0].keywords.push_back(kWords[uniform(g, 0, 9)]);
    concepts[1].keywords.push_back("bitcoin cash");
    const BitVector after = content_features(a, KeywordMap(concepts));
    for (std::size_t i = 0; i < before.size(); ++i) {
      if (before[i] && !after[i]) return "adding a keyword cleared a bit";
    }
    return "";
  });
}

inline PropertyResult prop_forest_mean(int cases, std::uint64_t seed) {
  ArDataset data;
  data.dim = 4;
  Gen fit_gen(seed);
  std::uniform_real_distribution<double> u(-5.0, 5.0);
  for (int i = 0; i < 150; ++i) {
    std::vector<double> x(4);
    for (double& v : x) v = u(fit_gen);
    data.append({x, x[0] * x[1] + u(fit_gen)});
  }
  ForestOptions fo;
  fo.n_estimators = 13;
  fo.seed = seed;
  fo.threads = 1;
  const RandomForest forest = RandomForest::fit(data, fo);
  return run_property("forest mean of trees", cases, seed,
                      [&forest, &u](Gen& g, int) -> std::string {
    std::vector<double> x(4);
    for (double& v : x) v = u(g);
    double sum = 0.0;
    for (const RegressionTree& t : forest.trees()) sum += t.predict(x);
    return forest.predict(x) == sum / static_cast<double>(forest.trees().size())
               ? ""
               : std::string("ensemble prediction is not the tree mean");
  });
}

inline std::vector<PropertyResult> run_all_properties(int cases,
                                                      std::uint64_t seed) {
  return {prop_merge_idempotent(cases, seed),
          prop_merge_permutation(cases, seed),
          prop_merge_complete(cases, seed),
          prop_mention_conservation(cases, seed),
          prop_canonical_idempotent(cases, seed),
          prop_anomaly_ledger(cases, seed),
          prop_monotone_forecasts(cases, seed),
          prop_balanced_set(cases, seed),
          prop_ranking_permutation(cases, seed),
          prop_metrics(cases, seed),
          prop_bootstrap_point(cases, seed),
          prop_series(cases, seed),
          prop_features(cases, seed),
          prop_forest_mean(cases, seed)};
}

}  // namespace newsrank::testing
