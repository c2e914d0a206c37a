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


// Command-line front end: synth, ingest, series, train, evaluate, serve.

#include <csignal>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "newsrank/dataset.h"
#include "newsrank/error.h"
#include "newsrank/eval.h"
#include "newsrank/ingest.h"
#include "newsrank/model_io.h"
#include "newsrank/serve.h"
#include "newsrank/store.h"
#include "newsrank/synth.h"
#include "newsrank/training.h"

namespace nr = newsrank;

namespace {

volatile std::sig_atomic_t g_stop = 0;

void write_json_file(const std::filesystem::path& path,
                     const nlohmann::ordered_json& j) {
  std::ofstream out(path);
  if (!out) throw nr::IoError("cannot write " + path.string());
  out << j.dump(2) << '\n';
  if (!out) throw nr::IoError("write failed for " + path.string());
}

struct SynthArgs {
  std::size_t n = 25000;
  double tau = 4.0;
  double amplitude = 40.0;
  std::string start = "2018-11-01T00:00:00Z";
  int span_days = 30;
  std::string out;
  std::uint64_t seed = 0;
  nr::AnomalySpec anomalies;
};

int run_synth(const SynthArgs& a) {
  nr::CascadeParams params;
  params.tau_hours = a.tau;
  params.amplitude = a.amplitude;
  params.start = nr::parse_timestamp(a.start);
  params.span_days = a.span_days;
  params.seed = a.seed;
  nr::SyntheticCorpus corpus = nr::generate_corpus(a.n, params);
  nr::AnomalySpec spec = a.anomalies;
  spec.seed = a.seed;
  const nr::AnomalyLedger ledger = nr::inject_anomalies(corpus, spec);
  nr::write_corpus(a.out, corpus);
  if (!spec.empty()) {
    write_json_file(std::filesystem::path(a.out) / "anomalies.json",
                    {{"merged", ledger.expected_merged()},
                     {"duplicate_tweets", ledger.expected_duplicate_tweets()},
                     {"outside_window", ledger.expected_outside_window()},
                     {"duplicate_urls", ledger.duplicate_urls},
                     {"far_future_urls", ledger.far_future_urls},
                     {"ancient_urls", ledger.ancient_urls}});
  }
  std::cerr << "wrote " << corpus.articles.size() << " articles and "
            << corpus.tweets.size() << " tweets to " << a.out << "\n";
  return 0;
}

template <typename Record>
std::vector<Record> load_or_throw(const std::string& path) {
  nr::LoadResult<Record> r = nr::load_records<Record>(path);
  if (r.skipped > 0) {
    std::cerr << path << ": skipped " << r.skipped << " malformed lines\n";
  }
  return std::move(r.records);
}

struct IngestArgs {
  std::string articles, tweets, matchings, out;
  std::optional<std::string> window_start, window_end, observed_until;
};

int run_ingest(const IngestArgs& a) {
  const auto articles = load_or_throw<nr::Article>(a.articles);
  const auto tweets = load_or_throw<nr::Tweet>(a.tweets);
  const auto records = load_or_throw<nr::MatchingRecord>(a.matchings);

  // Without an explicit window, publication dates must fall between a week
  // before the first tweet and the clock-skew tolerance after the last one.
  nr::Timestamp first_tweet = nr::from_unix(0), last_tweet = nr::from_unix(0);
  if (!tweets.empty()) {
    first_tweet = last_tweet = tweets.front().published_at;
    for (const nr::Tweet& t : tweets) {
      first_tweet = std::min(first_tweet, t.published_at);
      last_tweet = std::max(last_tweet, t.published_at);
    }
  }
  nr::IngestOptions options;
  options.window.start = a.window_start
                             ? nr::parse_timestamp(*a.window_start)
                             : first_tweet - nr::Duration{7 * 86400};
  options.window.end = a.window_end ? nr::parse_timestamp(*a.window_end)
                                    : last_tweet + nr::kClockSkewTolerance;

  nr::IngestResult result = nr::ingest(articles, tweets, records, options);
  nr::Store store;
  store.observed_until = a.observed_until
                             ? nr::parse_timestamp(*a.observed_until)
                             : nr::latest_activity(result.matchings);
  store.matchings = std::move(result.matchings);
  nr::write_store(a.out, store, &result.report);
  const nr::IngestReport& r = result.report;
  std::cerr << "ingested " << r.matchings_out << " articles ("
            << r.outside_window << " outside window, " << r.merged_away
            << " merged, " << r.duplicate_tweets << " duplicate tweets, "
            << r.mentions_dropped << " mentions dropped)\n";
  return 0;
}

struct SeriesArgs {
  std::string store, d = "1h", delta = "24h", out;
};

int run_series(const SeriesArgs& a) {
  const nr::Store store = nr::load_store(a.store);
  const nr::Duration step = nr::parse_duration(a.d);
  const nr::Duration delta = nr::parse_duration(a.delta);
  std::ofstream out(a.out);
  if (!out) throw nr::IoError("cannot write " + a.out);
  for (const nr::Matching& m : store.matchings) {
    const nr::Timestamp t0 = m.article.published_at;
    const nr::Timestamp t1 = std::min(store.observed_until, t0 + delta);
    nr::MentionSeries s{t0, step, {}};
    if (t1 > t0) s = nr::build_series(m, t1, step);
    nlohmann::ordered_json line{{"article", m.article.url},
                                {"t0", nr::format_timestamp(t0)},
                                {"cumulative", s.cumulative}};
    out << line.dump() << '\n';
  }
  return 0;
}

struct TrainArgs {
  std::string model = "rf";
  int order = 3;
  int n_estimators = 500;
  std::string store, out;
  std::optional<std::string> features;
  std::uint64_t seed = 0;
  bool no_balance = false;
  unsigned threads = 0;
  int hidden = 200, dense = 200;
  std::vector<int> epochs{30, 30, 30};
};

int run_train(const TrainArgs& a) {
  const nr::Store store = nr::load_store(a.store);
  const nr::FeatureConfig config =
      a.features ? nr::FeatureConfig::load(*a.features) : nr::FeatureConfig{};
  nr::TrainOptions options;
  options.kind = nr::parse_model_kind(a.model);
  options.order = a.order;
  options.seed = a.seed;
  options.balance = !a.no_balance;
  options.forest.n_estimators = a.n_estimators;
  options.forest.threads = a.threads;
  options.s2s.hidden = a.hidden;
  options.s2s.dense = a.dense;
  if (a.epochs.size() != options.s2s_train.schedule.size()) {
    throw nr::ConfigError("--epochs takes one count per learning-rate phase");
  }
  for (std::size_t i = 0; i < a.epochs.size(); ++i) {
    options.s2s_train.schedule[i].epochs = a.epochs[i];
  }
  const nr::TrainingRun run =
      nr::train_from_store(store, config, nr::Horizon(), options);
  nr::save_model(a.out, *run.model, run.features);
  std::cerr << "trained " << run.model->kind() << " on "
            << run.training_examples << " of " << run.mature_articles
            << " mature articles\n";
  return 0;
}

struct EvaluateArgs {
  std::string model, store, out;
  std::vector<int> start_times{5, 10, 15, 20};
  std::size_t k = 100;
  int bootstrap = 100;
  std::size_t size = 2000;
  std::uint64_t seed = 0;
};

int run_evaluate(const EvaluateArgs& a) {
  const nr::LoadedModel loaded = nr::load_model(a.model);
  const nr::Store store = nr::load_store(a.store);
  const nr::Horizon horizon;
  const std::vector<nr::LabeledExample> examples = nr::prepare_examples(
      store.matchings, store.observed_until, horizon, loaded.features);
  nr::EvalConfig config;
  config.start_steps = a.start_times;
  config.k_top = a.k;
  config.n_bootstrap = a.bootstrap;
  config.bootstrap_size = a.size;
  config.seed = a.seed;
  const nr::EvalReport report =
      nr::bootstrap_eval(examples, *loaded.model, config, horizon.steps());
  write_json_file(a.out, report.to_json());
  for (const nr::StartTimeResult& r : report.results) {
    std::cerr << "start " << r.start_step << " h: MAPE " << r.mape.point
              << " [" << r.mape.q025 << ", " << r.mape.q975 << "], NDCG "
              << r.ndcg.point << " [" << r.ndcg.q025 << ", " << r.ndcg.q975
              << "]\n";
  }
  return 0;
}

struct ServeArgs {
  std::string store, model, bind = "127.0.0.1:8080";
  double cadence = 600;
  std::optional<std::string> now;
};

int run_serve(const ServeArgs& a) {
  const auto colon = a.bind.rfind(':');
  if (colon == std::string::npos) {
    throw nr::ConfigError("--bind expects HOST:PORT");
  }
  nr::ServiceConfig config;
  config.store_dir = a.store;
  config.host = a.bind.substr(0, colon);
  config.port = std::stoi(a.bind.substr(colon + 1));
  config.cadence = std::chrono::milliseconds(
      static_cast<std::int64_t>(a.cadence * 1000.0));
  if (a.now) {
    // Replays a historical store: the clock starts at --now and advances in
    // real time.
    const nr::Timestamp base = nr::parse_timestamp(*a.now);
    const auto started = std::chrono::steady_clock::now();
    config.clock = [base, started] {
      return base + std::chrono::floor<nr::Duration>(
                        std::chrono::steady_clock::now() - started);
    };
  }
  nr::ScoringService service(std::move(config), nr::load_model(a.model));
  service.start();
  std::cerr << "serving on " << a.bind.substr(0, colon) << ":"
            << service.port() << "\n";
  std::signal(SIGINT, [](int) { g_stop = 1; });
  std::signal(SIGTERM, [](int) { g_stop = 1; });
  while (!g_stop) std::this_thread::sleep_for(std::chrono::milliseconds(200));
  service.stop();
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Forecast and rank news articles by future tweet mentions"};
  app.require_subcommand(1);

  SynthArgs synth;
  auto* s = app.add_subcommand("synth", "Generate a synthetic corpus");
  s->add_option("--n", synth.n, "Number of articles");
  s->add_option("--tau", synth.tau, "Decay timescale in hours");
  s->add_option("--amplitude", synth.amplitude, "Mean total mentions");
  s->add_option("--start", synth.start, "Earliest publication time");
  s->add_option("--span-days", synth.span_days, "Publication period in days");
  s->add_option("--out", synth.out, "Output directory")->required();
  s->add_option("--seed", synth.seed);
  s->add_option("--query-duplicates", synth.anomalies.query_duplicates);
  s->add_option("--duplicate-tweets", synth.anomalies.duplicate_tweets);
  s->add_option("--far-future", synth.anomalies.far_future);
  s->add_option("--ancient", synth.anomalies.ancient);

  IngestArgs ingest;
  auto* i = app.add_subcommand("ingest", "Build a store from JSONL records");
  i->add_option("--articles", ingest.articles)->required();
  i->add_option("--tweets", ingest.tweets)->required();
  i->add_option("--matchings", ingest.matchings)->required();
  i->add_option("--out", ingest.out, "Store directory")->required();
  i->add_option("--window-start", ingest.window_start);
  i->add_option("--window-end", ingest.window_end);
  i->add_option("--observed-until", ingest.observed_until,
                "Defaults to the latest mention");

  SeriesArgs series;
  auto* se = app.add_subcommand("series", "Export cumulative mention series");
  se->add_option("--store", series.store)->required();
  se->add_option("--d", series.d, "Step, e.g. 1h or 30m");
  se->add_option("--delta", series.delta, "Series length after publication");
  se->add_option("--out", series.out)->required();

  TrainArgs train;
  auto* t = app.add_subcommand("train", "Fit a forecasting model");
  t->add_option("--model", train.model)
      ->check(CLI::IsMember({"baseline", "linear_ar", "rf", "s2s"}));
  t->add_option("--order", train.order);
  t->add_option("--n-estimators", train.n_estimators);
  t->add_option("--store", train.store)->required();
  t->add_option("--out", train.out)->required();
  t->add_option("--features", train.features, "Feature config JSON");
  t->add_option("--seed", train.seed);
  t->add_flag("--no-balance", train.no_balance);
  t->add_option("--threads", train.threads, "0 uses every core");
  t->add_option("--hidden", train.hidden);
  t->add_option("--dense", train.dense);
  t->add_option("--epochs", train.epochs, "Epochs per learning-rate phase")
      ->delimiter(',');

  EvaluateArgs eval;
  auto* e = app.add_subcommand("evaluate", "Bootstrap MAPE and NDCG");
  e->add_option("--model", eval.model)->required();
  e->add_option("--store", eval.store)->required();
  e->add_option("--start-times", eval.start_times)->delimiter(',');
  e->add_option("--k", eval.k);
  e->add_option("--bootstrap", eval.bootstrap);
  e->add_option("--size", eval.size);
  e->add_option("--seed", eval.seed);
  e->add_option("--out", eval.out)->required();

  ServeArgs serve;
  auto* v = app.add_subcommand("serve", "Serve periodic rankings over HTTP");
  v->add_option("--store", serve.store)->required();
  v->add_option("--model", serve.model)->required();
  v->add_option("--cadence", serve.cadence, "Seconds between passes");
  v->add_option("--bind", serve.bind, "HOST:PORT");
  v->add_option("--now", serve.now, "Start the clock at this time");

  CLI11_PARSE(app, argc, argv);
  try {
    if (*s) return run_synth(synth);
    if (*i) return run_ingest(ingest);
    if (*se) return run_series(series);
    if (*t) return run_train(train);
    if (*e) return run_evaluate(eval);
    if (*v) return run_serve(serve);
  } catch (const nr::Error& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 1;
  } catch (const std::exception& err) {
    std::cerr << "internal error: " << err.what() << "\n";
    return 2;
  }
  return 0;
}
