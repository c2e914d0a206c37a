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

#include "newsrank/eval.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "newsrank/error.h"
#include "newsrank/stats.h"

namespace newsrank {

double mape(std::span<const ActualPredicted> pairs) {
  if (pairs.empty()) throw InputError("MAPE of an empty set");
  double sum = 0.0;
  for (const ActualPredicted& p : pairs) {
    if (p.actual == 0.0) {
      throw DomainError(
          "MAPE undefined for a zero actual value; restrict to articles with "
          "mentions first");
    }
    sum += std::abs((p.actual - p.predicted) / p.actual);
  }
  return sum / static_cast<double>(pairs.size());
}

double ndcg_at_k(std::span<const ActualPredicted> items, std::size_t k) {
  if (k == 0 || k > items.size()) {
    throw InputError("NDCG cutoff " + std::to_string(k) +
                     " outside [1, " + std::to_string(items.size()) + "]");
  }
  std::vector<ActualPredicted> ranked(items.begin(), items.end());
  std::sort(ranked.begin(), ranked.end(),
            [](const ActualPredicted& a, const ActualPredicted& b) {
              if (a.predicted != b.predicted) return a.predicted > b.predicted;
              return a.actual < b.actual;
            });
  std::vector<double> ideal(items.size());
  std::transform(items.begin(), items.end(), ideal.begin(),
                 [](const ActualPredicted& p) { return p.actual; });
  std::sort(ideal.begin(), ideal.end(), std::greater<>());

  double dcg = 0.0, idcg = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    const double discount = 1.0 / std::log2(static_cast<double>(i) + 2.0);
    dcg += ranked[i].actual * discount;
    idcg += ideal[i] * discount;
  }
  return idcg == 0.0 ? 1.0 : dcg / idcg;
}

void EvalConfig::validate(int target_step) const {
  if (start_steps.empty()) throw ConfigError("no prediction start times");
  for (int s : start_steps) {
    if (s < 1 || s >= target_step) {
      throw ConfigError("prediction start " + std::to_string(s) +
                        " must lie in [1, " + std::to_string(target_step) +
                        ")");
    }
  }
  if (n_bootstrap < 1) throw ConfigError("need at least one bootstrap sample");
  if (k_top < 1 || k_top > bootstrap_size) {
    throw ConfigError("k must lie in [1, bootstrap size]");
  }
}

const StartTimeResult& EvalReport::at(int start_step) const {
  for (const StartTimeResult& r : results) {
    if (r.start_step == start_step) return r;
  }
  throw InputError("no result for start time " + std::to_string(start_step));
}

namespace {

MetricSummary summarize(std::vector<double> replicates) {
  MetricSummary s;
  s.point = mean(replicates);
  std::vector<double> sorted = replicates;
  std::sort(sorted.begin(), sorted.end());
  s.q025 = quantile_sorted(sorted, 0.025);
  s.q50 = quantile_sorted(sorted, 0.5);
  s.q975 = quantile_sorted(sorted, 0.975);
  s.replicates = std::move(replicates);
  return s;
}

nlohmann::ordered_json summary_json(const MetricSummary& s) {
  return {{"point", s.point},
          {"q025", s.q025},
          {"q50", s.q50},
          {"q975", s.q975},
          {"replicates", s.replicates}};
}

}  // namespace

std::pair<MetricSummary, MetricSummary> bootstrap_metrics(
    std::span<const ActualPredicted> predictions, const EvalConfig& config) {
  if (predictions.empty()) throw CorpusError("nothing to evaluate");
  std::vector<double> mapes, ndcgs;
  std::vector<ActualPredicted> sample(config.bootstrap_size);
  std::vector<std::size_t> by_actual(config.bootstrap_size);
  std::vector<ActualPredicted> top;
  for (int b = 0; b < config.n_bootstrap; ++b) {
    Rng rng = substream(config.seed, static_cast<std::uint64_t>(b));
    std::uniform_int_distribution<std::size_t> draw(0, predictions.size() - 1);
    for (auto& s : sample) s = predictions[draw(rng)];

    ndcgs.push_back(ndcg_at_k(sample, config.k_top));

    std::iota(by_actual.begin(), by_actual.end(), std::size_t{0});
    std::stable_sort(by_actual.begin(), by_actual.end(),
                     [&](std::size_t a, std::size_t c) {
                       return sample[a].actual > sample[c].actual;
                     });
    top.clear();
    for (std::size_t i = 0; i < config.k_top; ++i) {
      if (sample[by_actual[i]].actual > 0.0) top.push_back(sample[by_actual[i]]);
    }
    if (top.empty()) {
      throw CorpusError("bootstrap sample without any mentioned article");
    }
    mapes.push_back(mape(top));
  }
  return {summarize(std::move(mapes)), summarize(std::move(ndcgs))};
}

double predict_at(const Forecaster& model, const LabeledExample& example,
                  int start_step, int target_step) {
  if (start_step < 1 ||
      start_step > static_cast<int>(example.series.size())) {
    throw InputError("prediction start outside the observed series");
  }
  const std::vector<double> ts(example.series.begin(),
                               example.series.begin() + start_step);
  return model.forecast(ts, example.statics, target_step)
      .final_value(ts.back());
}

EvalReport bootstrap_eval(std::span<const LabeledExample> validation,
                          const Forecaster& model, const EvalConfig& config,
                          int target_step) {
  config.validate(target_step);
  if (validation.size() < config.bootstrap_size) {
    throw CorpusError("validation set has " +
                      std::to_string(validation.size()) +
                      " mature articles, bootstrap needs " +
                      std::to_string(config.bootstrap_size));
  }
  EvalReport report;
  report.model_kind = model.kind();
  report.config = config;
  report.n_articles = validation.size();
  std::vector<ActualPredicted> predictions(validation.size());
  for (int start : config.start_steps) {
    for (std::size_t i = 0; i < validation.size(); ++i) {
      predictions[i] = {static_cast<double>(validation[i].target),
                        predict_at(model, validation[i], start, target_step)};
    }
    auto [m, n] = bootstrap_metrics(predictions, config);
    report.results.push_back({start, std::move(m), std::move(n)});
  }
  return report;
}

nlohmann::ordered_json EvalReport::to_json() const {
  nlohmann::ordered_json j;
  j["model_kind"] = model_kind;
  j["n_articles"] = n_articles;
  j["config"] = {{"start_times", config.start_steps},
                 {"k", config.k_top},
                 {"bootstrap", config.n_bootstrap},
                 {"size", config.bootstrap_size},
                 {"seed", config.seed}};
  auto& res = j["results"] = nlohmann::ordered_json::array();
  nlohmann::ordered_json plot;
  for (const StartTimeResult& r : results) {
    res.push_back({{"start_time", r.start_step},
                   {"mape", summary_json(r.mape)},
                   {"ndcg", summary_json(r.ndcg)}});
    plot["start_times"].push_back(r.start_step);
    plot["mape_point"].push_back(r.mape.point);
    plot["mape_q025"].push_back(r.mape.q025);
    plot["mape_q975"].push_back(r.mape.q975);
    plot["ndcg_point"].push_back(r.ndcg.point);
    plot["ndcg_q025"].push_back(r.ndcg.q025);
    plot["ndcg_q975"].push_back(r.ndcg.q975);
  }
  j["plot"] = std::move(plot);
  return j;
}

std::vector<std::size_t> balance_training_set(std::span<const double> targets,
                                              Rng& rng) {
  const std::size_t n = targets.size();
  if (n < 20) throw InputError("balancing needs at least 20 articles");
  const std::size_t m = n / 20;

  std::vector<std::size_t> by_target(n);
  std::iota(by_target.begin(), by_target.end(), std::size_t{0});
  std::stable_sort(by_target.begin(), by_target.end(),
                   [&](std::size_t a, std::size_t b) {
                     return targets[a] > targets[b];
                   });
  std::vector<double> sorted(targets.begin(), targets.end());
  std::sort(sorted.begin(), sorted.end());
  const double p75 = nearest_rank_percentile(sorted, 75.0);
  const double p95 = nearest_rank_percentile(sorted, 95.0);

  std::vector<std::size_t> medium, low;
  for (std::size_t i = 0; i < n; ++i) {
    if (targets[i] >= p75 && targets[i] < p95) medium.push_back(i);
    if (targets[i] < p75) low.push_back(i);
  }

  std::vector<std::size_t> out(by_target.begin(),
                               by_target.begin() + static_cast<std::ptrdiff_t>(m));
  std::vector<std::size_t> all;
  const auto draw = [&](std::vector<std::size_t>& stratum) {
    if (stratum.empty()) {
      if (all.empty()) {
        all.resize(n);
        std::iota(all.begin(), all.end(), std::size_t{0});
      }
      stratum = all;
    }
    if (stratum.size() >= m) {
      for (std::size_t j = 0; j < m; ++j) {
        std::uniform_int_distribution<std::size_t> pick(j, stratum.size() - 1);
        std::swap(stratum[j], stratum[pick(rng)]);
        out.push_back(stratum[j]);
      }
    } else {
      std::uniform_int_distribution<std::size_t> pick(0, stratum.size() - 1);
      for (std::size_t j = 0; j < m; ++j) out.push_back(stratum[pick(rng)]);
    }
  };
  draw(medium);
  draw(low);
  return out;
}

}  // namespace newsrank
