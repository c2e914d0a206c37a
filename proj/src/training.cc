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

#include <utility>

#include "newsrank/error.h"
#include "newsrank/eval.h"
#include "newsrank/models/baseline.h"
#include "newsrank/models/linear_ar.h"
#include "newsrank/random.h"

namespace newsrank {

namespace {

constexpr std::uint64_t kBalanceStream = 0xba1a;

}  // namespace

ModelKind parse_model_kind(std::string_view name) {
  if (name == "baseline") return ModelKind::kBaseline;
  if (name == "linear_ar") return ModelKind::kLinearAr;
  if (name == "rf") return ModelKind::kRandomForest;
  if (name == "s2s") return ModelKind::kSeq2Seq;
  throw ConfigError("unknown model kind '" + std::string(name) + "'");
}

std::string model_kind_name(ModelKind kind) {
  switch (kind) {
    case ModelKind::kBaseline:
      return "baseline";
    case ModelKind::kLinearAr:
      return "linear_ar";
    case ModelKind::kRandomForest:
      return "rf";
    case ModelKind::kSeq2Seq:
      return "s2s";
  }
  return "unknown";
}

std::vector<std::size_t> balanced_indices(
    std::span<const LabeledExample> examples, std::uint64_t seed) {
  std::vector<double> targets;
  targets.reserve(examples.size());
  for (const LabeledExample& ex : examples) {
    targets.push_back(static_cast<double>(ex.target));
  }
  Rng rng = substream(seed, kBalanceStream);
  return balance_training_set(targets, rng);
}

ArDataset make_ar_dataset(std::span<const LabeledExample> examples,
                          int order) {
  ArDataset data;
  for (const LabeledExample& ex : examples) {
    data.append(make_ar_samples(ex.series, order, ex.statics));
  }
  return data;
}

std::unique_ptr<Forecaster> train_model(
    std::span<const LabeledExample> examples, std::size_t static_dim,
    int target_step, const TrainOptions& options) {
  if (examples.empty()) throw InputError("no training examples");
  for (const LabeledExample& ex : examples) {
    if (ex.statics.size() != static_dim) {
      throw ConfigError("example static features do not match the space");
    }
  }
  switch (options.kind) {
    case ModelKind::kBaseline:
      return std::make_unique<BaselineModel>(options.order, static_dim);
    case ModelKind::kLinearAr: {
      LinearArFit fit = linear_ar_fit(make_ar_dataset(examples, options.order),
                                      options.order, static_dim);
      return std::make_unique<LinearArModel>(std::move(fit.model));
    }
    case ModelKind::kRandomForest: {
      ForestOptions forest = options.forest;
      forest.seed = options.seed;
      return std::make_unique<RandomForestArModel>(
          rf_fit(make_ar_dataset(examples, options.order), options.order,
                 static_dim, forest));
    }
    case ModelKind::kSeq2Seq: {
      auto model = std::make_unique<Seq2SeqModel>(options.s2s, static_dim,
                                                  target_step, options.seed);
      std::vector<Seq2SeqExample> corpus;
      corpus.reserve(examples.size());
      for (const LabeledExample& ex : examples) {
        corpus.push_back({as_doubles(ex.series), ex.statics});
      }
      Seq2SeqTrainOptions train = options.s2s_train;
      train.seed = options.seed;
      s2s_train(*model, corpus, train);
      return model;
    }
  }
  throw ConfigError("unknown model kind");
}

TrainingRun train_from_store(const Store& store, const FeatureConfig& config,
                             const Horizon& horizon,
                             const TrainOptions& options) {
  const std::vector<Matching> mature =
      mature_matchings(store.matchings, store.observed_until, horizon);
  if (mature.empty()) throw CorpusError("store has no mature articles");
  TrainingRun run;
  run.features.keywords = config.keywords;
  run.features.publishers = top_publishers(mature, config.n_top_publishers);
  run.mature_articles = mature.size();

  std::vector<LabeledExample> examples = prepare_examples(
      mature, store.observed_until, horizon, run.features);
  if (options.balance) {
    std::vector<LabeledExample> balanced;
    for (std::size_t i : balanced_indices(examples, options.seed)) {
      balanced.push_back(examples[i]);
    }
    examples = std::move(balanced);
  }
  run.training_examples = examples.size();
  run.model = train_model(examples, run.features.static_dim(), horizon.steps(),
                          options);
  return run;
}

}  // namespace newsrank
