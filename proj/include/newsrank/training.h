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

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "newsrank/dataset.h"
#include "newsrank/features.h"
#include "newsrank/models/forecast.h"
#include "newsrank/models/random_forest.h"
#include "newsrank/models/seq2seq.h"
#include "newsrank/store.h"
#include "newsrank/timeseries.h"

namespace newsrank {

enum class ModelKind { kBaseline, kLinearAr, kRandomForest, kSeq2Seq };

// Accepts baseline, linear_ar, rf and s2s.
ModelKind parse_model_kind(std::string_view name);
std::string model_kind_name(ModelKind kind);

struct TrainOptions {
  ModelKind kind = ModelKind::kRandomForest;
  // Autoregressive order, or the fitting window for the baseline.
  int order = 3;
  ForestOptions forest;
  Seq2SeqConfig s2s;
  Seq2SeqTrainOptions s2s_train;
  bool balance = true;
  // Seeds balancing, forest fitting and network initialization.
  std::uint64_t seed = 0;
};

// Indices of the balanced training subset, in selection order.
std::vector<std::size_t> balanced_indices(
    std::span<const LabeledExample> examples, std::uint64_t seed);

ArDataset make_ar_dataset(std::span<const LabeledExample> examples, int order);

// Fits on the examples as given; balancing is the caller's choice.
std::unique_ptr<Forecaster> train_model(
    std::span<const LabeledExample> examples, std::size_t static_dim,
    int target_step, const TrainOptions& options);

struct TrainingRun {
  std::unique_ptr<Forecaster> model;
  FeatureSpace features;
  std::size_t mature_articles = 0;
  std::size_t training_examples = 0;
};

// Builds the feature space from the mature part of the store, balances if
// requested and fits.
TrainingRun train_from_store(const Store& store, const FeatureConfig& config,
                             const Horizon& horizon,
                             const TrainOptions& options);

}  // namespace newsrank
