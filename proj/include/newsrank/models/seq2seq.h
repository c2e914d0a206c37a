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
#include <functional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "newsrank/models/forecast.h"
#include "newsrank/models/gru.h"
#include "newsrank/random.h"

namespace newsrank {

struct Seq2SeqConfig {
  int hidden = 200;
  int dense = 200;
  double input_dropout = 0.3;      // on the dense-layer inputs
  double recurrent_dropout = 0.1;  // on the hidden state passed on
  double init_scale = 0.08;        // weights ~ U(-init_scale, init_scale)
};

// Encoder-decoder GRU forecaster working on log1p counts.
//
// The encoder reads the observed values; its final state seeds the decoder,
// whose first input is the last observed value. At every decoder step the
// GRU output, the static features and the fraction of elapsed steps K/N go
// through a one-hidden-layer tanh network whose output is added to the
// previous value to form the next one, which is fed back as the next input.
class Seq2SeqModel final : public Forecaster {
 public:
  struct Block {
    std::string name;
    Eigen::Index rows = 0, cols = 0, offset = 0;
  };

  // Randomly initialized model.
  Seq2SeqModel(const Seq2SeqConfig& config, std::size_t static_dim,
               int target_step, std::uint64_t seed);
  // Model with explicit flat parameters (column-major blocks).
  Seq2SeqModel(const Seq2SeqConfig& config, std::size_t static_dim,
               int target_step, Eigen::VectorXd parameters);

  std::string kind() const override { return "s2s"; }
  int min_history() const override { return 1; }
  int order() const override { return 1; }
  std::size_t static_dim() const override { return static_dim_; }
  std::string transform() const override { return "log1p"; }

  const Seq2SeqConfig& config() const { return config_; }
  int target_step() const { return target_step_; }
  const std::vector<Block>& blocks() const { return blocks_; }
  Eigen::VectorXd& parameters() { return params_; }
  const Eigen::VectorXd& parameters() const { return params_; }

  Eigen::Map<const Eigen::MatrixXd> block(const std::string& name) const;
  Eigen::Map<Eigen::MatrixXd> block(const std::string& name);

  // Decoder outputs (log1p space) for `steps` steps after `inputs`, which are
  // already log1p transformed. Dropout is applied only when `rng` is set.
  std::vector<double> rollout(std::span<const double> inputs,
                              std::span<const double> statics, int steps,
                              Rng* rng = nullptr) const;

  // Sum of squared log1p-space errors of the rollout that starts after the
  // first `input_length` values of `series` (raw counts) and is supervised
  // by the rest. When `gradient` is non-null it receives dLoss/dParameters.
  double loss_and_gradient(std::span<const double> series,
                           std::span<const double> statics, int input_length,
                           Eigen::VectorXd* gradient,
                           Rng* rng = nullptr) const;

  Forecast forecast(std::span<const double> ts, std::span<const double> statics,
                    int target_step, bool with_interval) const override;
  void write_params(std::ostream& out) const override;

 private:
  struct Cache;

  void layout();
  GruWeights gru_weights(const std::string& prefix) const;
  std::vector<double> run(std::span<const double> inputs,
                          std::span<const double> statics, int steps,
                          Rng* rng, Cache* cache) const;

  Seq2SeqConfig config_;
  std::size_t static_dim_;
  int target_step_;
  std::vector<Block> blocks_;
  Eigen::VectorXd params_;
};

// Forecast in count space; dropout is active in train mode.
Forecast s2s_forward(const Seq2SeqModel& model, std::span<const double> ts,
                     std::span<const double> statics, int target_step,
                     bool train_mode, Rng* rng = nullptr);

// Sum of squared errors. Throws InputError on length mismatch.
double s2s_loss(std::span<const double> predicted,
                std::span<const double> actual);

struct Seq2SeqExample {
  std::vector<double> series;  // raw counts f_1..f_N
  std::vector<double> statics;
};

struct TrainPhase {
  int epochs = 30;
  double learning_rate = 1e-3;
};

struct Seq2SeqTrainOptions {
  std::vector<TrainPhase> schedule{{30, 1e-3}, {30, 1e-4}, {30, 1e-6}};
  int batch_size = 64;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double epsilon = 1e-8;
  std::uint64_t seed = 0;
  bool dropout = true;
  // Observed prefix lengths are drawn uniformly from
  // [min_input_length, N - 1] for every example and epoch.
  int min_input_length = 1;
  // Called after every optimizer step with (global step, mean batch loss).
  std::function<void(long, double)> on_batch;
};

struct Seq2SeqTrainStats {
  std::vector<double> epoch_loss;  // mean per-series loss
  long steps = 0;
};

// Adam on minibatches; backpropagation through time over the free-running
// decoder rollout. Throws TrainingError when the loss becomes non-finite.
Seq2SeqTrainStats s2s_train(Seq2SeqModel& model,
                            std::span<const Seq2SeqExample> corpus,
                            const Seq2SeqTrainOptions& options);

}  // namespace newsrank
