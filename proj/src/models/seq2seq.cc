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

#include "newsrank/models/seq2seq.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>

#include "json.hpp"
#include "newsrank/error.h"

namespace newsrank {

namespace {

constexpr const char* kGruBlocks[] = {"w_z", "u_z", "w_r", "u_r", "w", "u"};

Eigen::VectorXd dropout_mask(Eigen::Index size, double rate, Rng* rng) {
  if (rng == nullptr || rate <= 0.0) return Eigen::VectorXd::Ones(size);
  std::bernoulli_distribution keep(1.0 - rate);
  Eigen::VectorXd mask(size);
  const double scale = 1.0 / (1.0 - rate);
  for (Eigen::Index i = 0; i < size; ++i) mask(i) = keep(*rng) ? scale : 0.0;
  return mask;
}

}  // namespace

struct Seq2SeqModel::Cache {
  std::vector<GruStepCache> encoder, decoder;
  std::vector<Eigen::VectorXd> encoder_mask, decoder_mask;
  std::vector<Eigen::VectorXd> dense_input, dense_mask, dense_hidden;
  std::vector<double> outputs;
};

Seq2SeqModel::Seq2SeqModel(const Seq2SeqConfig& config, std::size_t static_dim,
                           int target_step, std::uint64_t seed)
    : config_(config), static_dim_(static_dim), target_step_(target_step) {
  layout();
  Rng rng = substream(seed, 0);
  std::uniform_real_distribution<double> init(-config.init_scale,
                                              config.init_scale);
  for (Eigen::Index i = 0; i < params_.size(); ++i) params_(i) = init(rng);
}

Seq2SeqModel::Seq2SeqModel(const Seq2SeqConfig& config, std::size_t static_dim,
                           int target_step, Eigen::VectorXd parameters)
    : config_(config), static_dim_(static_dim), target_step_(target_step) {
  layout();
  if (parameters.size() != params_.size()) {
    throw ConfigError("seq2seq parameter count " +
                      std::to_string(parameters.size()) + " != expected " +
                      std::to_string(params_.size()));
  }
  params_ = std::move(parameters);
}

void Seq2SeqModel::layout() {
  if (config_.hidden < 1 || config_.dense < 1) {
    throw ConfigError("seq2seq layer sizes must be positive");
  }
  if (target_step_ < 2) throw ConfigError("seq2seq target step must be >= 2");
  if (config_.input_dropout < 0.0 || config_.input_dropout >= 1.0 ||
      config_.recurrent_dropout < 0.0 || config_.recurrent_dropout >= 1.0) {
    throw ConfigError("dropout rates must lie in [0, 1)");
  }
  const Eigen::Index h = config_.hidden, d = config_.dense;
  const Eigen::Index in = h + static_cast<Eigen::Index>(static_dim_) + 1;
  Eigen::Index offset = 0;
  const auto add = [&](std::string name, Eigen::Index rows, Eigen::Index cols) {
    blocks_.push_back({std::move(name), rows, cols, offset});
    offset += rows * cols;
  };
  for (const char* part : {"encoder", "decoder"}) {
    for (const char* m : kGruBlocks) {
      const bool input_weight = m[0] == 'w';
      add(std::string(part) + "." + m, h, input_weight ? 1 : h);
    }
  }
  add("dense.w1", d, in);
  add("dense.b1", d, 1);
  add("dense.w2", 1, d);
  add("dense.b2", 1, 1);
  params_ = Eigen::VectorXd::Zero(offset);
}

Eigen::Map<const Eigen::MatrixXd> Seq2SeqModel::block(
    const std::string& name) const {
  for (const Block& b : blocks_) {
    if (b.name == name) {
      return {params_.data() + b.offset, b.rows, b.cols};
    }
  }
  throw InputError("unknown seq2seq block \"" + name + "\"");
}

Eigen::Map<Eigen::MatrixXd> Seq2SeqModel::block(const std::string& name) {
  for (const Block& b : blocks_) {
    if (b.name == name) return {params_.data() + b.offset, b.rows, b.cols};
  }
  throw InputError("unknown seq2seq block \"" + name + "\"");
}

GruWeights Seq2SeqModel::gru_weights(const std::string& prefix) const {
  return {block(prefix + ".w_z"), block(prefix + ".u_z"),
          block(prefix + ".w_r"), block(prefix + ".u_r"),
          block(prefix + ".w"),   block(prefix + ".u")};
}

std::vector<double> Seq2SeqModel::run(std::span<const double> inputs,
                                      std::span<const double> statics,
                                      int steps, Rng* rng, Cache* cache) const {
  if (inputs.empty()) throw InputError("seq2seq needs at least one input");
  if (statics.size() != static_dim_) {
    throw InputError("seq2seq static feature dimension mismatch");
  }
  const Eigen::Index h_dim = config_.hidden;
  const Eigen::Index in_dim = h_dim + static_cast<Eigen::Index>(static_dim_) + 1;
  const GruWeights encoder = gru_weights("encoder");
  const GruWeights decoder = gru_weights("decoder");
  const auto w1 = block("dense.w1");
  const auto b1 = block("dense.b1");
  const auto w2 = block("dense.w2");
  const double b2 = block("dense.b2")(0, 0);

  Eigen::VectorXd h = Eigen::VectorXd::Zero(h_dim);
  Eigen::VectorXd x(1);
  for (std::size_t t = 0; t < inputs.size(); ++t) {
    Eigen::VectorXd mask = dropout_mask(h_dim, config_.recurrent_dropout, rng);
    x(0) = inputs[t];
    GruStepCache* step = nullptr;
    if (cache != nullptr) step = &cache->encoder.emplace_back();
    h = gru_step(encoder, x, h.cwiseProduct(mask), step);
    if (cache != nullptr) cache->encoder_mask.push_back(std::move(mask));
  }

  std::vector<double> outputs;
  outputs.reserve(static_cast<std::size_t>(std::max(steps, 0)));
  double previous = inputs.back();
  Eigen::VectorXd dense_in(in_dim);
  for (int j = 0; j < steps; ++j) {
    Eigen::VectorXd mask = dropout_mask(h_dim, config_.recurrent_dropout, rng);
    x(0) = previous;
    GruStepCache* step = nullptr;
    if (cache != nullptr) step = &cache->decoder.emplace_back();
    h = gru_step(decoder, x, h.cwiseProduct(mask), step);

    dense_in.head(h_dim) = h;
    for (std::size_t s = 0; s < static_dim_; ++s) {
      dense_in(h_dim + static_cast<Eigen::Index>(s)) = statics[s];
    }
    dense_in(in_dim - 1) =
        static_cast<double>(inputs.size() + static_cast<std::size_t>(j)) /
        target_step_;
    Eigen::VectorXd dense_mask =
        dropout_mask(in_dim, config_.input_dropout, rng);
    Eigen::VectorXd masked = dense_in.cwiseProduct(dense_mask);
    Eigen::VectorXd hidden = (w1 * masked + b1).array().tanh().matrix();
    const double next = previous + (w2 * hidden)(0, 0) + b2;
    outputs.push_back(next);
    previous = next;
    if (cache != nullptr) {
      cache->decoder_mask.push_back(std::move(mask));
      cache->dense_input.push_back(std::move(masked));
      cache->dense_mask.push_back(std::move(dense_mask));
      cache->dense_hidden.push_back(std::move(hidden));
    }
  }
  if (cache != nullptr) cache->outputs = outputs;
  return outputs;
}

std::vector<double> Seq2SeqModel::rollout(std::span<const double> inputs,
                                          std::span<const double> statics,
                                          int steps, Rng* rng) const {
  return run(inputs, statics, steps, rng, nullptr);
}

double Seq2SeqModel::loss_and_gradient(std::span<const double> series,
                                       std::span<const double> statics,
                                       int input_length,
                                       Eigen::VectorXd* gradient,
                                       Rng* rng) const {
  const int n = static_cast<int>(series.size());
  if (input_length < 1 || input_length >= n) {
    throw InputError("seq2seq input length must lie in [1, series length)");
  }
  std::vector<double> transformed(series.size());
  std::transform(series.begin(), series.end(), transformed.begin(),
                 [](double v) { return std::log1p(v); });
  const std::span<const double> inputs(transformed.data(),
                                       static_cast<std::size_t>(input_length));
  const std::span<const double> targets(
      transformed.data() + input_length,
      static_cast<std::size_t>(n - input_length));
  const int steps = n - input_length;

  Cache cache;
  const std::vector<double> outputs =
      run(inputs, statics, steps, rng, gradient != nullptr ? &cache : nullptr);
  const double loss = s2s_loss(outputs, targets);
  if (gradient == nullptr) return loss;

  gradient->setZero(params_.size());
  const auto grad_block = [&](const std::string& name) {
    for (const Block& b : blocks_) {
      if (b.name == name) {
        return Eigen::Map<Eigen::MatrixXd>(gradient->data() + b.offset, b.rows,
                                           b.cols);
      }
    }
    throw InputError("unknown seq2seq block \"" + name + "\"");
  };
  const auto grad_gru = [&](const std::string& prefix) {
    return GruGradients{grad_block(prefix + ".w_z"), grad_block(prefix + ".u_z"),
                        grad_block(prefix + ".w_r"), grad_block(prefix + ".u_r"),
                        grad_block(prefix + ".w"),   grad_block(prefix + ".u")};
  };
  GruGradients g_encoder = grad_gru("encoder");
  GruGradients g_decoder = grad_gru("decoder");
  auto g_w1 = grad_block("dense.w1");
  auto g_b1 = grad_block("dense.b1");
  auto g_w2 = grad_block("dense.w2");
  auto g_b2 = grad_block("dense.b2");
  const GruWeights encoder = gru_weights("encoder");
  const GruWeights decoder = gru_weights("decoder");
  const auto w1 = block("dense.w1");
  const auto w2 = block("dense.w2");
  const Eigen::Index h_dim = config_.hidden;

  Eigen::VectorXd carry_h = Eigen::VectorXd::Zero(h_dim);
  double carry_y = 0.0;  // dLoss/d(decoder output j) arriving from step j+1
  Eigen::VectorXd dx(1);
  for (int j = steps - 1; j >= 0; --j) {
    const auto js = static_cast<std::size_t>(j);
    const double g = 2.0 * (outputs[js] - targets[js]) + carry_y;
    const Eigen::VectorXd& hidden = cache.dense_hidden[js];
    g_w2.noalias() += g * hidden.transpose();
    g_b2(0, 0) += g;
    const Eigen::VectorXd d_pre =
        (g * w2.transpose()).array() * (1.0 - hidden.array().square());
    g_w1.noalias() += d_pre * cache.dense_input[js].transpose();
    g_b1 += d_pre;
    const Eigen::VectorXd d_in =
        (w1.transpose() * d_pre).cwiseProduct(cache.dense_mask[js]);
    const Eigen::VectorXd dh = d_in.head(h_dim) + carry_h;
    dx.setZero();
    carry_h = gru_step_backward(decoder, cache.decoder[js], dh, g_decoder, dx)
                  .cwiseProduct(cache.decoder_mask[js]);
    // The previous output is both this step's GRU input and the residual base.
    carry_y = dx(0) + g;
  }
  for (int t = input_length - 1; t >= 0; --t) {
    const auto ts = static_cast<std::size_t>(t);
    dx.setZero();
    carry_h =
        gru_step_backward(encoder, cache.encoder[ts], carry_h, g_encoder, dx)
            .cwiseProduct(cache.encoder_mask[ts]);
  }
  return loss;
}

Forecast Seq2SeqModel::forecast(std::span<const double> ts,
                                std::span<const double> statics,
                                int target_step, bool) const {
  check_inputs(ts, statics, target_step);
  return s2s_forward(*this, ts, statics, target_step, false);
}

void Seq2SeqModel::write_params(std::ostream& out) const {
  nlohmann::ordered_json j;
  j["static_dim"] = static_dim_;
  j["target_step"] = target_step_;
  j["config"] = {{"hidden", config_.hidden},
                 {"dense", config_.dense},
                 {"input_dropout", config_.input_dropout},
                 {"recurrent_dropout", config_.recurrent_dropout},
                 {"init_scale", config_.init_scale}};
  auto& blocks = j["blocks"] = nlohmann::ordered_json::array();
  for (const Block& b : blocks_) {
    const Eigen::Map<const Eigen::MatrixXd> m(params_.data() + b.offset, b.rows,
                                              b.cols);
    std::vector<double> row_major;
    row_major.reserve(static_cast<std::size_t>(b.rows * b.cols));
    for (Eigen::Index r = 0; r < b.rows; ++r) {
      for (Eigen::Index c = 0; c < b.cols; ++c) row_major.push_back(m(r, c));
    }
    blocks.push_back(
        {{"name", b.name}, {"shape", {b.rows, b.cols}}, {"values", row_major}});
  }
  out << j.dump();
}

Forecast s2s_forward(const Seq2SeqModel& model, std::span<const double> ts,
                     std::span<const double> statics, int target_step,
                     bool train_mode, Rng* rng) {
  if (ts.empty()) throw InputError("seq2seq needs at least one observation");
  Forecast f;
  const int steps = target_step - static_cast<int>(ts.size());
  if (steps <= 0) return f;
  std::vector<double> inputs(ts.size());
  std::transform(ts.begin(), ts.end(), inputs.begin(),
                 [](double v) { return std::log1p(v); });
  Rng fallback(0);
  Rng* dropout_rng = train_mode ? (rng != nullptr ? rng : &fallback) : nullptr;
  f.values = model.rollout(inputs, statics, steps, dropout_rng);
  for (double& v : f.values) v = std::expm1(v);
  clamp_monotone(f.values, ts.back());
  return f;
}

double s2s_loss(std::span<const double> predicted,
                std::span<const double> actual) {
  if (predicted.size() != actual.size()) {
    throw InputError("loss needs equally long prediction and target lists");
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < predicted.size(); ++i) {
    const double e = actual[i] - predicted[i];
    sum += e * e;
  }
  return sum;
}

Seq2SeqTrainStats s2s_train(Seq2SeqModel& model,
                            std::span<const Seq2SeqExample> corpus,
                            const Seq2SeqTrainOptions& options) {
  const int n_steps = model.target_step();
  if (corpus.empty()) throw InputError("seq2seq training corpus is empty");
  if (options.batch_size < 1) throw ConfigError("batch size must be positive");
  if (options.min_input_length < 1 || options.min_input_length >= n_steps) {
    throw ConfigError("minimum input length must lie in [1, N)");
  }
  for (const Seq2SeqExample& ex : corpus) {
    if (static_cast<int>(ex.series.size()) != n_steps) {
      throw InputError("training series must have exactly N values");
    }
    if (ex.statics.size() != model.static_dim()) {
      throw InputError("training example static dimension mismatch");
    }
  }

  Eigen::VectorXd& params = model.parameters();
  const Eigen::Index p = params.size();
  Eigen::VectorXd m1 = Eigen::VectorXd::Zero(p), m2 = Eigen::VectorXd::Zero(p);
  Eigen::VectorXd batch_grad(p), grad(p);
  std::vector<std::size_t> order(corpus.size());
  std::iota(order.begin(), order.end(), std::size_t{0});

  Seq2SeqTrainStats stats;
  long epoch = 0;
  for (const TrainPhase& phase : options.schedule) {
    for (int e = 0; e < phase.epochs; ++e, ++epoch) {
      Rng shuffle_rng = substream(options.seed, static_cast<std::uint64_t>(epoch));
      std::shuffle(order.begin(), order.end(), shuffle_rng);
      double epoch_loss = 0.0;
      for (std::size_t start = 0; start < order.size();
           start += static_cast<std::size_t>(options.batch_size)) {
        const std::size_t end = std::min(
            order.size(), start + static_cast<std::size_t>(options.batch_size));
        batch_grad.setZero();
        double batch_loss = 0.0;
        for (std::size_t i = start; i < end; ++i) {
          const Seq2SeqExample& ex = corpus[order[i]];
          Rng rng = substream(options.seed ^ 0x5eed5eedULL,
                              static_cast<std::uint64_t>(epoch) * corpus.size() +
                                  order[i]);
          std::uniform_int_distribution<int> length(options.min_input_length,
                                                    n_steps - 1);
          const int input_length = length(rng);
          batch_loss += model.loss_and_gradient(
              ex.series, ex.statics, input_length, &grad,
              options.dropout ? &rng : nullptr);
          batch_grad += grad;
        }
        const auto count = static_cast<double>(end - start);
        batch_loss /= count;
        batch_grad /= count;
        if (!std::isfinite(batch_loss) || !batch_grad.allFinite()) {
          throw TrainingError("seq2seq training diverged at epoch " +
                              std::to_string(epoch + 1) + ", step " +
                              std::to_string(stats.steps + 1) +
                              " (batch loss " + std::to_string(batch_loss) +
                              ")");
        }
        ++stats.steps;
        m1 = options.beta1 * m1 + (1.0 - options.beta1) * batch_grad;
        m2 = options.beta2 * m2 +
             (1.0 - options.beta2) * batch_grad.cwiseProduct(batch_grad);
        const double c1 =
            1.0 - std::pow(options.beta1, static_cast<double>(stats.steps));
        const double c2 =
            1.0 - std::pow(options.beta2, static_cast<double>(stats.steps));
        params.array() -= phase.learning_rate * (m1.array() / c1) /
                          ((m2.array() / c2).sqrt() + options.epsilon);
        epoch_loss += batch_loss * count;
        if (options.on_batch) options.on_batch(stats.steps, batch_loss);
      }
      stats.epoch_loss.push_back(epoch_loss /
                                 static_cast<double>(corpus.size()));
    }
  }
  return stats;
}

}  // namespace newsrank
