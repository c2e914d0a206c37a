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

#include "newsrank/model_io.h"

#include <fstream>
#include <ostream>

#include "json.hpp"
#include "newsrank/error.h"
#include "newsrank/models/baseline.h"
#include "newsrank/models/linear_ar.h"
#include "newsrank/models/random_forest.h"
#include "newsrank/models/seq2seq.h"

namespace newsrank {

using json = nlohmann::ordered_json;

void write_model(std::ostream& out, const Forecaster& model,
                 const FeatureSpace& features) {
  if (features.static_dim() != model.static_dim()) {
    throw ConfigError("feature space does not match the model's inputs");
  }
  out << "{\"schema_version\":" << kModelSchemaVersion
      << ",\"model_kind\":" << json(model.kind()).dump()
      << ",\"order\":" << model.order()
      << ",\"transform\":" << json(model.transform()).dump()
      << ",\"features\":" << features.to_json().dump() << ",\"params\":";
  model.write_params(out);
  out << "}\n";
}

void save_model(const std::filesystem::path& path, const Forecaster& model,
                const FeatureSpace& features) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write model file " + path.string());
  write_model(out, model, features);
  if (!out) throw IoError("write failed for " + path.string());
}

namespace {

std::unique_ptr<Forecaster> build_model(const std::string& kind, int order,
                                        const json& params,
                                        std::vector<RegressionTree> trees) {
  const auto static_dim = params.at("static_dim").get<std::size_t>();
  if (kind == "baseline") {
    return std::make_unique<BaselineModel>(params.at("window").get<int>(),
                                           static_dim);
  }
  if (kind == "linear_ar") {
    return std::make_unique<LinearArModel>(
        order, static_dim,
        params.at("coefficients").get<std::vector<double>>());
  }
  if (kind == "rf") {
    ForestOptions options;
    options.n_estimators = static_cast<int>(trees.size());
    options.max_features = params.value("max_features", std::size_t{0});
    options.bootstrap = params.value("bootstrap", true);
    options.seed = params.value("seed", std::uint64_t{0});
    auto model = std::make_unique<RandomForestArModel>(
        order, static_dim,
        RandomForest(ar_input_dim(order, static_dim), std::move(trees)),
        options);
    model->coverage = params.value("coverage", 0.95);
    return model;
  }
  if (kind == "s2s") {
    Seq2SeqConfig config;
    const json& c = params.at("config");
    config.hidden = c.at("hidden").get<int>();
    config.dense = c.at("dense").get<int>();
    config.input_dropout = c.at("input_dropout").get<double>();
    config.recurrent_dropout = c.at("recurrent_dropout").get<double>();
    config.init_scale = c.value("init_scale", 0.08);
    const int target_step = params.at("target_step").get<int>();
    Seq2SeqModel model(config, static_dim, target_step, std::uint64_t{0});
    for (const json& b : params.at("blocks")) {
      auto m = model.block(b.at("name").get<std::string>());
      const auto shape = b.at("shape").get<std::vector<Eigen::Index>>();
      const auto values = b.at("values").get<std::vector<double>>();
      if (shape.size() != 2 || shape[0] != m.rows() || shape[1] != m.cols() ||
          static_cast<Eigen::Index>(values.size()) != m.size()) {
        throw ConfigError("seq2seq block shape mismatch");
      }
      std::size_t i = 0;
      for (Eigen::Index r = 0; r < m.rows(); ++r) {
        for (Eigen::Index col = 0; col < m.cols(); ++col) m(r, col) = values[i++];
      }
    }
    return std::make_unique<Seq2SeqModel>(std::move(model));
  }
  throw ConfigError("unknown model kind \"" + kind + "\"");
}

}  // namespace

LoadedModel read_model(std::istream& in) {
  std::vector<RegressionTree> trees;
  // Tree objects are converted as soon as they are complete and dropped from
  // the document, which keeps large forests out of the JSON DOM.
  const json::parser_callback_t on_event =
      [&trees](int, json::parse_event_t event, json& parsed) {
        if (event == json::parse_event_t::object_end && parsed.is_object() &&
            parsed.size() == 1 && parsed.contains("nodes")) {
          trees.push_back(RegressionTree::from_json(parsed));
          return false;
        }
        return true;
      };
  json doc;
  try {
    doc = json::parse(in, on_event);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("invalid model file: ") + e.what());
  }
  try {
    if (doc.at("schema_version").get<int>() != kModelSchemaVersion) {
      throw ConfigError("unsupported model schema version");
    }
    LoadedModel loaded;
    loaded.features = FeatureSpace::from_json(doc.at("features"));
    loaded.model = build_model(doc.at("model_kind").get<std::string>(),
                               doc.at("order").get<int>(), doc.at("params"),
                               std::move(trees));
    if (loaded.model->static_dim() != loaded.features.static_dim()) {
      throw ConfigError("model and feature space dimensions disagree");
    }
    return loaded;
  } catch (const json::exception& e) {
    throw ConfigError(std::string("incomplete model file: ") + e.what());
  }
}

LoadedModel load_model(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open model file " + path.string());
  return read_model(in);
}

}  // namespace newsrank
