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

#include <filesystem>
#include <iosfwd>
#include <memory>

#include "newsrank/features.h"
#include "newsrank/models/forecast.h"

namespace newsrank {

inline constexpr int kModelSchemaVersion = 1;

struct LoadedModel {
  std::unique_ptr<Forecaster> model;
  FeatureSpace features;
};

// Self-describing JSON document:
// {"schema_version","model_kind","order","transform","features","params"}.
void write_model(std::ostream& out, const Forecaster& model,
                 const FeatureSpace& features);
void save_model(const std::filesystem::path& path, const Forecaster& model,
                const FeatureSpace& features);

// Throws ConfigError for unknown kinds, schema versions or inconsistent
// parameters and IoError when the file cannot be read.
LoadedModel read_model(std::istream& in);
LoadedModel load_model(const std::filesystem::path& path);

}  // namespace newsrank
