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
#include <vector>

#include "newsrank/ingest.h"
#include "newsrank/time.h"

namespace newsrank {

// A directory holding merged matchings (matchings.jsonl) and a manifest
// recording how far the data has been observed.
struct Store {
  std::vector<Matching> matchings;
  // Latest instant for which mention data is complete.
  Timestamp observed_until;
};

void write_store(const std::filesystem::path& dir, const Store& store,
                 const IngestReport* report = nullptr);

// Reads a store without modifying it.
Store load_store(const std::filesystem::path& dir);

// Latest mention timestamp, or the latest publication time when there are no
// mentions at all.
Timestamp latest_activity(const std::vector<Matching>& matchings);

}  // namespace newsrank
