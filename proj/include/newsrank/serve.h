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

#include <atomic>
#include <condition_variable>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <unordered_map>
#include <utility>
#include <vector>

#include "json.hpp"
#include "newsrank/model_io.h"
#include "newsrank/store.h"
#include "newsrank/timeseries.h"

namespace httplib {
class Server;
}

namespace newsrank {

struct RankedEntry {
  std::string id;
  std::string article_url;
  std::string title;
  std::string publisher;
  Timestamp published_at;
  std::int64_t observed_mentions = 0;
  // Unset for articles without enough observed history.
  std::optional<double> predicted_24h;
  std::optional<std::pair<double, double>> interval;
  int rank = 0;

  // Observed cumulative counts f_1..f_K and the forecast for K+1..N.
  MentionSeries observed;
  Forecast forecast;

  nlohmann::ordered_json to_json() const;
  nlohmann::ordered_json timeseries_json() const;
};

// Stable identifier derived from the merge key of the article.
std::string article_id(const Article& article);

// Ranks the articles published in [now - delta, now]. Reads only.
std::vector<RankedEntry> scoring_pass(const Store& store,
                                      const LoadedModel& model, Timestamp now,
                                      const Horizon& horizon = Horizon());

struct Snapshot {
  Timestamp generated_at;
  std::vector<RankedEntry> entries;
  std::unordered_map<std::string, std::size_t> by_id;
};

nlohmann::ordered_json ranknews_json(const Snapshot& snapshot);

struct ServiceConfig {
  std::filesystem::path store_dir;
  std::chrono::milliseconds cadence{600000};
  std::string host = "127.0.0.1";
  // 0 binds an ephemeral port.
  int port = 8080;
  // Consecutive failed passes after which /health reports degraded.
  int degraded_after = 3;
  Horizon horizon;
  // Wall clock used for "now"; defaults to the system clock.
  std::function<Timestamp()> clock;
};

struct Health {
  std::string status;  // starting, ok or degraded
  std::optional<Timestamp> last_pass_at;
  std::size_t articles_scored = 0;
  int consecutive_failures = 0;

  nlohmann::ordered_json to_json() const;
};

class ScoringService {
 public:
  ScoringService(ServiceConfig config, LoadedModel model);
  ~ScoringService();
  ScoringService(const ScoringService&) = delete;
  ScoringService& operator=(const ScoringService&) = delete;

  // One scoring pass. On failure the previous snapshot stays in place and
  // false is returned.
  bool run_pass();

  std::shared_ptr<const Snapshot> snapshot() const;
  Health health() const;

  // Binds the HTTP listener and starts the scheduler. Throws IoError when
  // the address cannot be bound.
  void start();
  void stop();
  // Bound port; valid after start().
  int port() const { return port_; }

 private:
  void register_routes();

  ServiceConfig config_;
  LoadedModel model_;
  std::unique_ptr<httplib::Server> server_;
  int port_ = 0;
  std::jthread scheduler_;
  std::thread listener_;

  mutable std::mutex mutex_;
  std::shared_ptr<const Snapshot> snapshot_;
  int consecutive_failures_ = 0;
  std::condition_variable_any wake_;
  std::mutex wake_mutex_;
};

}  // namespace newsrank
