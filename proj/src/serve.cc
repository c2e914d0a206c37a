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


#include "newsrank/serve.h"

#include <algorithm>
#include <cstdio>
#include <iostream>

#include "httplib.h"
#include "newsrank/error.h"
#include "newsrank/ingest.h"

namespace newsrank {

namespace {

using json = nlohmann::ordered_json;

std::uint64_t fnv1a(std::string_view data, std::uint64_t hash) {
  for (unsigned char c : data) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  return hash;
}

bool ranks_before(const RankedEntry& a, const RankedEntry& b) {
  if (a.predicted_24h.has_value() != b.predicted_24h.has_value()) {
    return a.predicted_24h.has_value();
  }
  if (a.predicted_24h && *a.predicted_24h != *b.predicted_24h) {
    return *a.predicted_24h > *b.predicted_24h;
  }
  if (a.observed_mentions != b.observed_mentions) {
    return a.observed_mentions > b.observed_mentions;
  }
  if (a.article_url != b.article_url) return a.article_url < b.article_url;
  return a.id < b.id;
}

Timestamp system_now() {
  return std::chrono::floor<Duration>(std::chrono::system_clock::now());
}

}  // namespace

std::string article_id(const Article& article) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  h = fnv1a(article.canonical_url, h);
  h = fnv1a("\x1f", h);
  h = fnv1a(normalize_title(article.title), h);
  h = fnv1a("\x1f", h);
  h = fnv1a(std::to_string(to_unix(article.published_at)), h);
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

json RankedEntry::to_json() const {
  json j;
  j["id"] = id;
  j["article_url"] = article_url;
  j["title"] = title;
  j["publisher"] = publisher;
  j["published_at"] = format_timestamp(published_at);
  j["observed_mentions"] = observed_mentions;
  j["predicted_24h"] = predicted_24h ? json(*predicted_24h) : json(nullptr);
  j["interval"] = interval ? json::array({interval->first, interval->second})
                           : json(nullptr);
  j["rank"] = rank;
  return j;
}

json RankedEntry::timeseries_json() const {
  json lo = json::array(), hi = json::array();
  for (const auto& [l, h] : forecast.intervals) {
    lo.push_back(l);
    hi.push_back(h);
  }
  json j;
  j["id"] = id;
  j["article_url"] = article_url;
  j["t0"] = format_timestamp(observed.t0);
  j["observed"] = observed.cumulative;
  j["predicted"] = forecast.values;
  j["interval_lo"] = std::move(lo);
  j["interval_hi"] = std::move(hi);
  return j;
}

std::vector<RankedEntry> scoring_pass(const Store& store,
                                      const LoadedModel& model, Timestamp now,
                                      const Horizon& horizon) {
  if (!model.model) throw ConfigError("no model loaded");
  const Forecaster& forecaster = *model.model;
  if (forecaster.static_dim() != model.features.static_dim()) {
    throw ConfigError("model expects " +
                      std::to_string(forecaster.static_dim()) +
                      " static features, feature space has " +
                      std::to_string(model.features.static_dim()));
  }
  const int n_steps = horizon.steps();
  std::vector<RankedEntry> entries;
  for (const Matching& m : store.matchings) {
    const Article& a = m.article;
    if (a.published_at > now || a.published_at < now - horizon.delta()) {
      continue;
    }
    RankedEntry e;
    e.id = article_id(a);
    e.article_url = a.url;
    e.title = a.title;
    e.publisher = a.publisher;
    e.published_at = a.published_at;
    e.observed_mentions = std::count_if(
        m.mentions.begin(), m.mentions.end(),
        [&](const Mention& x) { return x.published_at <= now; });

    const int k = std::min<int>(
        static_cast<int>((now - a.published_at) / horizon.step()), n_steps);
    e.observed = {a.published_at, horizon.step(), {}};
    if (k >= 1) {
      e.observed =
          build_series(m, a.published_at + k * horizon.step(), horizon.step());
    }
    if (k >= n_steps) {
      e.predicted_24h = static_cast<double>(
          target_mentions(m, horizon.delta(), a.published_at + horizon.delta()));
    } else if (k >= 1 && k >= forecaster.min_history()) {
      const FeatureVector fv = model.features.extract(a, e.observed.cumulative);
      const std::vector<double> ts(fv.ts.begin(), fv.ts.end());
      e.forecast = forecaster.forecast(ts, fv.static_features(), n_steps,
                                       forecaster.supports_interval());
      e.predicted_24h = e.forecast.final_value(ts.back());
      if (!e.forecast.intervals.empty()) {
        e.interval = e.forecast.intervals.back();
      }
    }
    entries.push_back(std::move(e));
  }
  std::sort(entries.begin(), entries.end(), ranks_before);
  for (std::size_t i = 0; i < entries.size(); ++i) {
    entries[i].rank = static_cast<int>(i + 1);
  }
  return entries;
}

json ranknews_json(const Snapshot& snapshot) {
  json out = json::array();
  for (const RankedEntry& e : snapshot.entries) out.push_back(e.to_json());
  return out;
}

json Health::to_json() const {
  json j;
  j["status"] = status;
  j["last_pass_at"] =
      last_pass_at ? json(format_timestamp(*last_pass_at)) : json(nullptr);
  j["articles_scored"] = articles_scored;
  j["consecutive_failures"] = consecutive_failures;
  return j;
}

ScoringService::ScoringService(ServiceConfig config, LoadedModel model)
    : config_(std::move(config)), model_(std::move(model)) {
  if (!config_.clock) config_.clock = system_now;
  if (config_.cadence <= std::chrono::milliseconds::zero()) {
    throw ConfigError("cadence must be positive");
  }
  if (!model_.model) throw ConfigError("no model loaded");
}

ScoringService::~ScoringService() { stop(); }

bool ScoringService::run_pass() {
  const Timestamp now = config_.clock();
  try {
    const Store store = load_store(config_.store_dir);
    auto snap = std::make_shared<Snapshot>();
    snap->generated_at = now;
    snap->entries = scoring_pass(store, model_, now, config_.horizon);
    for (std::size_t i = 0; i < snap->entries.size(); ++i) {
      snap->by_id.emplace(snap->entries[i].id, i);
    }
    std::lock_guard lock(mutex_);
    snapshot_ = std::move(snap);
    consecutive_failures_ = 0;
    return true;
  } catch (const std::exception& e) {
    std::clog << "scoring pass at " << format_timestamp(now)
              << " failed: " << e.what() << "\n";
    std::lock_guard lock(mutex_);
    ++consecutive_failures_;
    return false;
  }
}

std::shared_ptr<const Snapshot> ScoringService::snapshot() const {
  std::lock_guard lock(mutex_);
  return snapshot_;
}

Health ScoringService::health() const {
  std::lock_guard lock(mutex_);
  Health h;
  h.consecutive_failures = consecutive_failures_;
  if (consecutive_failures_ >= config_.degraded_after) {
    h.status = "degraded";
  } else {
    h.status = snapshot_ ? "ok" : "starting";
  }
  if (snapshot_) {
    h.last_pass_at = snapshot_->generated_at;
    h.articles_scored = snapshot_->entries.size();
  }
  return h;
}

void ScoringService::register_routes() {
  const auto send = [](httplib::Response& res, const json& body,
                       const Snapshot* snap) {
    if (snap) {
      res.set_header("X-Generated-At", format_timestamp(snap->generated_at));
    }
    res.set_content(body.dump(), "application/json");
  };
  const auto not_ready = [send](httplib::Response& res) {
    res.status = 503;
    send(res, {{"error", "no scoring pass has completed"}}, nullptr);
  };

  server_->Get("/ranknews", [this, send, not_ready](const httplib::Request&,
                                                    httplib::Response& res) {
    const auto snap = snapshot();
    if (!snap) return not_ready(res);
    send(res, ranknews_json(*snap), snap.get());
  });
  server_->Get(R"(/timeseries/([^/]+))", [this, send, not_ready](
                                             const httplib::Request& req,
                                             httplib::Response& res) {
    const auto snap = snapshot();
    if (!snap) return not_ready(res);
    const auto it = snap->by_id.find(req.matches[1].str());
    if (it == snap->by_id.end()) {
      res.status = 404;
      send(res, {{"error", "unknown article id"}}, snap.get());
      return;
    }
    json body = snap->entries[it->second].timeseries_json();
    body["generated_at"] = format_timestamp(snap->generated_at);
    send(res, body, snap.get());
  });
  server_->Get("/health", [this, send](const httplib::Request&,
                                       httplib::Response& res) {
    const Health h = health();
    if (h.status == "degraded") res.status = 503;
    send(res, h.to_json(), nullptr);
  });
}

void ScoringService::start() {
  if (server_) throw ConfigError("service already started");
  server_ = std::make_unique<httplib::Server>();
  // The library default adds SO_REUSEPORT, which would let a second instance
  // share the port silently.
  server_->set_socket_options([](socket_t sock) {
    int yes = 1;
    setsockopt(sock, SOL_SOCKET, SO_REUSEADDR, &yes, sizeof yes);
  });
  register_routes();
  if (config_.port == 0) {
    port_ = server_->bind_to_any_port(config_.host);
  } else {
    port_ = server_->bind_to_port(config_.host, config_.port) ? config_.port
                                                              : -1;
  }
  if (port_ <= 0) {
    server_.reset();
    throw IoError("cannot bind " + config_.host + ":" +
                  std::to_string(config_.port));
  }
  listener_ = std::thread([this] { server_->listen_after_bind(); });
  scheduler_ = std::jthread([this](std::stop_token stop) {
    auto next = std::chrono::steady_clock::now();
    while (!stop.stop_requested()) {
      run_pass();
      next += config_.cadence;
      std::unique_lock lock(wake_mutex_);
      wake_.wait_until(lock, stop, next, [] { return false; });
    }
  });
}

void ScoringService::stop() {
  if (scheduler_.joinable()) {
    scheduler_.request_stop();
    scheduler_.join();
  }
  if (server_) server_->stop();
  if (listener_.joinable()) listener_.join();
}

}  // namespace newsrank
