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

#include "newsrank/store.h"

#include <fstream>

#include "json.hpp"
#include "newsrank/error.h"

namespace newsrank {

using nlohmann::json;

namespace {
constexpr int kStoreSchemaVersion = 1;
}

void write_store(const std::filesystem::path& dir, const Store& store,
                 const IngestReport* report) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create " + dir.string() + ": " + ec.message());
  write_records(dir / "matchings.jsonl", store.matchings);

  json manifest{{"schema_version", kStoreSchemaVersion},
                {"observed_until", format_timestamp(store.observed_until)},
                {"matchings", store.matchings.size()}};
  if (report != nullptr) {
    manifest["ingest"] = {
        {"articles_read", report->articles_read},
        {"tweets_read", report->tweets_read},
        {"matching_records_read", report->matching_records_read},
        {"duplicate_articles", report->duplicate_articles},
        {"duplicate_tweets", report->duplicate_tweets},
        {"unknown_article_refs", report->unknown_article_refs},
        {"unknown_tweet_refs", report->unknown_tweet_refs},
        {"outside_window", report->outside_window},
        {"merged_away", report->merged_away},
        {"mentions_clamped", report->mentions_clamped},
        {"mentions_dropped", report->mentions_dropped}};
  }
  std::ofstream out(dir / "manifest.json");
  if (!out) throw IoError("cannot write manifest in " + dir.string());
  out << manifest.dump(2) << '\n';
}

Store load_store(const std::filesystem::path& dir) {
  std::ifstream in(dir / "manifest.json");
  if (!in) throw IoError("cannot open " + (dir / "manifest.json").string());
  json manifest;
  try {
    manifest = json::parse(in);
  } catch (const json::exception& e) {
    throw IoError("unreadable manifest in " + dir.string() + ": " + e.what());
  }
  if (manifest.value("schema_version", 0) != kStoreSchemaVersion) {
    throw IoError("unsupported store schema in " + dir.string());
  }
  Store store;
  store.observed_until =
      parse_timestamp(manifest.at("observed_until").get<std::string>());
  store.matchings = load_records<Matching>(dir / "matchings.jsonl").records;
  return store;
}

Timestamp latest_activity(const std::vector<Matching>& matchings) {
  Timestamp latest{};
  bool any = false;
  for (const Matching& m : matchings) {
    Timestamp t = m.article.published_at;
    for (const Mention& x : m.mentions) t = std::max(t, x.published_at);
    if (!any || t > latest) latest = t;
    any = true;
  }
  return latest;
}

}  // namespace newsrank
