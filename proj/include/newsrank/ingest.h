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

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "newsrank/time.h"

namespace newsrank {

struct Article {
  std::string url;
  std::string canonical_url;
  std::string title;
  Timestamp published_at;
  std::string text;
  std::string publisher;

  friend bool operator==(const Article&, const Article&) = default;
};

// Builds an article and derives canonical_url and publisher from `url`.
Article make_article(std::string url, std::string title, Timestamp published_at,
                     std::string text);

struct Tweet {
  std::string id;
  std::string user;
  std::string text;
  Timestamp published_at;
  std::vector<std::string> links;

  friend bool operator==(const Tweet&, const Tweet&) = default;
};

struct Mention {
  std::string tweet_id;
  Timestamp published_at;

  friend bool operator==(const Mention&, const Mention&) = default;
};

struct Matching {
  Article article;
  std::vector<Mention> mentions;

  friend bool operator==(const Matching&, const Matching&) = default;
};

// One incremental matching line as stored upstream: an article URL and the
// ids of tweets linking to it that were found in one batch.
struct MatchingRecord {
  std::string article_url;
  std::vector<std::string> tweet_ids;

  friend bool operator==(const MatchingRecord&, const MatchingRecord&) =
      default;
};

inline constexpr Duration kClockSkewTolerance{300};

// Title identity used for merging: NFC normalized, surrounding whitespace
// trimmed.
std::string normalize_title(std::string_view title);

// Merges matchings that share canonical URL, normalized title and publication
// time; mention lists are unioned by tweet id. Output is ordered by
// (published_at, canonical_url, title) and independent of input order.
std::vector<Matching> merge_matchings(std::vector<Matching> batch);

struct TimeWindow {
  Timestamp start;
  Timestamp end;
};

// Keeps articles with start <= published_at <= end.
std::vector<Article> filter_publication_window(std::vector<Article> articles,
                                               TimeWindow window);
std::vector<Matching> filter_publication_window(std::vector<Matching> matchings,
                                                TimeWindow window);

// Moves mentions up to `tolerance` before publication onto the publication
// time and drops earlier ones. Returns {clamped, dropped}.
std::pair<std::size_t, std::size_t> clamp_clock_skew(Matching& matching,
                                                     Duration tolerance);

template <typename Record>
struct LoadResult {
  std::vector<Record> records;
  std::size_t skipped = 0;
};

// Line-delimited JSON loading. Blank lines are ignored, malformed lines are
// skipped and counted; more than half malformed raises CorpusError.
// Instantiated for Article, Tweet, MatchingRecord and Matching (store lines).
template <typename Record>
LoadResult<Record> load_records(std::istream& in);
template <typename Record>
LoadResult<Record> load_records(const std::filesystem::path& path);

template <typename Record>
void write_records(std::ostream& out, const std::vector<Record>& records);
template <typename Record>
void write_records(const std::filesystem::path& path,
                   const std::vector<Record>& records);

struct IngestOptions {
  TimeWindow window;
  Duration clock_skew = kClockSkewTolerance;
};

struct IngestReport {
  std::size_t articles_read = 0;
  std::size_t tweets_read = 0;
  std::size_t matching_records_read = 0;
  std::size_t duplicate_articles = 0;  // same raw URL seen again
  std::size_t duplicate_tweets = 0;
  std::size_t unknown_article_refs = 0;
  std::size_t unknown_tweet_refs = 0;
  std::size_t outside_window = 0;
  std::size_t merged_away = 0;
  std::size_t mentions_clamped = 0;
  std::size_t mentions_dropped = 0;
  std::size_t matchings_out = 0;
};

struct IngestResult {
  std::vector<Matching> matchings;
  IngestReport report;
};

// Joins the three record streams into complete matchings, then filters,
// merges and applies the clock-skew rule. Articles without any matching
// record are kept with an empty mention list.
IngestResult ingest(const std::vector<Article>& articles,
                    const std::vector<Tweet>& tweets,
                    const std::vector<MatchingRecord>& records,
                    const IngestOptions& options);

}  // namespace newsrank
