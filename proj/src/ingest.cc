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

#include "newsrank/ingest.h"

#include <algorithm>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <tuple>
#include <unordered_map>
#include <unordered_set>

#include <unicode/normalizer2.h>
#include <unicode/unistr.h>

#include "json.hpp"
#include "newsrank/error.h"
#include "newsrank/url.h"

namespace newsrank {

using nlohmann::json;

Article make_article(std::string url, std::string title, Timestamp published_at,
                     std::string text) {
  Article a;
  const UrlParts parts = parse_url(url);
  a.canonical_url = canonicalize_url(url);
  a.publisher = parts.host;
  a.url = std::move(url);
  a.title = std::move(title);
  a.published_at = published_at;
  a.text = std::move(text);
  return a;
}

std::string normalize_title(std::string_view title) {
  UErrorCode status = U_ZERO_ERROR;
  const icu::Normalizer2* nfc = icu::Normalizer2::getNFCInstance(status);
  std::string out;
  if (U_SUCCESS(status)) {
    const icu::UnicodeString source = icu::UnicodeString::fromUTF8(
        icu::StringPiece(title.data(), static_cast<int32_t>(title.size())));
    const icu::UnicodeString normalized = nfc->normalize(source, status);
    if (U_SUCCESS(status)) normalized.toUTF8String(out);
  }
  if (U_FAILURE(status)) out = std::string(title);
  const auto is_space = [](unsigned char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
           c == '\v';
  };
  const auto first = std::find_if_not(out.begin(), out.end(), is_space);
  const auto last = std::find_if_not(out.rbegin(), out.rend(), is_space).base();
  return first < last ? std::string(first, last) : std::string();
}

namespace {

using MergeKey = std::tuple<std::string, std::string, Timestamp>;

MergeKey merge_key(const Article& a) {
  return {a.canonical_url, normalize_title(a.title), a.published_at};
}

// Representative article of a merged group: smallest (url, text, title) so
// the choice does not depend on input order.
bool representative_less(const Article& a, const Article& b) {
  return std::tie(a.url, a.text, a.title) < std::tie(b.url, b.text, b.title);
}

void dedup_mentions(std::vector<Mention>& mentions) {
  std::sort(mentions.begin(), mentions.end(),
            [](const Mention& a, const Mention& b) {
              return std::tie(a.tweet_id, a.published_at) <
                     std::tie(b.tweet_id, b.published_at);
            });
  mentions.erase(std::unique(mentions.begin(), mentions.end(),
                             [](const Mention& a, const Mention& b) {
                               return a.tweet_id == b.tweet_id;
                             }),
                 mentions.end());
  std::sort(mentions.begin(), mentions.end(),
            [](const Mention& a, const Mention& b) {
              return std::tie(a.published_at, a.tweet_id) <
                     std::tie(b.published_at, b.tweet_id);
            });
}

}  // namespace

std::vector<Matching> merge_matchings(std::vector<Matching> batch) {
  std::map<MergeKey, Matching> groups;
  for (Matching& m : batch) {
    auto key = merge_key(m.article);
    auto it = groups.find(key);
    if (it == groups.end()) {
      groups.emplace(std::move(key), std::move(m));
      continue;
    }
    Matching& into = it->second;
    if (representative_less(m.article, into.article)) {
      into.article = std::move(m.article);
    }
    into.mentions.insert(into.mentions.end(),
                         std::make_move_iterator(m.mentions.begin()),
                         std::make_move_iterator(m.mentions.end()));
  }
  std::vector<Matching> out;
  out.reserve(groups.size());
  for (auto& [key, m] : groups) {
    dedup_mentions(m.mentions);
    out.push_back(std::move(m));
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const Matching& a, const Matching& b) {
                     return a.article.published_at < b.article.published_at;
                   });
  return out;
}

std::vector<Article> filter_publication_window(std::vector<Article> articles,
                                               TimeWindow window) {
  std::erase_if(articles, [&](const Article& a) {
    return a.published_at < window.start || a.published_at > window.end;
  });
  return articles;
}

std::vector<Matching> filter_publication_window(std::vector<Matching> matchings,
                                                TimeWindow window) {
  std::erase_if(matchings, [&](const Matching& m) {
    return m.article.published_at < window.start ||
           m.article.published_at > window.end;
  });
  return matchings;
}

std::pair<std::size_t, std::size_t> clamp_clock_skew(Matching& matching,
                                                     Duration tolerance) {
  const Timestamp t0 = matching.article.published_at;
  std::size_t clamped = 0;
  const std::size_t before = matching.mentions.size();
  std::erase_if(matching.mentions, [&](const Mention& m) {
    return m.published_at < t0 - tolerance;
  });
  for (Mention& m : matching.mentions) {
    if (m.published_at < t0) {
      m.published_at = t0;
      ++clamped;
    }
  }
  if (clamped > 0) {
    std::stable_sort(matching.mentions.begin(), matching.mentions.end(),
                     [](const Mention& a, const Mention& b) {
                       return a.published_at < b.published_at;
                     });
  }
  return {clamped, before - matching.mentions.size()};
}

// JSON mapping for the line formats.

namespace {

std::string required_string(const json& j, const char* key) {
  const auto it = j.find(key);
  if (it == j.end() || !it->is_string()) {
    throw ParseError(std::string("missing string field \"") + key + "\"");
  }
  return it->get<std::string>();
}

std::string optional_string(const json& j, const char* key) {
  const auto it = j.find(key);
  return it != j.end() && it->is_string() ? it->get<std::string>()
                                          : std::string();
}

std::vector<std::string> string_list(const json& j, const char* key) {
  const auto it = j.find(key);
  if (it == j.end()) return {};
  if (!it->is_array()) {
    throw ParseError(std::string("field \"") + key + "\" is not an array");
  }
  std::vector<std::string> out;
  for (const json& v : *it) {
    if (!v.is_string()) throw ParseError("non-string list element");
    out.push_back(v.get<std::string>());
  }
  return out;
}

template <typename Record>
Record from_json(const json& j);

template <>
Article from_json<Article>(const json& j) {
  return make_article(required_string(j, "url"), required_string(j, "title"),
                      parse_timestamp(required_string(j, "published_at")),
                      optional_string(j, "text"));
}

template <>
Tweet from_json<Tweet>(const json& j) {
  Tweet t;
  t.id = required_string(j, "id");
  t.user = optional_string(j, "user");
  t.text = optional_string(j, "text");
  t.published_at = parse_timestamp(required_string(j, "published_at"));
  t.links = string_list(j, "links");
  for (const std::string& link : t.links) parse_url(link);
  return t;
}

template <>
MatchingRecord from_json<MatchingRecord>(const json& j) {
  MatchingRecord r;
  r.article_url = required_string(j, "article_url");
  r.tweet_ids = string_list(j, "tweet_ids");
  return r;
}

template <>
Matching from_json<Matching>(const json& j) {
  Matching m;
  m.article = make_article(required_string(j, "url"),
                           required_string(j, "title"),
                           parse_timestamp(required_string(j, "published_at")),
                           optional_string(j, "text"));
  const auto it = j.find("mentions");
  if (it == j.end() || !it->is_array()) {
    throw ParseError("missing array field \"mentions\"");
  }
  for (const json& v : *it) {
    m.mentions.push_back(
        {required_string(v, "tweet_id"),
         parse_timestamp(required_string(v, "published_at"))});
  }
  return m;
}

json to_json(const Article& a) {
  return json{{"url", a.url},
              {"title", a.title},
              {"published_at", format_timestamp(a.published_at)},
              {"text", a.text}};
}

json to_json(const Tweet& t) {
  return json{{"id", t.id},
              {"user", t.user},
              {"text", t.text},
              {"published_at", format_timestamp(t.published_at)},
              {"links", t.links}};
}

json to_json(const MatchingRecord& r) {
  return json{{"article_url", r.article_url}, {"tweet_ids", r.tweet_ids}};
}

json to_json(const Matching& m) {
  json mentions = json::array();
  for (const Mention& x : m.mentions) {
    mentions.push_back(
        {{"tweet_id", x.tweet_id},
         {"published_at", format_timestamp(x.published_at)}});
  }
  return json{{"url", m.article.url},
              {"canonical_url", m.article.canonical_url},
              {"title", m.article.title},
              {"published_at", format_timestamp(m.article.published_at)},
              {"text", m.article.text},
              {"publisher", m.article.publisher},
              {"mentions", std::move(mentions)}};
}

}  // namespace

template <typename Record>
LoadResult<Record> load_records(std::istream& in) {
  LoadResult<Record> result;
  std::size_t non_blank = 0;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    ++non_blank;
    try {
      result.records.push_back(from_json<Record>(json::parse(line)));
    } catch (const json::exception&) {
      ++result.skipped;
    } catch (const ParseError&) {
      ++result.skipped;
    }
  }
  if (in.bad()) throw IoError("read error while loading records");
  if (non_blank > 0 && 2 * result.skipped > non_blank) {
    throw CorpusError("corpus rejected: " + std::to_string(result.skipped) +
                      " of " + std::to_string(non_blank) +
                      " lines are malformed");
  }
  return result;
}

template <typename Record>
LoadResult<Record> load_records(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  return load_records<Record>(in);
}

template <typename Record>
void write_records(std::ostream& out, const std::vector<Record>& records) {
  for (const Record& r : records) out << to_json(r).dump() << '\n';
}

template <typename Record>
void write_records(const std::filesystem::path& path,
                   const std::vector<Record>& records) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path.string());
  write_records(out, records);
  if (!out) throw IoError("write failed for " + path.string());
}

#define NEWSRANK_INSTANTIATE_RECORD(T)                                      \
  template LoadResult<T> load_records<T>(std::istream&);                   \
  template LoadResult<T> load_records<T>(const std::filesystem::path&);    \
  template void write_records<T>(std::ostream&, const std::vector<T>&);    \
  template void write_records<T>(const std::filesystem::path&,             \
                                 const std::vector<T>&);

NEWSRANK_INSTANTIATE_RECORD(Article)
NEWSRANK_INSTANTIATE_RECORD(Tweet)
NEWSRANK_INSTANTIATE_RECORD(MatchingRecord)
NEWSRANK_INSTANTIATE_RECORD(Matching)

#undef NEWSRANK_INSTANTIATE_RECORD

IngestResult ingest(const std::vector<Article>& articles,
                    const std::vector<Tweet>& tweets,
                    const std::vector<MatchingRecord>& records,
                    const IngestOptions& options) {
  IngestResult result;
  IngestReport& report = result.report;
  report.articles_read = articles.size();
  report.tweets_read = tweets.size();
  report.matching_records_read = records.size();

  // Earliest timestamp wins for a repeated tweet id.
  std::unordered_map<std::string, Timestamp> tweet_time;
  tweet_time.reserve(tweets.size());
  for (const Tweet& t : tweets) {
    auto [it, inserted] = tweet_time.emplace(t.id, t.published_at);
    if (!inserted) {
      ++report.duplicate_tweets;
      it->second = std::min(it->second, t.published_at);
    }
  }

  std::vector<Matching> joined;
  std::unordered_map<std::string, std::size_t> by_url;
  for (const Article& a : articles) {
    if (!by_url.emplace(a.url, joined.size()).second) {
      ++report.duplicate_articles;
      continue;
    }
    joined.push_back({a, {}});
  }

  for (const MatchingRecord& r : records) {
    const auto it = by_url.find(r.article_url);
    if (it == by_url.end()) {
      ++report.unknown_article_refs;
      continue;
    }
    auto& mentions = joined[it->second].mentions;
    for (const std::string& id : r.tweet_ids) {
      const auto t = tweet_time.find(id);
      if (t == tweet_time.end()) {
        ++report.unknown_tweet_refs;
        continue;
      }
      mentions.push_back({id, t->second});
    }
  }

  const std::size_t before_filter = joined.size();
  joined = filter_publication_window(std::move(joined), options.window);
  report.outside_window = before_filter - joined.size();

  const std::size_t before_merge = joined.size();
  result.matchings = merge_matchings(std::move(joined));
  report.merged_away = before_merge - result.matchings.size();

  for (Matching& m : result.matchings) {
    const auto [clamped, dropped] = clamp_clock_skew(m, options.clock_skew);
    report.mentions_clamped += clamped;
    report.mentions_dropped += dropped;
  }
  report.matchings_out = result.matchings.size();
  return result;
}

}  // namespace newsrank
