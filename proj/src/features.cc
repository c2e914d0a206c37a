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

#include "newsrank/features.h"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <set>

#include "newsrank/error.h"

namespace newsrank {

using nlohmann::ordered_json;

std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> tokens;
  std::string current;
  for (const char ch : text) {
    const auto c = static_cast<unsigned char>(ch);
    if (c >= 0x80 || std::isalnum(c)) {
      current.push_back(static_cast<char>(std::tolower(c)));
    } else if (!current.empty()) {
      tokens.push_back(std::move(current));
      current.clear();
    }
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  return tokens;
}

KeywordMap::KeywordMap(std::vector<Concept> concepts)
    : concepts_(std::move(concepts)) {
  std::set<std::string> seen;
  for (const Concept& c : concepts_) {
    if (!seen.insert(c.name).second) {
      throw ConfigError("duplicate keyword concept \"" + c.name + "\"");
    }
    std::vector<std::vector<std::string>> per_keyword;
    for (const std::string& k : c.keywords) {
      auto toks = tokenize(k);
      if (!toks.empty()) per_keyword.push_back(std::move(toks));
    }
    if (per_keyword.empty()) {
      throw ConfigError("concept \"" + c.name + "\" has no usable keywords");
    }
    tokens_.push_back(std::move(per_keyword));
  }
}

ordered_json KeywordMap::to_json() const {
  ordered_json j = ordered_json::object();
  for (const Concept& c : concepts_) j[c.name] = c.keywords;
  return j;
}

KeywordMap KeywordMap::from_json(const ordered_json& j) {
  if (!j.is_object()) throw ConfigError("keyword map must be a JSON object");
  std::vector<Concept> concepts;
  for (const auto& [name, list] : j.items()) {
    if (!list.is_array()) {
      throw ConfigError("keywords of \"" + name + "\" must be an array");
    }
    Concept c{name, {}};
    for (const auto& k : list) {
      if (!k.is_string()) throw ConfigError("keywords must be strings");
      c.keywords.push_back(k.get<std::string>());
    }
    concepts.push_back(std::move(c));
  }
  return KeywordMap(std::move(concepts));
}

KeywordMap default_keyword_map() {
  return KeywordMap({
      {"bitcoin", {"bitcoin", "btc"}},
      {"ethereum", {"ethereum", "eth", "ether"}},
      {"ripple", {"ripple", "xrp"}},
      {"bitcoin_cash", {"bitcoin cash", "bch"}},
      {"eos", {"eos"}},
      {"stellar", {"stellar", "xlm"}},
      {"litecoin", {"litecoin", "ltc"}},
      {"tether", {"tether", "usdt"}},
      {"cardano", {"cardano", "ada"}},
      {"monero", {"monero", "xmr"}},
      {"tron", {"tron", "trx"}},
      {"iota", {"iota", "miota"}},
      {"dash", {"dash"}},
      {"binance_coin", {"binance coin", "bnb"}},
      {"nem", {"nem", "xem"}},
      {"ethereum_classic", {"ethereum classic", "etc"}},
      {"neo", {"neo"}},
      {"zcash", {"zcash", "zec"}},
      {"dogecoin", {"dogecoin", "doge"}},
      {"tezos", {"tezos", "xtz"}},
  });
}

PublisherList::PublisherList(std::vector<std::string> hosts)
    : hosts_(std::move(hosts)) {
  std::set<std::string> seen;
  for (const std::string& h : hosts_) {
    if (!is_sentinel(h) && !seen.insert(h).second) {
      throw ConfigError("duplicate publisher \"" + h + "\"");
    }
  }
}

BitVector content_features(const Article& article, const KeywordMap& map) {
  const std::vector<std::string> title = tokenize(article.title);
  BitVector bits(map.size(), 0);
  for (std::size_t c = 0; c < map.size(); ++c) {
    for (const auto& keyword : map.tokens_[c]) {
      if (std::search(title.begin(), title.end(), keyword.begin(),
                      keyword.end()) != title.end()) {
        bits[c] = 1;
        break;
      }
    }
  }
  return bits;
}

PublisherList top_publishers(const std::vector<Matching>& training,
                             std::size_t n) {
  if (training.empty()) {
    throw InputError("top publishers need a non-empty training set");
  }
  std::map<std::string, std::int64_t> counts;
  for (const Matching& m : training) {
    counts[m.article.publisher] += static_cast<std::int64_t>(m.mentions.size());
  }
  std::vector<std::pair<std::string, std::int64_t>> ranked(counts.begin(),
                                                           counts.end());
  // counts is host-ordered, so a stable sort keeps the lexicographic tie rule.
  std::stable_sort(ranked.begin(), ranked.end(),
                   [](const auto& a, const auto& b) {
                     return a.second > b.second;
                   });
  std::vector<std::string> hosts;
  for (std::size_t i = 0; i < n; ++i) {
    hosts.push_back(i < ranked.size() ? ranked[i].first : std::string());
  }
  return PublisherList(std::move(hosts));
}

BitVector context_features(const Article& article,
                           const PublisherList& publishers) {
  BitVector bits(publishers.size(), 0);
  for (std::size_t i = 0; i < publishers.size(); ++i) {
    const std::string& host = publishers.hosts()[i];
    if (!PublisherList::is_sentinel(host) && host == article.publisher) {
      bits[i] = 1;
      break;
    }
  }
  return bits;
}

std::vector<std::int64_t> time_series_features(const MentionSeries& series,
                                               Timestamp t1) {
  if (t1 < series.t0 + series.step) {
    throw DomainError("no complete time step before the prediction start");
  }
  const auto k = static_cast<std::size_t>((t1 - series.t0) / series.step);
  if (k > series.cumulative.size()) {
    throw DomainError("series is shorter than the requested prediction start");
  }
  return {series.cumulative.begin(),
          series.cumulative.begin() + static_cast<std::ptrdiff_t>(k)};
}

std::vector<double> FeatureVector::static_features() const {
  std::vector<double> out;
  out.reserve(content.size() + context.size());
  for (auto b : content) out.push_back(b);
  for (auto b : context) out.push_back(b);
  return out;
}

FeatureVector FeatureSpace::extract(const Article& article,
                                    std::vector<std::int64_t> ts) const {
  FeatureVector fv;
  fv.K = static_cast<int>(ts.size());
  fv.ts = std::move(ts);
  fv.content = content_features(article, keywords);
  fv.context = context_features(article, publishers);
  return fv;
}

ordered_json FeatureSpace::to_json() const {
  return {{"keywords", keywords.to_json()},
          {"publishers", publishers.hosts()}};
}

FeatureSpace FeatureSpace::from_json(const ordered_json& j) {
  FeatureSpace space;
  space.keywords = KeywordMap::from_json(j.at("keywords"));
  space.publishers =
      PublisherList(j.at("publishers").get<std::vector<std::string>>());
  return space;
}

FeatureConfig FeatureConfig::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open feature config " + path.string());
  ordered_json j;
  try {
    j = ordered_json::parse(in);
  } catch (const ordered_json::exception& e) {
    throw ConfigError("invalid feature config " + path.string() + ": " +
                      e.what());
  }
  FeatureConfig config;
  if (j.contains("keywords")) {
    config.keywords = KeywordMap::from_json(j["keywords"]);
  }
  config.n_top_publishers =
      j.value("n_top_publishers", kDefaultTopPublishers);
  return config;
}

}  // namespace newsrank
