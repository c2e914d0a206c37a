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

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"
#include "newsrank/ingest.h"
#include "newsrank/timeseries.h"

namespace newsrank {

using BitVector = std::vector<std::uint8_t>;

// Concept name -> keywords, in configuration order. Keywords may span
// several tokens ("bitcoin cash").
class KeywordMap {
 public:
  struct Concept {
    std::string name;
    std::vector<std::string> keywords;
  };

  KeywordMap() = default;
  // Throws ConfigError on duplicate concepts or empty keyword lists.
  explicit KeywordMap(std::vector<Concept> concepts);

  const std::vector<Concept>& concepts() const { return concepts_; }
  std::size_t size() const { return concepts_.size(); }

  nlohmann::ordered_json to_json() const;
  static KeywordMap from_json(const nlohmann::ordered_json& j);

 private:
  std::vector<Concept> concepts_;
  // Tokenized keywords, parallel to concepts_.
  std::vector<std::vector<std::vector<std::string>>> tokens_;

  friend BitVector content_features(const Article&, const KeywordMap&);
};

// Top-20 cryptocurrencies by market capitalization with common tickers.
KeywordMap default_keyword_map();

// Hosts of the publishers with the most training mentions. Entries past the
// number of distinct publishers are empty sentinels that match nothing.
class PublisherList {
 public:
  PublisherList() = default;
  // Throws ConfigError when non-sentinel entries repeat.
  explicit PublisherList(std::vector<std::string> hosts);

  const std::vector<std::string>& hosts() const { return hosts_; }
  std::size_t size() const { return hosts_.size(); }
  static bool is_sentinel(std::string_view host) { return host.empty(); }

 private:
  std::vector<std::string> hosts_;
};

inline constexpr std::size_t kDefaultTopPublishers = 10;

// Lowercased tokens of `text`; ASCII punctuation and whitespace separate
// tokens, bytes >= 0x80 are kept inside tokens.
std::vector<std::string> tokenize(std::string_view text);

// Content bits: bit c is set iff a keyword of concept c occurs as a whole
// token sequence in the title.
BitVector content_features(const Article& article, const KeywordMap& map);

// Publishers ranked by summed mention count, ties by host; padded with
// sentinels to `n` entries.
PublisherList top_publishers(const std::vector<Matching>& training,
                             std::size_t n = kDefaultTopPublishers);

// One-hot (or all-zero) publisher indicator.
BitVector context_features(const Article& article,
                           const PublisherList& publishers);

// Values f_k for every complete step up to t1. Throws DomainError when no
// step is complete or the series does not extend that far.
std::vector<std::int64_t> time_series_features(const MentionSeries& series,
                                               Timestamp t1);

struct FeatureVector {
  std::vector<std::int64_t> ts;
  int K = 0;
  BitVector content;
  BitVector context;

  // content followed by context, as reals.
  std::vector<double> static_features() const;
};

// Keyword map plus publisher list: everything needed to turn an article
// into static model inputs. Stored alongside every trained model.
struct FeatureSpace {
  KeywordMap keywords;
  PublisherList publishers;

  std::size_t static_dim() const {
    return keywords.size() + publishers.size();
  }
  FeatureVector extract(const Article& article,
                        std::vector<std::int64_t> ts) const;

  nlohmann::ordered_json to_json() const;
  static FeatureSpace from_json(const nlohmann::ordered_json& j);
};

struct FeatureConfig {
  KeywordMap keywords = default_keyword_map();
  std::size_t n_top_publishers = kDefaultTopPublishers;

  // {"keywords": {...}, "n_top_publishers": 10}
  static FeatureConfig load(const std::filesystem::path& path);
};

}  // namespace newsrank
