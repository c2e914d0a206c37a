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

#include "newsrank/time.h"

#include <cctype>
#include <charconv>
#include <cstdio>

#include "newsrank/error.h"

namespace newsrank {
namespace {

bool read_int(std::string_view text, std::size_t pos, std::size_t width,
              int& out) {
  if (pos + width > text.size()) return false;
  for (std::size_t i = pos; i < pos + width; ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) return false;
  }
  std::from_chars(text.data() + pos, text.data() + pos + width, out);
  return true;
}

[[noreturn]] void fail(std::string_view text) {
  throw ParseError("invalid timestamp: \"" + std::string(text) + "\"");
}

}  // namespace

Timestamp parse_timestamp(std::string_view text) {
  using namespace std::chrono;
  int y = 0, mo = 0, d = 0, h = 0, mi = 0, s = 0;
  if (!read_int(text, 0, 4, y) || text.size() < 19 || text[4] != '-' ||
      !read_int(text, 5, 2, mo) || text[7] != '-' ||
      !read_int(text, 8, 2, d) || (text[10] != 'T' && text[10] != ' ') ||
      !read_int(text, 11, 2, h) || text[13] != ':' ||
      !read_int(text, 14, 2, mi) || text[16] != ':' ||
      !read_int(text, 17, 2, s)) {
    fail(text);
  }
  const year_month_day ymd{year{y}, month{static_cast<unsigned>(mo)},
                           day{static_cast<unsigned>(d)}};
  if (!ymd.ok() || h > 23 || mi > 59 || s > 60) fail(text);

  std::size_t pos = 19;
  if (pos < text.size() && text[pos] == '.') {
    ++pos;
    const std::size_t start = pos;
    while (pos < text.size() &&
           std::isdigit(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
    if (pos == start) fail(text);
  }
  int offset_seconds = 0;
  if (pos < text.size()) {
    if (text[pos] == 'Z' || text[pos] == 'z') {
      ++pos;
    } else if (text[pos] == '+' || text[pos] == '-') {
      int oh = 0, om = 0;
      if (!read_int(text, pos + 1, 2, oh) || pos + 3 >= text.size() ||
          text[pos + 3] != ':' || !read_int(text, pos + 4, 2, om)) {
        fail(text);
      }
      offset_seconds = (oh * 3600 + om * 60) * (text[pos] == '-' ? -1 : 1);
      pos += 6;
    }
  }
  if (pos != text.size()) fail(text);

  const Timestamp local = sys_days{ymd} + hours{h} + minutes{mi} + seconds{s};
  return local - seconds{offset_seconds};
}

std::string format_timestamp(Timestamp t) {
  using namespace std::chrono;
  const auto day_start = floor<days>(t);
  const year_month_day ymd{day_start};
  const hh_mm_ss<seconds> tod{t - day_start};
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%04d-%02u-%02uT%02d:%02d:%02dZ",
                static_cast<int>(ymd.year()), static_cast<unsigned>(ymd.month()),
                static_cast<unsigned>(ymd.day()),
                static_cast<int>(tod.hours().count()),
                static_cast<int>(tod.minutes().count()),
                static_cast<int>(tod.seconds().count()));
  return buf;
}

Duration parse_duration(std::string_view text) {
  if (text.empty()) throw ParseError("empty duration");
  std::int64_t value = 0;
  const auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || value < 0) {
    throw ParseError("invalid duration: \"" + std::string(text) + "\"");
  }
  const std::string_view unit(ptr, text.data() + text.size() - ptr);
  if (unit.empty() || unit == "s") return Duration{value};
  if (unit == "m") return Duration{value * 60};
  if (unit == "h") return Duration{value * 3600};
  if (unit == "d") return Duration{value * 86400};
  throw ParseError("invalid duration unit: \"" + std::string(text) + "\"");
}

}  // namespace newsrank
