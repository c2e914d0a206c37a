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

#include <chrono>
#include <cstdint>
#include <string>
#include <string_view>

namespace newsrank {

using Timestamp = std::chrono::sys_seconds;
using Duration = std::chrono::seconds;

inline constexpr Duration kHour{3600};

// Accepts "YYYY-MM-DDTHH:MM:SS" with optional fractional seconds (truncated)
// and an optional "Z" or "+HH:MM"/"-HH:MM" offset; a space may replace "T".
// Years 0000-9999 are accepted so that obviously wrong dates survive parsing
// and can be filtered later.
Timestamp parse_timestamp(std::string_view text);

// Always "YYYY-MM-DDTHH:MM:SSZ".
std::string format_timestamp(Timestamp t);

// Parses "90", "90s", "15m", "1h", "2d".
Duration parse_duration(std::string_view text);

inline Timestamp from_unix(std::int64_t seconds) {
  return Timestamp{Duration{seconds}};
}

inline std::int64_t to_unix(Timestamp t) {
  return t.time_since_epoch().count();
}

}  // namespace newsrank
