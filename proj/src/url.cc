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

#include "newsrank/url.h"

#include <algorithm>
#include <cctype>

#include "newsrank/error.h"

namespace newsrank {
namespace {

[[noreturn]] void fail(std::string_view url, std::string_view why) {
  throw ParseError("malformed URL \"" + std::string(url) + "\": " +
                   std::string(why));
}

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) {
    return static_cast<char>(std::tolower(c));
  });
  return out;
}

bool is_host_char(unsigned char c) {
  return std::isalnum(c) || c == '-' || c == '.' || c == '_' || c == '~' ||
         c >= 0x80;
}

}  // namespace

UrlParts parse_url(std::string_view url) {
  for (unsigned char c : url) {
    if (c <= 0x20 || c == 0x7f) fail(url, "contains whitespace or control");
  }
  const auto sep = url.find("://");
  if (sep == std::string_view::npos || sep == 0) fail(url, "missing scheme");
  const std::string_view scheme = url.substr(0, sep);
  if (!std::isalpha(static_cast<unsigned char>(scheme[0])) ||
      !std::all_of(scheme.begin(), scheme.end(), [](unsigned char c) {
        return std::isalnum(c) || c == '+' || c == '-' || c == '.';
      })) {
    fail(url, "invalid scheme");
  }

  std::string_view rest = url.substr(sep + 3);
  const auto authority_end = rest.find_first_of("/?#");
  std::string_view authority = rest.substr(0, authority_end);
  rest = authority_end == std::string_view::npos ? std::string_view{}
                                                 : rest.substr(authority_end);
  if (const auto at = authority.rfind('@'); at != std::string_view::npos) {
    authority = authority.substr(at + 1);
  }

  UrlParts parts;
  parts.scheme = lower(scheme);
  std::string_view host = authority;
  if (!authority.empty() && authority.front() == '[') {
    const auto close = authority.find(']');
    if (close == std::string_view::npos) fail(url, "unterminated IPv6 host");
    host = authority.substr(0, close + 1);
    const std::string_view tail = authority.substr(close + 1);
    if (!tail.empty()) {
      if (tail.front() != ':') fail(url, "garbage after IPv6 host");
      parts.port = std::string(tail.substr(1));
    }
  } else {
    if (const auto colon = authority.rfind(':');
        colon != std::string_view::npos) {
      host = authority.substr(0, colon);
      parts.port = std::string(authority.substr(colon + 1));
    }
    if (!std::all_of(host.begin(), host.end(),
                     [](unsigned char c) { return is_host_char(c); })) {
      fail(url, "invalid host");
    }
  }
  if (host.empty()) fail(url, "empty host");
  if (!std::all_of(parts.port.begin(), parts.port.end(),
                   [](unsigned char c) { return std::isdigit(c); })) {
    fail(url, "invalid port");
  }
  parts.host = lower(host);

  const auto path_end = rest.find_first_of("?#");
  parts.path = std::string(rest.substr(0, path_end));
  if (parts.path.empty()) parts.path = "/";
  while (parts.path.size() > 1 && parts.path.back() == '/') {
    parts.path.pop_back();
  }
  return parts;
}

std::string canonicalize_url(std::string_view url) {
  const UrlParts parts = parse_url(url);
  std::string out = parts.scheme + "://" + parts.host;
  if (!parts.port.empty()) out += ":" + parts.port;
  out += parts.path;
  return out;
}

std::string url_host(std::string_view url) { return parse_url(url).host; }

}  // namespace newsrank
