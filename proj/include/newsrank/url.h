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

#include <string>
#include <string_view>

namespace newsrank {

// Components of an absolute URL, as far as canonicalization needs them.
struct UrlParts {
  std::string scheme;  // lowercased
  std::string host;    // lowercased, without port or userinfo
  std::string port;    // digits only, may be empty
  std::string path;    // always starts with '/'
};

// Throws ParseError naming the input when it is not an absolute URL with a
// host.
UrlParts parse_url(std::string_view url);

// scheme://host[:port]/path with the query string and fragment removed, the
// scheme and host lowercased and trailing slashes dropped from non-root
// paths. Idempotent.
std::string canonicalize_url(std::string_view url);

// Lowercased host of `url`.
std::string url_host(std::string_view url);

}  // namespace newsrank
