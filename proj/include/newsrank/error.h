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

#include <stdexcept>
#include <string>

namespace newsrank {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed textual input (URL, timestamp, JSON record).
class ParseError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

// A corpus is unusable as a whole (too many bad lines, too few articles).
class CorpusError : public Error {
 public:
  using Error::Error;
};

// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Shape or size mismatch in caller-supplied data.
class InputError : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

// The article's target window has not been fully observed yet.
class NotMatureError : public DomainError {
 public:
  using DomainError::DomainError;
};

class InsufficientHistoryError : public InputError {
 public:
  using InputError::InputError;
};

// Training produced a non-finite loss.
class TrainingError : public Error {
 public:
  using Error::Error;
};

}  // namespace newsrank
