// Copyright 2026 The zne-mixed Authors
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
#include <stdexcept>
#include <string>

namespace zne {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed arguments: empty schedules, negative variances, bad shot counts.
class InvalidInputError : public Error {
 public:
  using Error::Error;
};

// Two noise levels coincide (or nearly so) and the Vandermonde system is singular.
class DegenerateScheduleError : public Error {
 public:
  using Error::Error;
};

class InvalidIntervalError : public Error {
 public:
  using Error::Error;
};

// A logical anchor does not sit strictly below every physical point.
class ScheduleOverlapError : public Error {
 public:
  using Error::Error;
};

// gamma >= 1: error correction provides no suppression.
class NoCorrectionError : public Error {
 public:
  using Error::Error;
};

class IndexError : public Error {
 public:
  using Error::Error;
};

class InvalidProbabilityError : public Error {
 public:
  using Error::Error;
};

class InvalidFoldError : public Error {
 public:
  using Error::Error;
};

class CapacityError : public Error {
 public:
  using Error::Error;
};

class IncompleteDatasetError : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

/// Parse failure in a text input; `line()` is 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace zne
