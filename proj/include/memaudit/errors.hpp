// Copyright 2026 The memaudit Authors
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

namespace memaudit {

/// Base class for every error raised by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A required configuration value is out of range or inconsistent.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// The sliding-window target string is empty.
class EmptyTarget : public Error {
 public:
  EmptyTarget() : Error("target must be non-empty") {}
};

/// Split indices are out of order or out of range.
class InvalidSplit : public Error {
 public:
  using Error::Error;
};

/// A sentinel token occurs inside a field that is about to be serialized.
class SentinelCollision : public Error {
 public:
  using Error::Error;
};

/// Sentinel-formatted text does not follow the expected layout. Carries the
/// name of the first sentinel whose placement is violated.
class MalformedPsm : public Error {
 public:
  MalformedPsm(const std::string& sentinel, const std::string& what)
      : Error(what), sentinel_(sentinel) {}
  const std::string& sentinel() const { return sentinel_; }

 private:
  std::string sentinel_;
};

/// A generation prompt does not match the corpus prompt template.
class TemplateMismatch : public Error {
 public:
  using Error::Error;
};

/// Requested more positive examples than sensitive documents exist.
class InsufficientSensitiveExamples : public Error {
 public:
  using Error::Error;
};

/// A document has no usable line to select a target from.
class EmptyDocument : public Error {
 public:
  using Error::Error;
};

/// A corpus is too small for the requested construction.
class CorpusTooSmall : public Error {
 public:
  using Error::Error;
};

/// The named tokenizer is not registered.
class UnknownTokenizer : public Error {
 public:
  using Error::Error;
};

/// A record file contains a line that does not parse. `line()` is 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_ = 0;
};

/// Reading or writing a file failed at the OS level.
class IoError : public Error {
 public:
  using Error::Error;
};

/// The completion endpoint could not be reached at all.
class EndpointUnreachable : public Error {
 public:
  using Error::Error;
};

}  // namespace memaudit
