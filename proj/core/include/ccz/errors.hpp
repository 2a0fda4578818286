// Copyright 2026 The ccz Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace ccz {

/// Machine-readable error classes. The CLI maps these onto exit codes.
enum class ErrorKind {
  kBadInput,
  kBadReduction,
  kPrecision,
  kDomain,
  kSimplicity,
  kRecognition,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Thin subclasses so call sites read naturally and tests can match on type.
class BadInputError : public Error {
 public:
  explicit BadInputError(const std::string& what)
      : Error(ErrorKind::kBadInput, what) {}
};

class BadReductionError : public Error {
 public:
  explicit BadReductionError(const std::string& what)
      : Error(ErrorKind::kBadReduction, what) {}
};

class PrecisionError : public Error {
 public:
  explicit PrecisionError(const std::string& what)
      : Error(ErrorKind::kPrecision, what) {}
};

class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what)
      : Error(ErrorKind::kDomain, what) {}
};

class SimplicityError : public Error {
 public:
  explicit SimplicityError(const std::string& what)
      : Error(ErrorKind::kSimplicity, what) {}
};

const char* to_string(ErrorKind kind);

}  // namespace ccz
