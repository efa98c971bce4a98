// Copyright 2026 The hamrank Authors
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

namespace hamrank {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Word lengths disagree or an index is out of range.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// An argument lies outside the domain of a formula (m < 2, k > n, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A value violates a type invariant (duplicate rows, symbol >= q, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

class NotPrimePowerError : public DomainError {
 public:
  using DomainError::DomainError;
};

class DivisionByZeroError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Generator rows are linearly dependent over the field.
class RankDeficiencyError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// Distance matrix is not symmetric, has a nonzero diagonal, a zero
/// off-diagonal entry, or breaks the triangle inequality.
class InvalidMatrixError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// Malformed point-set text. `line()` is 1-based; 0 means "whole input".
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& message, const std::string& source = {})
      : Error(format(line, message, source)), line_(line), message_(message) {}

  std::size_t line() const noexcept { return line_; }
  const std::string& message() const noexcept { return message_; }

 private:
  static std::string format(std::size_t line, const std::string& message, const std::string& source) {
    std::string where = source;
    if (line != 0) where += (where.empty() ? "line " : ":") + std::to_string(line);
    return where.empty() ? message : where + ": " + message;
  }

  std::size_t line_;
  std::string message_;
};

}  // namespace hamrank
