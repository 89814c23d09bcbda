// Copyright 2026 The qsemigroup Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
/**
 * @file
 * Error type shared by every qsemigroup module.
 */

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qsemigroup {

enum class ErrorKind {
    EmptyInput,
    InvalidArgument,
    GcdNotOne,
    Overflow,
    NotAMember,
    TargetTooLarge,
    IndexOutOfRange,
    FieldOverflow,
    SweepTooLarge,
    TooManyQubits,
    NoSolutions,
    CollectionTimeout,
    FileNotFound,
    ParseError,
    EmptyFile,
    IoError,
};

const char *to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string &what)
        : std::runtime_error(what), kind_(kind) {}

    [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

  private:
    ErrorKind kind_;
};

/// Malformed generators file. `line()` is 1-based.
class ParseError : public Error {
  public:
    ParseError(std::size_t line, const std::string &what)
        : Error(ErrorKind::ParseError, what), line_(line) {}

    [[nodiscard]] std::size_t line() const noexcept { return line_; }

  private:
    std::size_t line_;
};

} // namespace qsemigroup
