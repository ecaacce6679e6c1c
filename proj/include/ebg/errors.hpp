/*
 * Copyright 2026 the ebgverify authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ebg {

// Base class for everything this library throws on bad input or blown limits.
// Inconclusive verdicts are not errors: operations that can run out of search
// budget return a three-valued result instead of throwing.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed text input (LTL formulas, game files, strategy files).
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Error(message + " (line " + std::to_string(line) + ", column " +
              std::to_string(column) + ")"),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// Structurally well-formed input that violates a model invariant
// (atom owned twice, negative endowment, non-exhaustive guards, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

// A configured resource cap was exceeded (automaton state bound,
// redistribution enumeration cap).
class LimitError : public Error {
 public:
  using Error::Error;
};

// Signed 64-bit arithmetic overflowed; costs and endowments are exact and
// overflow is always detected, never wrapped.
class OverflowError : public Error {
 public:
  using Error::Error;
};

}  // namespace ebg
