// Copyright 2026 The Ludemic Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef LUDEMIC_ERROR_HPP_
#define LUDEMIC_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace ludemic {

// Base class for every domain error raised by the library. Usage errors
// (bad arguments to low-level containers) use the standard exceptions.
class LudemicError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An error tied to a position in a source text. Line and column are 1-based;
// zero means the position is unknown.
class SourceError : public LudemicError {
 public:
  SourceError(const std::string& what, int line, int column)
      : LudemicError(Decorate(what, line, column)),
        message_(what),
        line_(line),
        column_(column) {}

  const std::string& message() const { return message_; }
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  static std::string Decorate(const std::string& what, int line, int column) {
    if (line <= 0) return what;
    return std::to_string(line) + ":" + std::to_string(column) + ": " + what;
  }

  std::string message_;
  int line_;
  int column_;
};

// Lexing and parsing failures.
class SyntaxError : public SourceError {
 public:
  using SourceError::SourceError;
};

// A well-formed description that does not denote a supported game.
class CompileError : public SourceError {
 public:
  using SourceError::SourceError;
};

// A rule-evaluation precondition was violated (e.g. moves requested for a
// terminal state, or a move that is not legal in the given state).
class RuleError : public LudemicError {
 public:
  using LudemicError::LudemicError;
};

}  // namespace ludemic

#endif  // LUDEMIC_ERROR_HPP_
