// Copyright 2026 The Authors.
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

namespace lagmap {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed map or matrix text. Line and column are 1-based; column 0 means
// the whole line.
class ParseError : public Error {
 public:
  ParseError(int line, int column, const std::string& message)
      : Error("line " + std::to_string(line) + ", column " +
              std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

// A well-formed request that the operation cannot satisfy (bad edge index,
// contraction of a loop, field not supported for the map, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// An exhaustive check found a counterexample to a structural property the
// library relies on (for instance a maximal independent set of the wrong
// size). Never caught internally.
class PropertyViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace lagmap
