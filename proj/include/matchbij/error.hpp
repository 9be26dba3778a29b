// Copyright 2026 The matchbij Authors.
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

namespace matchbij {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A partner table or pair list that does not describe a complete matching.
class InvalidMatching : public Error {
 public:
  using Error::Error;
};

/// Input outside the domain of an operation: a non L & P matching passed to
/// phi, a pair that is not nested, a matching that is not a class
/// representative, and so on.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Enumeration request above the configured size cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// Malformed textual input. Line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(int line, int column, const std::string& message)
      : Error("line " + std::to_string(line) + ", column " +
              std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace matchbij
