// Copyright 2026 The VaLiPro Authors
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

#ifndef VALIPRO_ERRORS_HPP_
#define VALIPRO_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace valipro {

// Root of every error thrown by the library. Callers that only need to
// distinguish "valid" from "invalid" input can catch this one type.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Vector/matrix extents disagree with each other or with a declared header.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// A parameter is outside its documented domain (n < 3, rho <= 0, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// A count does not fit into 64 unsigned bits.
class OverflowError : public Error {
 public:
  using Error::Error;
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

// Refusing to materialize more points than the configured cap.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

// Verdicts disagreed across worker counts; indicates a bug, never user error.
class InvariantBreach : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error("line " + std::to_string(line) + ", column " +
              std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace valipro

#endif  // VALIPRO_ERRORS_HPP_
