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

#ifndef VALIPRO_INSTANCE_IO_HPP_
#define VALIPRO_INSTANCE_IO_HPP_

// Plain-text problem and solution files, plus instance generators whose
// optimum is known in closed form.
//
// Problem file:
//   n m
//   m lines of n numbers   (rows of A)
//   m numbers              (b)
//   n numbers              (c)
// Tokens may be separated by any whitespace. Lines whose first non-blank
// character is '#' are comments. Solution file: n numbers.

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "valipro/errors.hpp"
#include "valipro/lp_core.hpp"

namespace valipro {

// Shortest form that still carries 17 significant digits (printf "%.17g"),
// which round-trips every double exactly.
inline std::string format_decimal(double value) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value,
                                 std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

inline std::string join_decimals(std::span<const double> values, char sep) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += sep;
    out += format_decimal(values[i]);
  }
  return out;
}

namespace internal {

class Tokenizer {
 public:
  explicit Tokenizer(std::string_view text) : text_(text) {}

  struct Token {
    std::string_view text;
    std::size_t line = 0;
    std::size_t column = 0;
  };

  // Returns false at end of input.
  bool next(Token& token) {
    for (;;) {
      while (pos_ < text_.size() &&
             std::isspace(static_cast<unsigned char>(text_[pos_]))) {
        advance();
      }
      if (pos_ >= text_.size()) return false;
      if (text_[pos_] == '#' && line_is_blank_so_far()) {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
        continue;
      }
      break;
    }
    token.line = line_;
    token.column = column_;
    const std::size_t begin = pos_;
    while (pos_ < text_.size() &&
           !std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      advance();
    }
    token.text = text_.substr(begin, pos_ - begin);
    return true;
  }

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  bool line_is_blank_so_far() const {
    std::size_t i = pos_;
    while (i > 0 && text_[i - 1] != '\n') {
      if (!std::isspace(static_cast<unsigned char>(text_[i - 1]))) return false;
      --i;
    }
    return true;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

inline double parse_decimal(const Tokenizer::Token& token) {
  double value = 0.0;
  std::string_view s = token.text;
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  const auto res = std::from_chars(s.data(), s.data() + s.size(), value);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
    throw ParseError("not a decimal number: '" + std::string(token.text) + "'",
                     token.line, token.column);
  }
  if (!std::isfinite(value)) {
    throw ParseError("non-finite value '" + std::string(token.text) + "'",
                     token.line, token.column);
  }
  return value;
}

inline std::size_t parse_count(const Tokenizer::Token& token) {
  std::size_t value = 0;
  const auto res = std::from_chars(token.text.data(),
                                   token.text.data() + token.text.size(), value);
  if (res.ec != std::errc() || res.ptr != token.text.data() + token.text.size()) {
    throw ParseError("expected a non-negative integer, got '" +
                         std::string(token.text) + "'",
                     token.line, token.column);
  }
  return value;
}

inline std::vector<double> read_decimals(Tokenizer& tokens, std::size_t count,
                                         const char* what) {
  std::vector<double> values;
  values.reserve(count);
  Tokenizer::Token token;
  while (values.size() < count) {
    if (!tokens.next(token)) {
      throw DimensionError(std::string("unexpected end of input while reading ") +
                           what + ": got " + std::to_string(values.size()) +
                           " of " + std::to_string(count) + " values");
    }
    values.push_back(parse_decimal(token));
  }
  return values;
}

inline void expect_end(Tokenizer& tokens) {
  Tokenizer::Token token;
  if (tokens.next(token)) {
    throw DimensionError("trailing data at line " + std::to_string(token.line) +
                         ", column " + std::to_string(token.column) + ": '" +
                         std::string(token.text) + "'");
  }
}

}  // namespace internal

inline Problem read_problem(std::string_view text) {
  internal::Tokenizer tokens(text);
  internal::Tokenizer::Token token;
  if (!tokens.next(token)) throw ParseError("missing header 'n m'", 1, 1);
  const std::size_t n = internal::parse_count(token);
  if (!tokens.next(token)) {
    throw ParseError("header needs two integers 'n m'", tokens.line(),
                     tokens.column());
  }
  const std::size_t m = internal::parse_count(token);
  if (n == 0 || m == 0) throw DimensionError("header must have n >= 1, m >= 1");
  if (n > (std::size_t{1} << 31) / m) throw DimensionError("header n*m too large");

  auto a = internal::read_decimals(tokens, n * m, "constraint matrix");
  auto b = internal::read_decimals(tokens, m, "right-hand side");
  auto c = internal::read_decimals(tokens, n, "objective");
  internal::expect_end(tokens);
  return Problem(n, m, std::move(a), std::move(b), std::move(c));
}

inline std::string write_problem(const Problem& problem) {
  std::string out = std::to_string(problem.n()) + " " +
                    std::to_string(problem.m()) + "\n";
  for (std::size_t i = 0; i < problem.m(); ++i) {
    out += join_decimals(problem.row(i), ' ') + "\n";
  }
  out += join_decimals(problem.rhs(), ' ') + "\n";
  out += join_decimals(problem.objective_coefficients(), ' ') + "\n";
  return out;
}

inline Point read_solution(std::string_view text, std::size_t n) {
  internal::Tokenizer tokens(text);
  Point x = internal::read_decimals(tokens, n, "solution");
  internal::Tokenizer::Token token;
  if (tokens.next(token)) {
    std::size_t extra = 1;
    while (tokens.next(token)) ++extra;
    throw DimensionError("solution has " + std::to_string(n + extra) +
                         " values, expected " + std::to_string(n));
  }
  return x;
}

inline std::string write_solution(std::span<const double> x) {
  return join_decimals(x, ' ') + "\n";
}

// ---------------------------------------------------------------------------
// Generators

enum class InstanceKind { kHypercube, kCappedCube };

struct GeneratorSpec {
  InstanceKind kind = InstanceKind::kHypercube;
  std::size_t n = 3;
  double side = 10.0;
  double cap = 0.0;        // capped-cube only
  std::uint64_t seed = 0;  // unused by the deterministic kinds
};

struct GeneratedInstance {
  Problem problem;
  Point optimum;  // one maximizer
};

namespace internal {

inline void check_generator_args(std::size_t n, double side) {
  if (n < 3) throw InvalidArgument("generator needs n >= 3");
  if (!(side > 0.0) || !std::isfinite(side)) {
    throw InvalidArgument("cube side must be positive and finite");
  }
}

// Rows 0..n-1: x_i <= side. Rows n..2n-1: -x_i <= 0.
inline void append_cube_rows(std::size_t n, double side, std::vector<double>& a,
                             std::vector<double>& b) {
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a.push_back(i == j ? 1.0 : 0.0);
    b.push_back(side);
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a.push_back(i == j ? -1.0 : 0.0);
    b.push_back(0.0);
  }
}

}  // namespace internal

// 0 <= x_i <= side, maximize sum x_i. Unique optimum (side, ..., side).
inline GeneratedInstance gen_hypercube(std::size_t n, double side) {
  internal::check_generator_args(n, side);
  std::vector<double> a;
  std::vector<double> b;
  internal::append_cube_rows(n, side, a, b);
  return {Problem(n, 2 * n, std::move(a), std::move(b), std::vector<double>(n, 1.0)),
          Point(n, side)};
}

// Hypercube plus sum x_i <= cap. The optimum value is cap, attained on a
// whole facet; (cap/n, ..., cap/n) is returned.
inline GeneratedInstance gen_capped_cube(std::size_t n, double side, double cap) {
  internal::check_generator_args(n, side);
  if (!(cap > 0.0) || !(cap < static_cast<double>(n) * side)) {
    throw InvalidArgument("cap must lie in (0, n * side)");
  }
  std::vector<double> a;
  std::vector<double> b;
  internal::append_cube_rows(n, side, a, b);
  a.insert(a.end(), n, 1.0);
  b.push_back(cap);
  return {Problem(n, 2 * n + 1, std::move(a), std::move(b),
                  std::vector<double>(n, 1.0)),
          Point(n, cap / static_cast<double>(n))};
}

inline GeneratedInstance generate(const GeneratorSpec& spec) {
  switch (spec.kind) {
    case InstanceKind::kHypercube:
      return gen_hypercube(spec.n, spec.side);
    case InstanceKind::kCappedCube:
      return gen_capped_cube(spec.n, spec.side, spec.cap);
  }
  throw InvalidArgument("unknown instance kind");
}

}  // namespace valipro

#endif  // VALIPRO_INSTANCE_IO_HPP_
