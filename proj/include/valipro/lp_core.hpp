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

#ifndef VALIPRO_LP_CORE_HPP_
#define VALIPRO_LP_CORE_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "valipro/errors.hpp"

namespace valipro {

// A point of R^n. Plain coordinates; the dimension is checked at every
// operation that pairs a point with a problem.
using Point = std::vector<double>;

namespace internal {

inline void check_finite(std::span<const double> values, const char* what) {
  for (double v : values) {
    if (!std::isfinite(v)) {
      throw InvalidArgument(std::string(what) + " contains a non-finite value");
    }
  }
}

// Strict left-to-right accumulation. Every dot product in the library goes
// through here so verdicts do not depend on how work is split up.
inline double dot(std::span<const double> a, std::span<const double> b) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += a[i] * b[i];
  return sum;
}

}  // namespace internal

// Dense instance of  max <c, x>  subject to  A x <= b.
class Problem {
 public:
  // `a` is row-major, m rows of n entries.
  Problem(std::size_t n, std::size_t m, std::vector<double> a,
          std::vector<double> b, std::vector<double> c)
      : n_(n), m_(m), a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {
    if (n_ < 1 || m_ < 1) {
      throw DimensionError("problem needs n >= 1 and m >= 1");
    }
    if (a_.size() != n_ * m_) {
      throw DimensionError("constraint matrix has " + std::to_string(a_.size()) +
                           " entries, expected " + std::to_string(n_ * m_));
    }
    if (b_.size() != m_) {
      throw DimensionError("right-hand side has " + std::to_string(b_.size()) +
                           " entries, expected " + std::to_string(m_));
    }
    if (c_.size() != n_) {
      throw DimensionError("objective has " + std::to_string(c_.size()) +
                           " entries, expected " + std::to_string(n_));
    }
    internal::check_finite(a_, "constraint matrix");
    internal::check_finite(b_, "right-hand side");
    internal::check_finite(c_, "objective");
  }

  std::size_t n() const noexcept { return n_; }
  std::size_t m() const noexcept { return m_; }

  std::span<const double> row(std::size_t i) const noexcept {
    return std::span<const double>(a_).subspan(i * n_, n_);
  }
  std::span<const double> matrix() const noexcept { return a_; }
  std::span<const double> rhs() const noexcept { return b_; }
  std::span<const double> objective_coefficients() const noexcept { return c_; }

  friend bool operator==(const Problem&, const Problem&) = default;

 private:
  std::size_t n_;
  std::size_t m_;
  std::vector<double> a_;
  std::vector<double> b_;
  std::vector<double> c_;
};

namespace internal {

inline void check_dimension(const Problem& problem, std::span<const double> x) {
  if (x.size() != problem.n()) {
    throw DimensionError("point has dimension " + std::to_string(x.size()) +
                         ", problem has n = " + std::to_string(problem.n()));
  }
}

// Unchecked variants for the validation hot loop.
inline bool is_feasible_unchecked(const Problem& problem,
                                  std::span<const double> x, double delta) {
  const auto b = problem.rhs();
  for (std::size_t i = 0; i < problem.m(); ++i) {
    if (!(dot(problem.row(i), x) - b[i] <= delta)) return false;
  }
  return true;
}

}  // namespace internal

inline double objective(const Problem& problem, std::span<const double> x) {
  internal::check_dimension(problem, x);
  return internal::dot(problem.objective_coefficients(), x);
}

// True iff <A_i, x> <= b_i + delta for every row. delta = 0 is the exact test.
// Evaluated as (<A_i, x> - b_i) <= delta so that the answer always agrees with
// max(residuals(problem, x)) <= delta.
inline bool is_feasible(const Problem& problem, std::span<const double> x,
                        double delta = 0.0) {
  internal::check_dimension(problem, x);
  if (!(delta >= 0.0)) throw InvalidArgument("feasibility tolerance must be >= 0");
  return internal::is_feasible_unchecked(problem, x, delta);
}

// r_i = <A_i, x> - b_i.
inline std::vector<double> residuals(const Problem& problem,
                                     std::span<const double> x) {
  internal::check_dimension(problem, x);
  std::vector<double> r(problem.m());
  const auto b = problem.rhs();
  for (std::size_t i = 0; i < problem.m(); ++i) {
    r[i] = internal::dot(problem.row(i), x) - b[i];
  }
  return r;
}

inline double max_residual(const Problem& problem, std::span<const double> x) {
  const auto r = residuals(problem, x);
  return *std::max_element(r.begin(), r.end());
}

}  // namespace valipro

#endif  // VALIPRO_LP_CORE_HPP_
