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

#ifndef VALIPRO_SPHERE_HPP_
#define VALIPRO_SPHERE_HPP_

// The validation set: a regular grid of points on a hypersphere of radius rho,
// built from d parallels and 2d meridians with the poles left out.
//
// A point is addressed by its spherical angles phi_1..phi_{n-2}, theta with
//   phi_j = u_j * pi / d,   u_j in [1, d-1]
//   theta = t * pi / d,     t   in [0, 2d-1]
// and Cartesian coordinates
//   v_1     = rho cos(phi_1)
//   v_j     = rho cos(phi_j) prod_{i<j} sin(phi_i)          j = 2..n-2
//   v_{n-1} = rho sin(theta) prod_{i<=n-2} sin(phi_i)
//   v_n     = rho cos(theta) prod_{i<=n-2} sin(phi_i).
//
// Points are numbered k = 0..K-1, K = 2d (d-1)^(n-2), in nested-loop order:
// theta is the outermost loop and phi_1 the innermost (fastest varying).

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <numbers>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "valipro/errors.hpp"
#include "valipro/lp_core.hpp"

namespace valipro {

// Largest accepted number of parallels. Keeps the angle tables small; any
// larger d gives a set far beyond what can be enumerated anyway for n >= 4.
inline constexpr std::uint32_t kMaxParallels = 1u << 20;

namespace internal {

inline std::optional<std::uint64_t> checked_mul(std::uint64_t a,
                                                std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_mul_overflow(a, b, &r)) return std::nullopt;
  return r;
}

// base * radix^exponent with overflow reporting.
inline std::optional<std::uint64_t> checked_scaled_power(std::uint64_t base,
                                                         std::uint64_t radix,
                                                         std::size_t exponent) {
  std::optional<std::uint64_t> acc = base;
  for (std::size_t i = 0; i < exponent && acc; ++i) acc = checked_mul(*acc, radix);
  return acc;
}

inline void check_grid_shape(std::size_t n, std::uint64_t d) {
  if (n < 3) {
    throw InvalidArgument("sphere grid needs dimension n >= 3, got " +
                          std::to_string(n));
  }
  if (d < 3) {
    throw InvalidArgument("number of parallels d must be >= 3, got " +
                          std::to_string(d));
  }
}

inline std::uint64_t require_count(std::optional<std::uint64_t> count,
                                   const char* formula, std::size_t n,
                                   std::uint64_t d) {
  if (!count) {
    throw OverflowError(std::string(formula) + " exceeds 64 bits for n = " +
                        std::to_string(n) + ", d = " + std::to_string(d));
  }
  return *count;
}

}  // namespace internal

// K = 2d (d-1)^(n-2): size of the duplicate-free validation set.
inline std::uint64_t cardinality(std::size_t n, std::uint64_t d) {
  internal::check_grid_shape(n, d);
  return internal::require_count(
      internal::checked_scaled_power(2 * d, d - 1, n - 2), "2d(d-1)^(n-2)", n, d);
}

// 2d (d+1)^(n-2): size of the grid when the pole angles 0 and pi are kept.
inline std::uint64_t cardinality_with_duplicates(std::size_t n,
                                                 std::uint64_t d) {
  internal::check_grid_shape(n, d);
  return internal::require_count(
      internal::checked_scaled_power(2 * d, d + 1, n - 2), "2d(d+1)^(n-2)", n, d);
}

class SphereParams {
 public:
  SphereParams(std::size_t n, std::uint32_t d, double rho)
      : n_(n), d_(d), rho_(rho) {
    internal::check_grid_shape(n, d);
    if (d > kMaxParallels) {
      throw InvalidArgument("number of parallels d must be <= " +
                            std::to_string(kMaxParallels));
    }
    if (!(rho > 0.0) || !std::isfinite(rho)) {
      throw InvalidArgument("sphere radius must be positive and finite");
    }
    // Angles are reduced in extended precision and rounded once, so that
    // e.g. cos(pi/3) comes out as exactly 0.5.
    const long double step = std::numbers::pi_v<long double> / d;
    cos_.resize(2 * std::size_t{d} + 1);
    sin_.resize(2 * std::size_t{d} + 1);
    for (std::uint32_t j = 0; j <= 2 * d; ++j) {
      const long double angle = step * j;
      cos_[j] = static_cast<double>(std::cos(angle));
      sin_[j] = static_cast<double>(std::sin(angle));
    }
    cardinality_ = internal::checked_scaled_power(2 * std::uint64_t{d},
                                                  d - 1, n - 2);
    if (cardinality_) {
      digit_weight_.resize(n - 1);
      digit_weight_[0] = 1;
      for (std::size_t j = 1; j < n - 1; ++j) {
        digit_weight_[j] = digit_weight_[j - 1] * (d - 1);
      }
    }
  }

  std::size_t n() const noexcept { return n_; }
  std::uint32_t d() const noexcept { return d_; }
  double rho() const noexcept { return rho_; }
  double angle_step() const noexcept { return std::numbers::pi / d_; }

  // The grid is defined for any d >= 3, but only odd d was studied.
  std::optional<std::string> warning() const {
    if (d_ % 2 == 0) {
      return "even number of parallels d = " + std::to_string(d_) +
             " is outside the odd-d regime the method was designed for";
    }
    return std::nullopt;
  }

  // K for these parameters; throws OverflowError when it does not fit.
  std::uint64_t cardinality() const {
    return internal::require_count(cardinality_, "2d(d-1)^(n-2)", n_, d_);
  }

  // cos / sin of j * pi / d for j in [0, 2d].
  double cos_at(std::uint32_t j) const noexcept { return cos_[j]; }
  double sin_at(std::uint32_t j) const noexcept { return sin_[j]; }

  // (d-1)^j; only valid when cardinality() does not throw.
  std::uint64_t digit_weight(std::size_t j) const noexcept {
    return digit_weight_[j];
  }

 private:
  std::size_t n_;
  std::uint32_t d_;
  double rho_;
  std::vector<double> cos_;
  std::vector<double> sin_;
  std::optional<std::uint64_t> cardinality_;
  std::vector<std::uint64_t> digit_weight_;
};

// Spherical address of a grid point. u[j-1] indexes phi_j; t indexes theta.
struct AngleIndex {
  std::vector<std::uint32_t> u;
  std::uint32_t t = 0;

  friend bool operator==(const AngleIndex&, const AngleIndex&) = default;
};

namespace internal {

inline void check_index(std::uint64_t k, const SphereParams& params) {
  const std::uint64_t count = params.cardinality();
  if (k >= count) {
    throw IndexOutOfRange("point index " + std::to_string(k) +
                          " out of range [0, " + std::to_string(count) + ")");
  }
}

inline void check_angles(const AngleIndex& angles, const SphereParams& params) {
  if (angles.u.size() != params.n() - 2) {
    throw DimensionError("angle index has " + std::to_string(angles.u.size()) +
                         " phi entries, expected " +
                         std::to_string(params.n() - 2));
  }
  for (std::uint32_t u : angles.u) {
    if (u < 1 || u > params.d() - 1) {
      throw IndexOutOfRange("phi index " + std::to_string(u) +
                            " outside [1, d-1]");
    }
  }
  if (angles.t >= 2 * params.d()) {
    throw IndexOutOfRange("theta index " + std::to_string(angles.t) +
                          " outside [0, 2d-1]");
  }
}

// Shared coordinate kernel: `phi` yields the n-2 phi indices in order.
// Both the indexed and the nested-loop generators funnel into this exact
// sequence of floating-point operations.
template <typename PhiIndex>
inline void spherical_to_cartesian(const SphereParams& params, PhiIndex&& phi,
                                   std::uint32_t t, std::span<double> out) {
  const std::size_t n = params.n();
  const double rho = params.rho();
  double running = 1.0;
  std::uint32_t prev = phi(0);
  out[0] = rho * params.cos_at(prev);
  for (std::size_t j = 1; j + 2 < n; ++j) {
    const std::uint32_t cur = phi(j);
    running = params.sin_at(prev) * running;
    out[j] = rho * params.cos_at(cur) * running;
    prev = cur;
  }
  running = params.sin_at(prev) * running;
  out[n - 2] = rho * params.sin_at(t) * running;
  out[n - 1] = rho * params.cos_at(t) * running;
}

}  // namespace internal

// Mixed-radix decoding of k: t is the most significant digit (radix 2d),
// u_1 the least significant (radix d-1, offset by one).
inline AngleIndex index_to_angles(std::uint64_t k, const SphereParams& params) {
  internal::check_index(k, params);
  const std::size_t phis = params.n() - 2;
  const std::uint64_t radix = params.d() - 1;
  AngleIndex angles;
  angles.t = static_cast<std::uint32_t>(k / params.digit_weight(phis));
  std::uint64_t rest = k % params.digit_weight(phis);
  angles.u.resize(phis);
  for (std::size_t j = 0; j < phis; ++j) {
    angles.u[j] = static_cast<std::uint32_t>(rest % radix) + 1;
    rest /= radix;
  }
  return angles;
}

// Inverse of index_to_angles.
inline std::uint64_t angles_to_index(const AngleIndex& angles,
                                     const SphereParams& params) {
  params.cardinality();
  internal::check_angles(angles, params);
  const std::size_t phis = params.n() - 2;
  std::uint64_t k = angles.t * params.digit_weight(phis);
  for (std::size_t j = 0; j < phis; ++j) {
    k += (angles.u[j] - 1) * params.digit_weight(j);
  }
  return k;
}

inline void angles_to_point(const AngleIndex& angles, const SphereParams& params,
                            std::span<double> out) {
  internal::check_angles(angles, params);
  if (out.size() != params.n()) throw DimensionError("output span has wrong size");
  internal::spherical_to_cartesian(
      params, [&](std::size_t j) { return angles.u[j]; }, angles.t, out);
}

inline Point angles_to_point(const AngleIndex& angles,
                             const SphereParams& params) {
  Point v(params.n());
  angles_to_point(angles, params, v);
  return v;
}

// Allocation-free g(k): writes the offset of point k (relative to the sphere
// centre) into `out`. Safe to call concurrently.
inline void point_at(std::uint64_t k, const SphereParams& params,
                     std::span<double> out) {
  internal::check_index(k, params);
  if (out.size() != params.n()) throw DimensionError("output span has wrong size");
  const std::size_t phis = params.n() - 2;
  const std::uint64_t radix = params.d() - 1;
  const auto t = static_cast<std::uint32_t>(k / params.digit_weight(phis));
  std::uint64_t rest = k % params.digit_weight(phis);
  internal::spherical_to_cartesian(
      params,
      [&](std::size_t) {
        const auto u = static_cast<std::uint32_t>(rest % radix) + 1;
        rest /= radix;
        return u;
      },
      t, out);
}

inline Point point_at(std::uint64_t k, const SphereParams& params) {
  Point v(params.n());
  point_at(k, params, v);
  return v;
}

namespace internal {

// Nested loops over theta (outermost) and phi_{n-2} .. phi_1 (innermost),
// each phi index running over [lo, hi]. Implemented as an odometer so the
// nesting depth can follow n at run time.
template <typename Visitor>
void enumerate_grid(const SphereParams& params, std::uint32_t lo,
                    std::uint32_t hi, Visitor&& visit) {
  const std::size_t n = params.n();
  std::vector<std::uint32_t> j(n - 2);
  Point v(n);
  for (std::uint32_t t = 0; t < 2 * params.d(); ++t) {
    std::fill(j.begin(), j.end(), lo);
    for (;;) {
      spherical_to_cartesian(
          params, [&](std::size_t i) { return j[i]; }, t, v);
      visit(std::span<const double>(v));
      std::size_t pos = 0;
      while (pos < j.size() && ++j[pos] > hi) j[pos++] = lo;
      if (pos == j.size()) break;
    }
  }
}

}  // namespace internal

// Visits the K grid points in index order, poles excluded. The visitor takes
// std::span<const double>; the span is only valid during the call.
template <typename Visitor>
void enumerate_dedup(const SphereParams& params, Visitor&& visit) {
  params.cardinality();
  internal::enumerate_grid(params, 1, params.d() - 1,
                           std::forward<Visitor>(visit));
}

// Same traversal with phi indices running over [0, d]. Every point with a
// pole angle is emitted many times; 2d (d+1)^(n-2) points in total.
template <typename Visitor>
void enumerate_with_duplicates(const SphereParams& params, Visitor&& visit) {
  cardinality_with_duplicates(params.n(), params.d());
  internal::enumerate_grid(params, 0, params.d(), std::forward<Visitor>(visit));
}

inline std::vector<Point> collect_dedup(const SphereParams& params) {
  std::vector<Point> points;
  points.reserve(params.cardinality());
  enumerate_dedup(params, [&](std::span<const double> v) {
    points.emplace_back(v.begin(), v.end());
  });
  return points;
}

inline std::vector<Point> collect_with_duplicates(const SphereParams& params) {
  std::vector<Point> points;
  points.reserve(cardinality_with_duplicates(params.n(), params.d()));
  enumerate_with_duplicates(params, [&](std::span<const double> v) {
    points.emplace_back(v.begin(), v.end());
  });
  return points;
}

// ---------------------------------------------------------------------------
// Duplicate audit

struct DedupAudit {
  std::uint64_t total_a = 0;       // points emitted with pole angles kept
  std::uint64_t duplicates_a = 0;  // total_a - unique_a
  std::uint64_t unique_a = 0;      // distinct points among them
  std::uint64_t count_b = 0;       // points of the pole-free grid
  std::uint64_t lost_unique = 0;   // distinct points with no pole-free match

  friend bool operator==(const DedupAudit&, const DedupAudit&) = default;
};

inline constexpr std::uint64_t kDefaultAuditCap = std::uint64_t{1} << 21;

namespace internal {

// Set of points with max-norm tolerance lookups. Coordinates are hashed on a
// grid of cells 4*tol wide (cell centres on multiples of the width, so exact
// zeros sit mid-cell). A query visits its own cell and, for each coordinate
// within tol of a cell face, the neighbour across that face; no match within
// tol can be missed.
class ToleranceSet {
 public:
  explicit ToleranceSet(double tol) : tol_(tol), width_(4 * tol) {}

  bool contains(std::span<const double> p) const {
    std::vector<std::int64_t> key(p.size());
    std::vector<std::int64_t> alt(p.size());
    std::vector<std::size_t> straddling;
    for (std::size_t i = 0; i < p.size(); ++i) {
      key[i] = cell(p[i]);
      alt[i] = key[i];
      if (cell(p[i] - tol_) != key[i]) {
        alt[i] = key[i] - 1;
        straddling.push_back(i);
      } else if (cell(p[i] + tol_) != key[i]) {
        alt[i] = key[i] + 1;
        straddling.push_back(i);
      }
    }
    std::vector<std::int64_t> probe(key);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << straddling.size());
         ++mask) {
      for (std::size_t s = 0; s < straddling.size(); ++s) {
        const std::size_t i = straddling[s];
        probe[i] = (mask >> s) & 1 ? alt[i] : key[i];
      }
      const auto it = cells_.find(probe);
      if (it == cells_.end()) continue;
      for (std::size_t idx : it->second) {
        if (close(points_[idx], p)) return true;
      }
    }
    return false;
  }

  void insert(std::span<const double> p) {
    std::vector<std::int64_t> key(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) key[i] = cell(p[i]);
    cells_[key].push_back(points_.size());
    points_.emplace_back(p.begin(), p.end());
  }

  std::span<const Point> points() const { return points_; }

 private:
  struct KeyHash {
    std::size_t operator()(const std::vector<std::int64_t>& key) const noexcept {
      std::uint64_t h = 1469598103934665603ull;
      for (std::int64_t c : key) {
        h ^= static_cast<std::uint64_t>(c);
        h *= 1099511628211ull;
      }
      return static_cast<std::size_t>(h);
    }
  };

  std::int64_t cell(double x) const {
    return static_cast<std::int64_t>(std::floor(x / width_ + 0.5));
  }

  bool close(const Point& a, std::span<const double> b) const {
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (!(std::abs(a[i] - b[i]) <= tol_)) return false;
    }
    return true;
  }

  double tol_;
  double width_;
  std::vector<Point> points_;
  std::unordered_map<std::vector<std::int64_t>, std::vector<std::size_t>, KeyHash>
      cells_;
};

}  // namespace internal

// Compares the pole-including grid against the pole-free one. Two points are
// the same when they agree within `tol` in every coordinate.
inline DedupAudit dedup_audit(const SphereParams& params, double tol = 1e-9,
                              std::uint64_t cap = kDefaultAuditCap) {
  if (!(tol > 0.0)) throw InvalidArgument("duplicate tolerance must be > 0");
  const std::uint64_t total = cardinality_with_duplicates(params.n(), params.d());
  if (total > cap) {
    throw ResourceLimit("audit would materialize " + std::to_string(total) +
                        " points, cap is " + std::to_string(cap));
  }

  DedupAudit audit;
  internal::ToleranceSet unique_a(tol);
  enumerate_with_duplicates(params, [&](std::span<const double> v) {
    ++audit.total_a;
    if (!unique_a.contains(v)) unique_a.insert(v);
  });
  audit.unique_a = unique_a.points().size();
  audit.duplicates_a = audit.total_a - audit.unique_a;

  internal::ToleranceSet grid_b(tol);
  enumerate_dedup(params, [&](std::span<const double> v) {
    ++audit.count_b;
    if (!unique_a.contains(v)) {
      throw InvariantBreach("pole-free grid point has no counterpart in the "
                            "full grid");
    }
    grid_b.insert(v);
  });
  for (const Point& p : unique_a.points()) {
    if (!grid_b.contains(p)) ++audit.lost_unique;
  }
  return audit;
}

}  // namespace valipro

#endif  // VALIPRO_SPHERE_HPP_
