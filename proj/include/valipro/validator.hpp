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

#ifndef VALIPRO_VALIDATOR_HPP_
#define VALIPRO_VALIDATOR_HPP_

// Certification of a candidate LP optimum x~ against the validation set
// centred at x~: the candidate is refuted by any grid point v = x~ + g(k)
// that is feasible and improves the objective by more than eps.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <thread>
#include <vector>

#include "valipro/errors.hpp"
#include "valipro/lp_core.hpp"
#include "valipro/sphere.hpp"

namespace valipro {

struct ValidationParams {
  std::uint32_t d = 5;      // parallels
  double rho = 1.0;         // sphere radius
  double eps = 1e-6;        // optimality tolerance, > 0
  double delta = 0.0;       // feasibility tolerance, >= 0
  bool early_exit = false;  // parallel path only; sequential always stops
  std::size_t workers = 1;
};

struct Witness {
  std::uint64_t k = 0;
  Point v;  // absolute coordinates, x~ + g(k)
  double objective_gain = 0.0;

  friend bool operator==(const Witness&, const Witness&) = default;
};

struct Verdict {
  bool correct = true;
  std::optional<Witness> witness;  // present iff !correct
  std::uint64_t points_checked = 0;
  std::uint64_t feasible_points = 0;  // among the checked ones
  double elapsed = 0.0;               // seconds
};

// Half-open index range [lo, hi).
struct Chunk {
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;

  std::uint64_t size() const noexcept { return hi - lo; }
  friend bool operator==(const Chunk&, const Chunk&) = default;
};

// Splits [0, K) into min(L, K) contiguous nonempty chunks. When L does not
// divide K the first K mod L chunks get one extra element.
inline std::vector<Chunk> partition_range(std::uint64_t count,
                                          std::uint64_t workers) {
  std::vector<Chunk> chunks;
  if (count == 0 || workers == 0) return chunks;
  const std::uint64_t parts = std::min(count, workers);
  const std::uint64_t base = count / parts;
  const std::uint64_t extra = count % parts;
  chunks.reserve(parts);
  std::uint64_t lo = 0;
  for (std::uint64_t l = 0; l < parts; ++l) {
    const std::uint64_t hi = lo + base + (l < extra ? 1 : 0);
    chunks.push_back({lo, hi});
    lo = hi;
  }
  return chunks;
}

namespace internal {

inline SphereParams sphere_for(const Problem& problem,
                               const ValidationParams& params) {
  if (!(params.eps > 0.0) || !std::isfinite(params.eps)) {
    throw InvalidArgument("optimality tolerance eps must be positive and finite");
  }
  if (!(params.delta >= 0.0) || !std::isfinite(params.delta)) {
    throw InvalidArgument("feasibility tolerance delta must be >= 0 and finite");
  }
  if (params.workers < 1) throw InvalidArgument("worker count must be >= 1");
  return SphereParams(problem.n(), params.d, params.rho);
}

enum class Outcome { kInfeasible, kHolds, kRefutes };

// Per-thread evaluation state; owns its scratch buffers.
class PointEvaluator {
 public:
  PointEvaluator(const Problem& problem, std::span<const double> candidate,
                 const SphereParams& sphere, const ValidationParams& params)
      : problem_(problem),
        candidate_(candidate),
        sphere_(sphere),
        params_(params),
        base_objective_(dot(problem.objective_coefficients(), candidate)),
        offset_(problem.n()),
        v_(problem.n()) {}

  Outcome classify_offset(std::span<const double> offset) {
    for (std::size_t i = 0; i < v_.size(); ++i) v_[i] = candidate_[i] + offset[i];
    if (!is_feasible_unchecked(problem_, v_, params_.delta)) {
      return Outcome::kInfeasible;
    }
    return gain() > params_.eps ? Outcome::kRefutes : Outcome::kHolds;
  }

  Outcome classify(std::uint64_t k) {
    point_at(k, sphere_, offset_);
    return classify_offset(offset_);
  }

  // Valid after classify(k).
  Witness witness(std::uint64_t k) const { return {k, v_, gain()}; }

 private:
  double gain() const {
    return dot(problem_.objective_coefficients(), v_) - base_objective_;
  }

  const Problem& problem_;
  std::span<const double> candidate_;
  const SphereParams& sphere_;
  const ValidationParams& params_;
  double base_objective_;
  Point offset_;
  Point v_;
};

inline double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
      .count();
}

}  // namespace internal

// Single-point predicate: false iff x~ + offset is feasible and beats the
// candidate's objective by more than eps. Infeasible points never refute.
inline bool check_point(const Problem& problem, std::span<const double> candidate,
                        std::span<const double> offset,
                        const ValidationParams& params) {
  internal::check_dimension(problem, candidate);
  internal::check_dimension(problem, offset);
  const SphereParams sphere = internal::sphere_for(problem, params);
  internal::PointEvaluator eval(problem, candidate, sphere, params);
  return eval.classify_offset(offset) != internal::Outcome::kRefutes;
}

// Feasibility of the candidate itself. Reported next to the verdict, never
// folded into it.
inline bool precheck_candidate(const Problem& problem,
                               std::span<const double> candidate,
                               double delta = 0.0) {
  return is_feasible(problem, candidate, delta);
}

// Scans k = 0..K-1 and stops at the first refuting point.
inline Verdict validate_seq(const Problem& problem,
                            std::span<const double> candidate,
                            const ValidationParams& params) {
  const auto start = std::chrono::steady_clock::now();
  internal::check_dimension(problem, candidate);
  const SphereParams sphere = internal::sphere_for(problem, params);
  const std::uint64_t count = sphere.cardinality();

  internal::PointEvaluator eval(problem, candidate, sphere, params);
  Verdict verdict;
  for (std::uint64_t k = 0; k < count; ++k) {
    ++verdict.points_checked;
    const internal::Outcome outcome = eval.classify(k);
    if (outcome == internal::Outcome::kInfeasible) continue;
    ++verdict.feasible_points;
    if (outcome == internal::Outcome::kRefutes) {
      verdict.correct = false;
      verdict.witness = eval.witness(k);
      break;
    }
  }
  verdict.elapsed = internal::seconds_since(start);
  return verdict;
}

// Data-parallel form. Each worker folds the predicate over its chunk with
// AND and remembers its smallest refuting index; the coordinator ANDs the
// per-worker results and keeps the globally smallest index, so both the
// verdict and the witness are independent of the worker count.
//
// With early_exit, workers publish refuting indices through a shared
// atomic minimum and abandon indices above it. This only shortens the scan.
inline Verdict validate_par(const Problem& problem,
                            std::span<const double> candidate,
                            const ValidationParams& params) {
  const auto start = std::chrono::steady_clock::now();
  internal::check_dimension(problem, candidate);
  const SphereParams sphere = internal::sphere_for(problem, params);
  const std::uint64_t count = sphere.cardinality();
  const std::vector<Chunk> chunks = partition_range(count, params.workers);

  constexpr std::uint64_t kNone = std::numeric_limits<std::uint64_t>::max();
  struct Slot {
    std::uint64_t first_refuting = kNone;
    std::uint64_t checked = 0;
    std::uint64_t feasible = 0;
  };
  std::vector<Slot> slots(chunks.size());
  std::atomic<std::uint64_t> best{kNone};

  auto work = [&](std::size_t l) {
    internal::PointEvaluator eval(problem, candidate, sphere, params);
    Slot& slot = slots[l];
    for (std::uint64_t k = chunks[l].lo; k < chunks[l].hi; ++k) {
      if (params.early_exit && best.load(std::memory_order_relaxed) < k) break;
      ++slot.checked;
      const internal::Outcome outcome = eval.classify(k);
      if (outcome == internal::Outcome::kInfeasible) continue;
      ++slot.feasible;
      if (outcome == internal::Outcome::kRefutes &&
          slot.first_refuting == kNone) {
        slot.first_refuting = k;
        if (params.early_exit) {
          std::uint64_t seen = best.load(std::memory_order_relaxed);
          while (k < seen && !best.compare_exchange_weak(seen, k)) {
          }
          break;
        }
      }
    }
  };

  if (chunks.size() <= 1) {
    if (!chunks.empty()) work(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(chunks.size());
    for (std::size_t l = 0; l < chunks.size(); ++l) pool.emplace_back(work, l);
  }  // jthreads join here

  Verdict verdict;
  std::uint64_t first = kNone;
  for (const Slot& slot : slots) {
    verdict.correct = verdict.correct && slot.first_refuting == kNone;
    first = std::min(first, slot.first_refuting);
    verdict.points_checked += slot.checked;
    verdict.feasible_points += slot.feasible;
  }
  if (!verdict.correct) {
    internal::PointEvaluator eval(problem, candidate, sphere, params);
    eval.classify(first);
    verdict.witness = eval.witness(first);
  }
  verdict.elapsed = internal::seconds_since(start);
  return verdict;
}

inline Verdict validate(const Problem& problem, std::span<const double> candidate,
                        const ValidationParams& params, bool sequential) {
  return sequential ? validate_seq(problem, candidate, params)
                    : validate_par(problem, candidate, params);
}

}  // namespace valipro

#endif  // VALIPRO_VALIDATOR_HPP_
