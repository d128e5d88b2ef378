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

// Acceptance suite. Runs every exit criterion at its pinned tolerance and
// time limit and prints one PASS/FAIL line per criterion.
//
//   acceptance_test          run all criteria
//   acceptance_test 3 5      run only criteria 3 and 5
//
// Exit status is 0 only if every selected criterion passes.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <iostream>
#include <limits>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <thread>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "valipro/valipro.hpp"

namespace {

using namespace valipro;
using valipro::testing::naive_feasible;
using valipro::testing::naive_validate;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [failed: " << what << "]";
    }
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// ---------------------------------------------------------------------------

void criterion_audit(Outcome& o) {
  const auto t0 = std::chrono::steady_clock::now();
  const DedupAudit a = dedup_audit(SphereParams(4, 5, 1.0), 1e-9);
  const double elapsed = seconds_since(t0);
  o.detail << "audit(n=4,d=5,rho=1,tol=1e-9) = " << a.total_a << " " << a.duplicates_a
           << " " << a.unique_a << " " << a.count_b << " " << a.lost_unique
           << ", expected 360 189 171 160 11; " << elapsed << " s";
  o.require(a.total_a == 360, "total(1a) == 360");
  o.require(a.duplicates_a == 189, "duplicates == 189");
  o.require(a.unique_a == 171, "unique == 171");
  o.require(a.count_b == 160, "count(1b) == 160");
  o.require(a.lost_unique == 11, "lost == 11");
  o.require(static_cast<double>(a.lost_unique) / a.unique_a < 0.07, "lost/unique < 7%");
  o.require(elapsed < 1.0, "runtime < 1 s");
}

void criterion_cardinality(Outcome& o) {
  const auto t0 = std::chrono::steady_clock::now();
  int checked = 0;
  for (std::size_t n = 3; n <= 8; ++n) {
    for (std::uint32_t d : {3u, 5u, 7u, 9u}) {
      std::uint64_t formula = 2 * d;
      for (std::size_t i = 0; i + 2 < n; ++i) formula *= d - 1;
      std::uint64_t streamed = 0;
      enumerate_dedup(SphereParams(n, d, 1.0),
                      [&](std::span<const double>) { ++streamed; });
      o.require(cardinality(n, d) == formula && streamed == formula,
                "K(n=" + std::to_string(n) + ",d=" + std::to_string(d) + ")");
      ++checked;
    }
  }
  for (std::size_t n = 3; n <= 5; ++n) {
    for (std::uint32_t d : {3u, 5u}) {
      std::uint64_t formula = 2 * d;
      for (std::size_t i = 0; i + 2 < n; ++i) formula *= d + 1;
      std::uint64_t streamed = 0;
      enumerate_with_duplicates(SphereParams(n, d, 1.0),
                                [&](std::span<const double>) { ++streamed; });
      o.require(cardinality_with_duplicates(n, d) == formula && streamed == formula,
                "K_dup(n=" + std::to_string(n) + ",d=" + std::to_string(d) + ")");
      ++checked;
    }
  }
  const double elapsed = seconds_since(t0);
  o.detail << checked << " (n,d) pairs counted against streams; " << elapsed << " s";
  o.require(elapsed < 10.0, "runtime < 10 s");
}

void criterion_indexing(Outcome& o) {
  const auto t0 = std::chrono::steady_clock::now();
  std::uint64_t compared = 0;
  for (std::size_t n : {3u, 4u, 5u}) {
    for (std::uint32_t d : {3u, 5u, 7u}) {
      const SphereParams params(n, d, 1.0);
      std::uint64_t k = 0;
      bool identical = true;
      Point indexed(n);
      enumerate_dedup(params, [&](std::span<const double> v) {
        point_at(k++, params, indexed);
        identical = identical &&
                    std::memcmp(v.data(), indexed.data(), n * sizeof(double)) == 0;
      });
      compared += k;
      o.require(identical && k == params.cardinality(),
                "bitwise n=" + std::to_string(n) + " d=" + std::to_string(d));
    }
  }
  const double elapsed = seconds_since(t0);
  o.detail << compared << " points compared bitwise; " << elapsed << " s";
  o.require(elapsed < 10.0, "runtime < 10 s");
}

void criterion_sphere(Outcome& o) {
  const auto t0 = std::chrono::steady_clock::now();
  std::mt19937_64 rng(2026);
  std::uniform_int_distribution<std::size_t> dim(3, 20);
  std::uniform_int_distribution<std::uint32_t> par(3, 15);
  std::uniform_real_distribution<double> log_rho(-4.0, 4.0);
  double worst = 0.0;
  int samples = 0;
  while (samples < 100000) {
    const std::size_t n = dim(rng);
    const std::uint32_t d = par(rng);
    const double rho = std::pow(10.0, log_rho(rng));
    std::optional<SphereParams> params;
    try {
      params.emplace(n, d, rho);
      params->cardinality();
    } catch (const OverflowError&) {
      continue;
    }
    std::uniform_int_distribution<std::uint64_t> pick(0, params->cardinality() - 1);
    const Point v = point_at(pick(rng), *params);
    double sq = 0.0;
    for (double x : v) sq += x * x;
    worst = std::max(worst, std::abs(std::sqrt(sq) - rho) / std::max(1.0, rho));
    ++samples;
  }
  const double elapsed = seconds_since(t0);
  o.detail << samples << " samples, worst |norm - rho| / max(1, rho) = " << worst
           << "; " << elapsed << " s";
  o.require(worst <= 1e-12, "norm within 1e-12 * max(1, rho)");
  o.require(elapsed < 5.0, "runtime < 5 s");
}

struct Instance {
  std::string name;
  Problem problem;
  Point candidate;
  bool expect_correct;
};

// Known optima pass; the same optima shifted by one unit along -c fail.
std::vector<Instance> known_optimum_instances() {
  std::vector<Instance> out;
  for (std::size_t n = 3; n <= 6; ++n) {
    const double side = 10.0;
    const auto cube = gen_hypercube(n, side);
    const auto capped = gen_capped_cube(n, side, 5.0 * n);
    for (const auto* inst : {&cube, &capped}) {
      const std::string kind = inst == &cube ? "hypercube" : "capped-cube";
      const auto c = inst->problem.objective_coefficients();
      Point shifted = inst->optimum;
      for (std::size_t i = 0; i < n; ++i) shifted[i] -= c[i];
      out.push_back({kind + " n=" + std::to_string(n) + " optimum", inst->problem,
                     inst->optimum, true});
      out.push_back({kind + " n=" + std::to_string(n) + " shifted", inst->problem,
                     shifted, false});
    }
  }
  return out;
}

ValidationParams default_params() {
  ValidationParams p;
  p.d = 5;
  p.rho = 1.0;
  p.eps = 1e-6;
  return p;
}

void criterion_verdicts(Outcome& o) {
  const auto t0 = std::chrono::steady_clock::now();
  int count = 0;
  for (const Instance& inst : known_optimum_instances()) {
    const Verdict v = validate_seq(inst.problem, inst.candidate, default_params());
    const auto oracle = naive_validate(inst.problem, inst.candidate, 5, 1.0, 1e-6);
    o.require(v.correct == inst.expect_correct, inst.name + " expected verdict");
    o.require(v.correct == !oracle.first_refuting.has_value(),
              inst.name + " matches naive oracle");
    if (v.witness) {
      o.require(oracle.first_refuting == v.witness->k, inst.name + " witness index");
      const std::vector<double> w = v.witness->v;
      o.require(naive_feasible(inst.problem, w, 0.0) &&
                    is_feasible(inst.problem, w, 0.0),
                inst.name + " witness feasible");
      o.require(objective(inst.problem, w) >
                    objective(inst.problem, inst.candidate) + 1e-6,
                inst.name + " witness improves by > eps");
    }
    ++count;
  }
  const double elapsed = seconds_since(t0);
  o.detail << count << " instances (n=3..6, hypercube and capped-cube); " << elapsed
           << " s";
  o.require(elapsed < 30.0, "runtime < 30 s");
}

void criterion_parallel(Outcome& o) {
  const auto t0 = std::chrono::steady_clock::now();
  int runs = 0;
  int indivisible = 0;
  for (const Instance& inst : known_optimum_instances()) {
    const Verdict seq = validate_seq(inst.problem, inst.candidate, default_params());
    const std::uint64_t count = cardinality(inst.problem.n(), 5);
    for (std::size_t workers : {1u, 2u, 3u, 4u, 7u, 8u, 16u}) {
      for (bool early : {false, true}) {
        ValidationParams p = default_params();
        p.workers = workers;
        p.early_exit = early;
        const Verdict par = validate_par(inst.problem, inst.candidate, p);
        const auto wk = [](const Verdict& v) {
          return v.witness ? std::optional(v.witness->k) : std::nullopt;
        };
        o.require(par.correct == seq.correct && wk(par) == wk(seq),
                  inst.name + " L=" + std::to_string(workers));
        ++runs;
        if (count % workers != 0) ++indivisible;
      }
    }
  }
  const double elapsed = seconds_since(t0);
  o.detail << runs << " parallel runs (" << indivisible
           << " with K not divisible by L) agree with the sequential scan; "
           << elapsed << " s";
  o.require(indivisible > 0, "covers K mod L != 0");
  o.require(elapsed < 60.0, "runtime < 60 s");
}

void criterion_epsilon(Outcome& o) {
  // Tie: eps set to the exact best gain over the feasible grid points.
  const auto cube = gen_hypercube(3, 10);
  const Point x{9, 9, 9};
  const auto points = collect_dedup(SphereParams(3, 5, 1.0));
  const double base = objective(cube.problem, x);
  double best_gain = -std::numeric_limits<double>::infinity();
  for (const Point& off : points) {
    std::vector<double> v{x[0] + off[0], x[1] + off[1], x[2] + off[2]};
    if (naive_feasible(cube.problem, v, 0.0)) {
      best_gain = std::max(best_gain, objective(cube.problem, v) - base);
    }
  }
  ValidationParams p = default_params();
  p.eps = best_gain;
  const Verdict at_tie = validate_seq(cube.problem, x, p);
  p.workers = 4;
  const Verdict at_tie_par = validate_par(cube.problem, x, p);
  p.eps = std::nextafter(best_gain, 0.0);
  const Verdict below = validate_seq(cube.problem, x, p);
  o.detail << "best gain " << format_decimal(best_gain) << ": eps = gain -> "
           << (at_tie.correct ? "correct" : "incorrect") << ", eps one ulp below -> "
           << (below.correct ? "correct" : "incorrect");
  o.require(at_tie.correct && at_tie_par.correct, "tie passes");
  o.require(!below.correct, "one ulp below the tie refutes");

  int monotone_checks = 0;
  for (const Instance& inst : known_optimum_instances()) {
    bool was_correct = false;
    for (double eps : {1e-9, 1e-6, 1e-3}) {
      ValidationParams q = default_params();
      q.eps = eps;
      const bool correct = validate_seq(inst.problem, inst.candidate, q).correct;
      o.require(!was_correct || correct, inst.name + " eps-monotone");
      was_correct = correct;
      ++monotone_checks;
    }
  }
  o.detail << "; " << monotone_checks << " eps-monotonicity checks";
}

void criterion_scalability(Outcome& o) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto cube = gen_hypercube(12, 10);
  BenchOptions options;
  options.workers = {1, 2, 4, 8};
  options.repeats = 3;
  options.params = default_params();
  BenchResult result;
  try {
    result = run_bench(cube.problem, cube.optimum, options);
  } catch (const InvariantBreach& e) {
    o.require(false, std::string("verdict invariance: ") + e.what());
    return;
  }
  const std::string csv = bench_csv(result);
  const auto rows = parse_bench_csv(csv);
  const double elapsed = seconds_since(t0);
  o.require(cardinality(12, 5) == 10'485'760, "K = 10,485,760");
  o.require(rows == result.rows && rows.size() == 4, "CSV well-formed");
  o.require(!rows.empty() && rows[0].workers == 1 && rows[0].speedup == 1.0,
            "speedup(1) == 1.0");
  o.require(result.correct, "vertex certified");
  o.detail << "K=10485760, hardware threads " << std::thread::hardware_concurrency()
           << ", speedups:";
  for (const BenchRow& r : rows) {
    o.detail << " L=" << r.workers << ":" << r.speedup << " (" << r.seconds << " s)";
  }
  o.detail << "; total " << elapsed << " s";
  o.require(elapsed < 300.0, "runtime < 5 min");
}

void criterion_overflow(Outcome& o) {
  const std::uint64_t k = cardinality(19, 5);
  bool threw = false;
  try {
    cardinality(40, 9);
  } catch (const OverflowError&) {
    threw = true;
  }
  o.detail << "count(19,5) = " << k << ", count(40,9) "
           << (threw ? "raises OverflowError" : "did not raise");
  o.require(k == 171'798'691'840ull, "count(19,5)");
  o.require(threw, "count(40,9) overflows");
}

struct Criterion {
  int id;
  const char* title;
  std::function<void(Outcome&)> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria{
      {1, "duplicate audit n=4 d=5", criterion_audit},
      {2, "cardinality vs streams", criterion_cardinality},
      {3, "indexing oracle (bitwise)", criterion_indexing},
      {4, "points lie on the sphere", criterion_sphere},
      {5, "verdicts vs brute force", criterion_verdicts},
      {6, "parallel determinism", criterion_parallel},
      {7, "epsilon tie and monotonicity", criterion_epsilon},
      {8, "scalability bench (desk scale)", criterion_scalability},
      {9, "overflow guard", criterion_overflow},
  };
  std::set<int> selected;
  for (int i = 1; i < argc; ++i) selected.insert(std::atoi(argv[i]));

  int failures = 0;
  for (const Criterion& c : criteria) {
    if (!selected.empty() && !selected.count(c.id)) continue;
    Outcome o;
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << " [exception: " << e.what() << "]";
    }
    std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << c.id << " ("
              << c.title << "): " << o.detail.str() << std::endl;
    if (!o.pass) ++failures;
  }
  return failures == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
