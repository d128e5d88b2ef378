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

#include "cli.hpp"

#include <algorithm>
#include <cstdint>
#include <exception>
#include <fstream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "valipro/valipro.hpp"

namespace valipro::cli {
namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path + "'");
  out << text;
  if (!out) throw Error("write to '" + path + "' failed");
}

std::size_t default_workers() {
  return std::max(1u, std::thread::hardware_concurrency());
}

struct ValidateFlags {
  std::string problem;
  std::string solution;
  ValidationParams params;
  bool sequential = false;
};

struct GridFlags {
  std::size_t n = 0;
  std::uint32_t d = 5;
  double rho = 1.0;
  std::uint64_t limit = 0;
  double tol = 1e-9;
  std::uint64_t cap = kDefaultAuditCap;
};

struct BenchFlags {
  std::string problem;
  std::string solution;
  std::size_t hypercube = 0;
  double side = 10.0;
  std::vector<std::size_t> workers{1, 2, 4, 8};
  std::size_t repeats = 3;
  ValidationParams params;
  std::string out_path;
};

struct GenFlags {
  std::string kind = "hypercube";
  std::size_t n = 3;
  double side = 10.0;
  double cap = 0.0;
  std::string problem_out;
  std::string solution_out;
};

void add_validation_options(CLI::App* cmd, ValidationParams& p) {
  cmd->add_option("--d", p.d, "number of parallels")->capture_default_str();
  cmd->add_option("--rho", p.rho, "sphere radius")->capture_default_str();
  cmd->add_option("--eps", p.eps, "optimality tolerance")->capture_default_str();
  cmd->add_option("--delta", p.delta, "feasibility tolerance")
      ->capture_default_str();
}

void warn_params(const SphereParams& sphere, std::ostream& err) {
  if (auto w = sphere.warning()) err << "warning: " << *w << "\n";
}

int cmd_validate(const ValidateFlags& f, std::ostream& out, std::ostream& err) {
  const Problem problem = read_problem(read_file(f.problem));
  const Point candidate = read_solution(read_file(f.solution), problem.n());
  warn_params(SphereParams(problem.n(), f.params.d, f.params.rho), err);

  const bool candidate_feasible =
      precheck_candidate(problem, candidate, f.params.delta);
  if (!candidate_feasible) {
    err << "warning: candidate violates the constraints (max residual "
        << format_decimal(max_residual(problem, candidate)) << ")\n";
  }
  const Verdict v = validate(problem, candidate, f.params, f.sequential);

  out << (v.correct ? "correct" : "incorrect") << "\n";
  out << "candidate_feasible " << (candidate_feasible ? "yes" : "no") << "\n";
  out << "points_checked " << v.points_checked << "\n";
  out << "feasible_points " << v.feasible_points << "\n";
  if (v.witness) {
    out << "witness_index " << v.witness->k << "\n";
    out << "witness_point " << join_decimals(v.witness->v, ',') << "\n";
    out << "objective_gain " << format_decimal(v.witness->objective_gain) << "\n";
  } else if (v.feasible_points == 0) {
    err << "warning: no validation point is feasible; the verdict is vacuous\n";
  }
  err << "elapsed " << format_decimal(v.elapsed) << " s\n";
  return v.correct ? kExitCorrect : kExitIncorrect;
}

int cmd_points(const GridFlags& f, std::ostream& out, std::ostream& err) {
  const SphereParams sphere(f.n, f.d, f.rho);
  warn_params(sphere, err);
  const std::uint64_t count = sphere.cardinality();
  const std::uint64_t limit = f.limit == 0 ? count : std::min(count, f.limit);
  Point v(f.n);
  for (std::uint64_t k = 0; k < limit; ++k) {
    point_at(k, sphere, v);
    out << join_decimals(v, ',') << "\n";
  }
  return kExitCorrect;
}

int cmd_count(const GridFlags& f, std::ostream& out) {
  out << cardinality(f.n, f.d) << "\n";
  return kExitCorrect;
}

int cmd_audit(const GridFlags& f, std::ostream& out, std::ostream& err) {
  const SphereParams sphere(f.n, f.d, f.rho);
  warn_params(sphere, err);
  const DedupAudit a = dedup_audit(sphere, f.tol, f.cap);
  out << a.total_a << " " << a.duplicates_a << " " << a.unique_a << " "
      << a.count_b << " " << a.lost_unique << "\n";
  return kExitCorrect;
}

int cmd_bench(const BenchFlags& f, std::ostream& out, std::ostream& err) {
  auto load = [&]() -> GeneratedInstance {
    if (f.hypercube > 0) return gen_hypercube(f.hypercube, f.side);
    if (f.problem.empty() || f.solution.empty()) {
      throw InvalidArgument("bench needs --problem and --solution, or --hypercube");
    }
    Problem problem = read_problem(read_file(f.problem));
    Point candidate = read_solution(read_file(f.solution), problem.n());
    return {std::move(problem), std::move(candidate)};
  };
  const auto [problem, candidate] = load();
  warn_params(SphereParams(problem.n(), f.params.d, f.params.rho), err);
  err << "bench: n = " << problem.n() << ", K = "
      << cardinality(problem.n(), f.params.d) << "\n";

  BenchOptions options;
  options.workers = f.workers;
  options.repeats = f.repeats;
  options.params = f.params;
  const BenchResult result = run_bench(problem, candidate, options);
  err << "bench: verdict " << (result.correct ? "correct" : "incorrect")
      << " for every worker count\n";
  const std::string csv = bench_csv(result);
  out << csv;
  if (!f.out_path.empty()) write_file(f.out_path, csv);
  return kExitCorrect;
}

int cmd_gen(const GenFlags& f, std::ostream& out) {
  GeneratorSpec spec;
  spec.n = f.n;
  spec.side = f.side;
  spec.cap = f.cap;
  if (f.kind == "hypercube") {
    spec.kind = InstanceKind::kHypercube;
  } else if (f.kind == "capped-cube") {
    spec.kind = InstanceKind::kCappedCube;
  } else {
    throw InvalidArgument("unknown kind '" + f.kind + "'");
  }
  const GeneratedInstance inst = generate(spec);
  if (f.problem_out.empty()) {
    out << write_problem(inst.problem);
  } else {
    write_file(f.problem_out, write_problem(inst.problem));
  }
  if (f.solution_out.empty()) {
    out << write_solution(inst.optimum);
  } else {
    write_file(f.solution_out, write_solution(inst.optimum));
  }
  return kExitCorrect;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Certifies linear-programming solutions by scanning a regular "
               "point grid on a small hypersphere around the candidate."};
  app.name("valipro");
  app.require_subcommand(1);

  ValidateFlags vf;
  vf.params.workers = default_workers();
  auto* validate_cmd = app.add_subcommand("validate", "certify a candidate optimum");
  validate_cmd->add_option("--problem", vf.problem, "problem file")->required();
  validate_cmd->add_option("--solution", vf.solution, "candidate file")->required();
  add_validation_options(validate_cmd, vf.params);
  validate_cmd->add_option("--workers", vf.params.workers, "worker threads")
      ->capture_default_str();
  validate_cmd->add_flag("--seq", vf.sequential, "use the sequential scan");
  validate_cmd->add_flag("--early-exit", vf.params.early_exit,
                         "stop workers once a refutation is known");

  GridFlags gf;
  auto* points_cmd = app.add_subcommand("points", "print grid points as CSV");
  points_cmd->add_option("--n", gf.n, "dimension")->required();
  points_cmd->add_option("--d", gf.d, "number of parallels")->required();
  points_cmd->add_option("--rho", gf.rho, "sphere radius")->capture_default_str();
  points_cmd->add_option("--limit", gf.limit, "print at most this many points");

  auto* count_cmd = app.add_subcommand("count", "print the grid size K");
  count_cmd->add_option("--n", gf.n, "dimension")->required();
  count_cmd->add_option("--d", gf.d, "number of parallels")->required();

  auto* audit_cmd = app.add_subcommand(
      "audit", "compare the pole-including and pole-free grids");
  audit_cmd->add_option("--n", gf.n, "dimension")->required();
  audit_cmd->add_option("--d", gf.d, "number of parallels")->required();
  audit_cmd->add_option("--rho", gf.rho, "sphere radius")->capture_default_str();
  audit_cmd->add_option("--tol", gf.tol, "duplicate tolerance")->capture_default_str();
  audit_cmd->add_option("--cap", gf.cap, "maximum points to materialize")
      ->capture_default_str();

  BenchFlags bf;
  auto* bench_cmd = app.add_subcommand("bench", "measure parallel speedup");
  bench_cmd->add_option("--problem", bf.problem, "problem file");
  bench_cmd->add_option("--solution", bf.solution, "candidate file");
  bench_cmd->add_option("--hypercube", bf.hypercube,
                        "use the generated hypercube of this dimension");
  bench_cmd->add_option("--side", bf.side, "hypercube side")->capture_default_str();
  bench_cmd->add_option("--workers", bf.workers, "worker counts")
      ->delimiter(',')
      ->capture_default_str();
  bench_cmd->add_option("--repeats", bf.repeats, "timed runs per worker count")
      ->capture_default_str();
  bench_cmd->add_option("--out", bf.out_path, "also write the CSV here");
  add_validation_options(bench_cmd, bf.params);

  GenFlags nf;
  auto* gen_cmd = app.add_subcommand("gen", "write a generated test instance");
  gen_cmd->add_option("--kind", nf.kind, "hypercube | capped-cube")
      ->capture_default_str();
  gen_cmd->add_option("--n", nf.n, "dimension")->required();
  gen_cmd->add_option("--side", nf.side, "cube side")->capture_default_str();
  gen_cmd->add_option("--cap", nf.cap, "right-hand side of sum(x) <= cap");
  gen_cmd->add_option("--problem-out", nf.problem_out, "problem file to write");
  gen_cmd->add_option("--solution-out", nf.solution_out, "solution file to write");

  std::vector<std::string> argv_storage;
  argv_storage.reserve(args.size() + 1);
  argv_storage.push_back("valipro");
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (std::string& a : argv_storage) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitCorrect : kExitError;
  }

  try {
    if (*validate_cmd) return cmd_validate(vf, out, err);
    if (*points_cmd) return cmd_points(gf, out, err);
    if (*count_cmd) return cmd_count(gf, out);
    if (*audit_cmd) return cmd_audit(gf, out, err);
    if (*bench_cmd) return cmd_bench(bf, out, err);
    if (*gen_cmd) return cmd_gen(nf, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}

}  // namespace valipro::cli
