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

#ifndef VALIPRO_BENCH_HPP_
#define VALIPRO_BENCH_HPP_

// Speedup harness for validate_par. Each worker count gets one discarded
// warm-up run and `repeats` timed runs; the median is reported. Only the
// validation loop is timed. Speedup is relative to the one-worker run of
// the parallel path.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "valipro/errors.hpp"
#include "valipro/instance_io.hpp"
#include "valipro/lp_core.hpp"
#include "valipro/validator.hpp"

namespace valipro {

struct BenchRow {
  std::size_t workers = 1;
  double seconds = 0.0;
  double speedup = 1.0;

  friend bool operator==(const BenchRow&, const BenchRow&) = default;
};

struct BenchResult {
  std::vector<BenchRow> rows;
  bool correct = true;
  std::optional<std::uint64_t> witness_k;
};

struct BenchOptions {
  std::vector<std::size_t> workers{1, 2, 4, 8};
  std::size_t repeats = 3;
  ValidationParams params;  // early_exit and workers are overridden
};

inline double median(std::vector<double> values) {
  if (values.empty()) throw InvalidArgument("median of an empty sample");
  std::sort(values.begin(), values.end());
  const std::size_t mid = values.size() / 2;
  return values.size() % 2 == 1 ? values[mid] : 0.5 * (values[mid - 1] + values[mid]);
}

// `progress`, when set, is called after each worker count finishes.
inline BenchResult run_bench(
    const Problem& problem, std::span<const double> candidate,
    const BenchOptions& options,
    const std::function<void(const BenchRow&)>& progress = nullptr) {
  if (options.workers.empty()) throw InvalidArgument("empty worker list");
  if (options.repeats < 1) throw InvalidArgument("repeats must be >= 1");
  for (std::size_t l : options.workers) {
    if (l < 1) throw InvalidArgument("worker counts must be >= 1");
  }

  ValidationParams params = options.params;
  params.early_exit = false;

  std::optional<Verdict> reference;
  auto timed = [&](std::size_t workers) {
    params.workers = workers;
    validate_par(problem, candidate, params);  // warm-up
    std::vector<double> samples;
    for (std::size_t r = 0; r < options.repeats; ++r) {
      const Verdict v = validate_par(problem, candidate, params);
      const auto k = v.witness ? std::optional(v.witness->k) : std::nullopt;
      if (!reference) {
        reference = v;
      } else {
        const auto ref_k = reference->witness
                               ? std::optional(reference->witness->k)
                               : std::nullopt;
        if (v.correct != reference->correct || k != ref_k) {
          throw InvariantBreach("verdict with " + std::to_string(workers) +
                                " workers differs from the first run");
        }
      }
      samples.push_back(std::max(v.elapsed, 1e-9));
    }
    return median(std::move(samples));
  };

  const bool lists_one = std::find(options.workers.begin(), options.workers.end(),
                                   std::size_t{1}) != options.workers.end();
  std::optional<double> baseline;
  if (!lists_one) baseline = timed(1);

  BenchResult result;
  for (std::size_t l : options.workers) {
    BenchRow row;
    row.workers = l;
    row.seconds = timed(l);
    if (l == 1 && !baseline) baseline = row.seconds;
    result.rows.push_back(row);
  }
  for (BenchRow& row : result.rows) {
    row.speedup = row.workers == 1 ? 1.0 : *baseline / row.seconds;
    if (progress) progress(row);
  }
  result.correct = reference->correct;
  if (reference->witness) result.witness_k = reference->witness->k;
  return result;
}

inline std::string bench_csv(const BenchResult& result) {
  std::string out = "workers,seconds,speedup\n";
  for (const BenchRow& row : result.rows) {
    out += std::to_string(row.workers) + "," + format_decimal(row.seconds) + "," +
           format_decimal(row.speedup) + "\n";
  }
  return out;
}

// Inverse of bench_csv (rows only).
inline std::vector<BenchRow> parse_bench_csv(std::string_view text) {
  std::vector<BenchRow> rows;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const std::size_t eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line_no == 1) {
      if (line != "workers,seconds,speedup") {
        throw ParseError("expected header 'workers,seconds,speedup'", 1, 1);
      }
      continue;
    }
    if (line.empty()) continue;
    std::string fields(line);
    for (char& ch : fields) {
      if (ch == ',') ch = ' ';
    }
    internal::Tokenizer tokens(fields);
    internal::Tokenizer::Token token;
    BenchRow row;
    if (!tokens.next(token)) throw ParseError("empty row", line_no, 1);
    row.workers = internal::parse_count(token);
    for (double* field : {&row.seconds, &row.speedup}) {
      if (!tokens.next(token)) throw ParseError("row needs 3 fields", line_no, 1);
      *field = internal::parse_decimal(token);
    }
    if (tokens.next(token)) throw ParseError("row has extra fields", line_no, 1);
    rows.push_back(row);
  }
  if (line_no == 0) throw ParseError("empty CSV", 1, 1);
  return rows;
}

}  // namespace valipro

#endif  // VALIPRO_BENCH_HPP_
