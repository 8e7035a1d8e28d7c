// Copyright 2026 The Homotopt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#ifndef HOMOTOPT_BENCH_SUITE_HPP
#define HOMOTOPT_BENCH_SUITE_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "homotopt/tracker.hpp"

namespace homotopt {

/// One sweep of the correctness benchmark.
///
/// k_values is interpreted per suite: symmetric -> k (0 means n-1, -1 means
/// floor((n+1)/2)); ellipse -> number of focal points; geometric -> number of
/// exponential terms (0 means 4n); pnorm ignores it and uses p.
struct BenchConfig {
  std::string suite;
  std::vector<int> n_values;
  std::vector<int> k_values;
  int p = 8;
  int samples = 10;
  std::uint64_t seed = 0;
  int jobs = 1;
  int grid_resolution = 2001;
  TrackerOptions options;
};

struct BenchRow {
  std::string suite;
  int n = 0;
  int k_or_p = 0;
  int sample_index = 0;
  std::uint64_t seed = 0;
  SolveStatus status = SolveStatus::StepUnderflow;
  double final_value = 0.0;
  double kkt_residual = 0.0;
  std::optional<double> oracle_gap;
  int steps = 0;
  double wall_ms = 0.0;
};

inline const std::vector<std::string>& bench_suites() {
  static const std::vector<std::string> s{"symmetric", "ellipse", "pnorm", "geometric"};
  return s;
}

/// Throws std::invalid_argument for unknown suites or empty ranges. Rows come
/// back sorted by (n, k_or_p, sample_index) whatever the job count.
std::vector<BenchRow> run_bench(const BenchConfig& cfg);

/// Seed of one sample, derived from the sweep seed and the row key.
std::uint64_t sample_seed(std::uint64_t seed, const std::string& suite, int n, int k_or_p, int sample_index);

void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows);

/// "A..B", "A" or "a,b,c". Throws std::invalid_argument.
std::vector<int> parse_int_range(const std::string& text);

}  // namespace homotopt

#endif  // HOMOTOPT_BENCH_SUITE_HPP
