// Copyright 2026 The robust-ilp Authors
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

// Randomized transportation experiments: how often does the midpoint
// candidate pass the sufficient robustness test as edges become uncertain.

#ifndef RILP_BENCH_HPP
#define RILP_BENCH_HPP

#include <cstdint>
#include <iosfwd>
#include <random>
#include <string>
#include <vector>

#include "rilp/model.hpp"

namespace rilp {

struct BenchConfig {
  Index m = 0;
  Index n = 0;
  std::vector<Index> edges;
};

// "5x10:2,4,6;10x15:3,5,7". Throws std::invalid_argument on bad syntax.
std::vector<BenchConfig> parse_dims(const std::string& spec);

struct BenchOptions {
  int trials = 200;
  std::uint64_t seed = 1;
  unsigned threads = 1;
  // When false, timing columns are written as zero so output is
  // reproducible byte for byte.
  bool timing = true;
};

struct BenchRow {
  Index m = 0;
  Index n = 0;
  Index edges = 0;
  double candidate_time_s = 0.0;
  double robust_time_s = 0.0;
  double success_rate_pct = 0.0;
  int trials = 0;
  std::uint64_t seed = 0;
  int candidates_found = 0;
  int verified = 0;
};

// Costs uniform integers in [10, 50]; a tenth of them (rounded) get a 10%
// relative radius. Supplies uniform integers in [50, 300]; demands drawn the
// same way, then rescaled and rounded so that both sides sum up equally.
// Supplies and demands get 10% tolerances and `edges` distinct flows get the
// coefficient [0, 1].
IntervalLP random_transportation(Index m, Index n, Index edges,
                                 std::mt19937_64& rng);

// Stream for one trial, derived from (seed, configuration, trial).
std::mt19937_64 trial_rng(std::uint64_t seed, Index m, Index n, Index edges,
                          int trial);

std::vector<BenchRow> run_table1(const std::vector<BenchConfig>& dims,
                                 const BenchOptions& opts);

void write_csv(std::ostream& os, const std::vector<BenchRow>& rows);

}  // namespace rilp

#endif  // RILP_BENCH_HPP
