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

// Brute-force reference for robust optimality on small instances.
//
// Every uncertain entry of A, B, C, D, c, d is set to its endpoints (and
// optionally to interior grid points); for each resulting realization the
// right-hand sides are chosen as favorably as possible and optimality of x*
// is decided by a single LP. The sweep is exact for feasibility. For
// optimality it inspects finitely many realizations only, so it can miss a
// counterexample that lives strictly inside the boxes.

#ifndef RILP_ORACLE_HPP
#define RILP_ORACLE_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>

#include "rilp/linprog.hpp"
#include "rilp/model.hpp"
#include "rilp/robustcheck.hpp"

namespace rilp {

class TooManyUncertainEntries : public std::runtime_error {
 public:
  TooManyUncertainEntries(Index count, Index limit);
  Index count() const { return count_; }

 private:
  Index count_;
};

struct OracleOptions {
  // Interior points per uncertain entry besides the two endpoints.
  int grid = 0;
  Index max_uncertain = 16;
  double zero_tol = kDefaultZeroTol;
  double feas_tol = 1e-8;
  unsigned threads = 1;
  LpConfig lp;
};

struct OracleResult {
  bool feasible = true;
  bool optimal = true;
  std::uint64_t realizations = 0;
  // Lowest-numbered realization that breaks feasibility or optimality.
  std::optional<std::uint64_t> failing_index;
  std::optional<Realization> failing;
};

// Number of realizations the sweep visits; throws when too many entries are
// uncertain.
std::uint64_t oracle_realization_count(const IntervalLP& p,
                                       const OracleOptions& opts = {});

// The realization with the given index (mixed radix over uncertain entries).
Realization oracle_realization(const IntervalLP& p, std::uint64_t index,
                               const OracleOptions& opts = {});

// Whether x* is optimal for the realization with some admissible b and a.
bool realization_feasible(const IntervalLP& p, const Realization& r,
                          const CandidatePoint& pt, double feas_tol = 1e-8);
bool realization_optimal(const IntervalLP& p, const Realization& r,
                         const CandidatePoint& pt,
                         const OracleOptions& opts = {});

OracleResult oracle_robust_feasible(const IntervalLP& p,
                                    const CandidatePoint& pt,
                                    const OracleOptions& opts = {});
OracleResult oracle_robust_optimal(const IntervalLP& p,
                                   const CandidatePoint& pt,
                                   const OracleOptions& opts = {});

}  // namespace rilp

#endif  // RILP_ORACLE_HPP
