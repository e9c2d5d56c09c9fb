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

// Candidate points: optimal solutions of the midpoint objective over the
// robust feasible set, i.e. the points feasible for every realization of the
// constraint matrices.

#ifndef RILP_CANDIDATE_HPP
#define RILP_CANDIDATE_HPP

#include <optional>
#include <string>

#include "rilp/linprog.hpp"
#include "rilp/model.hpp"

namespace rilp {

enum class CandidateStatus { Found, Empty, Unbounded };
std::string to_string(CandidateStatus s);

struct CandidateOutcome {
  CandidateStatus status = CandidateStatus::Empty;
  std::optional<CandidatePoint> point;
  std::optional<double> objective;
  int pivots = 0;
};

// Robust feasible set as a linear system.
//
// Equality form: variables x >= 0 with A^hi x <= b^hi and A^lo x >= b^lo.
// General form: variables (x, y+, y-) >= 0 with y = y+ - y-,
//   A^hi x + B^hi y+ - B^lo y- <= b^hi,
//   A^lo x + B^lo y+ - B^hi y- >= b^lo,
//   C^hi x + D^hi y+ - D^lo y- <= a^hi.
LinearSystem robust_feasible_system(const IntervalLP& p);

// Minimizes the midpoint objective over the robust feasible set. Entries
// with magnitude below `clean_tol` are set to zero.
CandidateOutcome find_candidate(const IntervalLP& p, const LpConfig& cfg = {},
                                double clean_tol = 1e-9);

}  // namespace rilp

#endif  // RILP_CANDIDATE_HPP
