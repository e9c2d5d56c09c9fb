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

// Decision procedures for robust optimality of a candidate point.
//
// A point is robust optimal when, for every choice of the objective and of
// the constraint matrices inside their intervals, some right-hand side inside
// its interval makes the point optimal. Feasibility and optimality are tested
// separately:
//
//  * feasibility is a closed-form midpoint/radius inequality;
//  * optimality asks that no improving direction exists for any realization.
//    Fixing the orthant of the free part of the direction linearizes the
//    absolute values, so the exact test solves one LP feasibility problem per
//    sign vector (2^|J| of them, 2^(|J|+n') in general form);
//  * two polynomial sufficient conditions enclose the dual solution set and
//    either prove optimality or give up.

#ifndef RILP_ROBUSTCHECK_HPP
#define RILP_ROBUSTCHECK_HPP

#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rilp/enclosure.hpp"
#include "rilp/linprog.hpp"
#include "rilp/model.hpp"

namespace rilp {

enum class Optimality { Yes, No, Unknown };
std::string to_string(Optimality o);

enum class CertificateKind {
  FeasibilityViolation,
  OptimalityCounterexample,
  DualEnclosure,
};
std::string to_string(CertificateKind k);

// One realization of the interval data.
struct Realization {
  Matrix A, B, C, D;
  Vector b, a, c, d;
};

struct Certificate {
  CertificateKind kind = CertificateKind::OptimalityCounterexample;
  std::optional<SignVector> sign_vector;
  // Counterexample: the solution of the sign system, ordered as (x_I, x_J, y).
  // Feasibility violation: A x* + B y* (and C x* + D y*) at the realization.
  std::optional<Vector> witness;
  // Counterexample direction split into the x and y blocks of the problem.
  std::optional<Vector> direction_x;
  std::optional<Vector> direction_y;
  std::optional<Enclosure> dual_box;
  std::optional<Realization> realization;
  // Feasibility violation: equality rows are 0..m-1, inequality rows follow.
  std::optional<Index> violated_row;
};

struct Verdict {
  bool feasible = false;
  Optimality optimal = Optimality::Unknown;
  std::optional<Certificate> certificate;
  std::uint64_t systems_checked = 0;
  std::chrono::duration<double> elapsed{0.0};
  ActiveSets active;
  std::string method;
};

struct CheckOptions {
  double zero_tol = kDefaultZeroTol;
  double feas_tol = 1e-8;
  std::uint64_t budget = std::uint64_t{1} << 20;
  unsigned threads = 1;
  LpConfig lp;
  EnclosureConfig enclosure;
};

class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(std::uint64_t required_log2, std::uint64_t budget);
  std::uint64_t required_log2() const { return required_log2_; }
  std::uint64_t budget() const { return budget_; }

 private:
  std::uint64_t required_log2_;
  std::uint64_t budget_;
};

class TooLarge : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// |A^c x - b^c| + A^D |x| <= b^D.
bool check_feasibility_eq(const IntervalLP& p, const CandidatePoint& pt,
                          const CheckOptions& opts = {});
// The equation condition with B y added, plus
// C^hi x + D^c y + D^D |y| <= a^hi.
bool check_feasibility_gen(const IntervalLP& p, const CandidatePoint& pt,
                           const CheckOptions& opts = {});
// A realization for which no admissible right-hand side fits, if any.
std::optional<Certificate> feasibility_violation(const IntervalLP& p,
                                                 const CandidatePoint& pt,
                                                 const CheckOptions& opts = {});

// Sign system for the active sets: variables (x_I >= 0, free (x_J, y)),
// all rows are inequalities.
LinearSystem optimality_system(const IntervalLP& p, const ActiveSets& active,
                               const SignVector& s);

struct CriterionResult {
  bool holds = true;
  std::uint64_t systems_checked = 0;
  std::optional<Certificate> counterexample;
};

// Runs every sign system for the given active sets (Gray-code order).
// Throws BudgetExceeded when 2^(|J|+n') exceeds opts.budget.
CriterionResult optimality_criterion(const IntervalLP& p,
                                     const ActiveSets& active,
                                     const CheckOptions& opts = {});

Verdict check_optimality_exact(const IntervalLP& p, const CandidatePoint& pt,
                               const CheckOptions& opts = {});

// Both return a verdict whose optimality is Yes or Unknown.
Verdict sufficient_nondegenerate(const IntervalLP& p, const CandidatePoint& pt,
                                 const CheckOptions& opts = {});
Verdict sufficient_degenerate(const IntervalLP& p, const CandidatePoint& pt,
                              const CheckOptions& opts = {});
// The two steps of the degenerate test, exposed for inspection. The center
// (u*, v*) maximizes the smallest midpoint dual slack; the test encloses the
// dual solutions pinned to the center along the null space of the midpoint
// equations and returns the enclosure when the reduced costs stay
// nonnegative for every realization.
std::optional<Vector> dual_center(const IntervalLP& p, const ActiveSets& act,
                                  const CheckOptions& opts = {});
std::optional<Enclosure> dual_enclosure_test(const IntervalLP& p,
                                             const ActiveSets& act,
                                             const Vector& center,
                                             const CheckOptions& opts = {});
// Nondegenerate test where it applies, otherwise the degenerate recipe.
Verdict sufficient_condition(const IntervalLP& p, const CandidatePoint& pt,
                             const CheckOptions& opts = {});

enum class CheckMode { Exact, Sufficient, Auto };
std::optional<CheckMode> parse_mode(const std::string& text);

// Sufficient conditions first; on Unknown, exact enumeration when it fits in
// the budget.
Verdict check_robust(const IntervalLP& p, const CandidatePoint& pt,
                     CheckMode mode, const CheckOptions& opts = {});

struct RobustComponent {
  IndexSet zero_set;
  LinearSystem polyhedron;
  Vector point;
  Vector lower;
  Vector upper;
  bool singleton = false;
};

// Equality form only. Returns, for every inclusion-minimal index set I that
// satisfies the optimality criterion, the polyhedron {x in F : x_I = 0} when
// it is nonempty. Throws TooLarge when n > max_n.
std::vector<RobustComponent> enumerate_robust_components(
    const IntervalLP& p, Index max_n = 12, const CheckOptions& opts = {});

}  // namespace rilp

#endif  // RILP_ROBUSTCHECK_HPP
