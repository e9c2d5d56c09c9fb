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

// Dense two-phase primal simplex on a full tableau.
//
// Systems are given as
//     eq_lhs * x  = eq_rhs
//     ineq_lhs * x <= ineq_rhs
//     x_j >= 0 for every j with nonneg[j]
// Free variables are split into differences of two nonnegative columns and
// every row receives a phase-I artificial, so the final tableau carries the
// basis inverse. That inverse is used to recover dual multipliers on success
// and a Farkas ray on infeasibility, and both are re-checked against the
// original data before a result is returned.

#ifndef RILP_LINPROG_HPP
#define RILP_LINPROG_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rilp/interval.hpp"

namespace rilp {

struct LinearSystem {
  Matrix eq_lhs;
  Vector eq_rhs;
  Matrix ineq_lhs;
  Vector ineq_rhs;
  std::vector<bool> nonneg;

  // Empty system over `num_vars` variables (all free unless `all_nonneg`).
  static LinearSystem over(Index num_vars, bool all_nonneg = false);

  Index num_vars() const { return static_cast<Index>(nonneg.size()); }
  Index num_eq() const { return eq_lhs.rows(); }
  Index num_ineq() const { return ineq_lhs.rows(); }

  // Throws DimensionMismatch when blocks disagree.
  void validate() const;

  void add_eq(const Vector& row, double rhs);
  void add_ineq(const Vector& row, double rhs);
  void add_eq_rows(const Matrix& rows, const Vector& rhs);
  void add_ineq_rows(const Matrix& rows, const Vector& rhs);

  // Largest violation of any constraint at x.
  double max_violation(const Vector& x) const;
};

struct LpConfig {
  double feas_tol = 1e-8;
  double opt_tol = 1e-7;
  double pivot_tol = 1e-10;
  // Dantzig pricing for this many pivots per phase, Bland's rule after.
  int dantzig_pivots = 200;
  // 0 picks a limit from the tableau size.
  int max_pivots = 0;
};

enum class LpStatus { Optimal, Infeasible, Unbounded, Feasible };
enum class Sense { Minimize, Maximize };

std::string to_string(LpStatus status);

// Multipliers (y, z) with z >= 0 such that
//   w = eq_lhs^T y + ineq_lhs^T z
// has w_j >= 0 on nonnegative variables and w_j = 0 on free ones, while
//   eq_rhs^T y + ineq_rhs^T z < 0.
struct FarkasRay {
  Vector eq_mult;
  Vector ineq_mult;
};

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  std::optional<Vector> point;
  std::optional<double> objective;
  std::optional<FarkasRay> farkas;
  // Duals of the minimization form: objective = eq_rhs^T y + ineq_rhs^T z,
  // z <= 0.
  std::optional<Vector> eq_duals;
  std::optional<Vector> ineq_duals;
  // Whether the returned point/ray passed its re-check.
  bool certified = false;
  int pivots = 0;
};

class LpError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Phase I only.
LpResult lp_feasible(const LinearSystem& sys, const LpConfig& cfg = {});

LpResult lp_solve(const Vector& objective, const LinearSystem& sys,
                  Sense sense = Sense::Minimize, const LpConfig& cfg = {});

bool verify_farkas(const LinearSystem& sys, const FarkasRay& ray,
                   double tol = 1e-8);

// Dual feasibility and the duality gap for a minimization optimum.
bool verify_optimal(const Vector& objective, const LinearSystem& sys,
                    const LpResult& result, double tol = 1e-7);

}  // namespace rilp

#endif  // RILP_LINPROG_HPP
