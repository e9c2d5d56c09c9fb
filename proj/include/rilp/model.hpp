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

#ifndef RILP_MODEL_HPP
#define RILP_MODEL_HPP

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rilp/interval.hpp"

namespace rilp {

// min c^T x + d^T y  s.t.  A x + B y = b,  C x + D y <= a,  x >= 0
//
// A, C, c act on the sign-restricted block x (n entries); B, D, d act on the
// free block y (n' entries). A/B own the m equations, C/D the m'
// inequalities. The equality form has n' = m' = 0.
struct IntervalLP {
  IntervalMatrix A;  // m x n
  IntervalMatrix B;  // m x n'
  IntervalMatrix C;  // m' x n
  IntervalMatrix D;  // m' x n'
  IntervalVector b;  // m
  IntervalVector a;  // m'
  IntervalVector c;  // n
  IntervalVector d;  // n'

  // Equality form with empty general-form blocks.
  static IntervalLP equality_form(IntervalMatrix A, IntervalVector b,
                                  IntervalVector c);

  Index m() const { return A.rows(); }
  Index n() const { return A.cols(); }
  Index m_prime() const { return C.rows(); }
  Index n_prime() const { return B.cols(); }
  bool is_equality_form() const { return m_prime() == 0 && n_prime() == 0; }

  // Throws DimensionMismatch on inconsistent block shapes.
  void validate() const;
  // Number of interval entries with positive radius in A, B, C, D, c, d.
  Index uncertain_entries() const;
};

struct CandidatePoint {
  Vector x;  // sign-restricted block
  Vector y;  // free block

  CandidatePoint() = default;
  // Throws std::invalid_argument if x has a negative entry.
  explicit CandidatePoint(Vector x_, Vector y_ = Vector());
};

using IndexSet = std::vector<Index>;

struct ActiveSets {
  IndexSet I;  // x_i == 0
  IndexSet J;  // complement of I
  IndexSet K;  // inequality rows active in every realization
};

inline constexpr double kDefaultZeroTol = 1e-9;

// Checks that the point's blocks fit the problem.
void check_dimensions(const IntervalLP& p, const CandidatePoint& pt);

ActiveSets active_sets(const IntervalLP& p, const CandidatePoint& pt,
                       double zero_tol = kDefaultZeroTol);

// Transportation problem with m suppliers and n customers. Variables are the
// flows x_ij in row-major order (index i * n + j). Rows 0..m-1 are the supply
// balances, rows m..m+n-1 the demand balances. Edges listed in
// `uncertain_edges` get the coefficient [0, 1] in both of their rows.
IntervalLP build_transportation(
    const IntervalMatrix& costs, const IntervalVector& supplies,
    const IntervalVector& demands,
    const std::vector<std::pair<Index, Index>>& uncertain_edges);

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line = 0, std::string field = {})
      : std::runtime_error(what), line_(line), field_(std::move(field)) {}
  int line() const { return line_; }
  const std::string& field() const { return field_; }

 private:
  int line_;
  std::string field_;
};

struct ProblemFile {
  IntervalLP problem;
  std::optional<CandidatePoint> candidate;
};

ProblemFile parse_problem(const std::string& text);
ProblemFile load_problem(const std::filesystem::path& path);
std::string dump_problem(const IntervalLP& p,
                         const std::optional<CandidatePoint>& candidate = {});
void save_problem(const std::filesystem::path& path, const IntervalLP& p,
                  const std::optional<CandidatePoint>& candidate = {});

struct DietOptions {
  // Relative half-width applied to every nutrient content.
  double matrix_rel = 0.05;
  // Relative half-width applied to every daily allowance.
  double rhs_rel = 0.10;
  // Relative half-width applied to the unit prices.
  double cost_rel = 0.0;
};

struct DietData {
  std::vector<std::string> nutrients;
  std::vector<std::string> foods;
  Matrix content;     // nutrients x foods, per dollar spent
  Vector allowance;   // per nutrient
};

DietData load_diet_data(const std::filesystem::path& path);
IntervalLP diet_problem(const DietData& data, const DietOptions& opts = {});
IntervalLP load_diet(const std::filesystem::path& path,
                     const DietOptions& opts = {});

}  // namespace rilp

#endif  // RILP_MODEL_HPP
