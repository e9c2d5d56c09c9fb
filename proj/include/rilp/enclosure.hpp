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

// Enclosures of solution sets of square interval linear systems.
//
// The solver preconditions with the inverse of the midpoint matrix and runs
// the Krawczyk operator
//
//     K(Z) = R (r - M xt) + (I - R M) Z,      Z = X - xt,
//
// starting from an epsilon-inflated box. Once K(Z) lies in the interior of
// Z every solution of every member system is known to lie in xt + K(Z); the
// box is then contracted by intersection until it stops improving.
//
// Floating point rounding is not controlled, so the box is an enclosure up
// to roundoff.

#ifndef RILP_ENCLOSURE_HPP
#define RILP_ENCLOSURE_HPP

#include <stdexcept>
#include <string>

#include "rilp/interval.hpp"

namespace rilp {

struct Enclosure {
  IntervalVector box;
  // True when contraction converged before the iteration cap.
  bool tight = false;
  int iterations = 0;
};

enum class EnclosureFailure { MidpointSingular, NotStronglyRegular };

class EnclosureError : public std::runtime_error {
 public:
  EnclosureError(EnclosureFailure kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  EnclosureFailure kind() const { return kind_; }

 private:
  EnclosureFailure kind_;
};

struct EnclosureConfig {
  int max_iterations = 50;
  double min_improvement = 1e-12;
  double inflation_factor = 1.1;
  double inflation_abs = 1e-6;
  int max_inflation_steps = 25;
};

Enclosure enclose_square(const IntervalMatrix& m, const IntervalVector& r,
                         const EnclosureConfig& cfg = {});

// Columns form an orthonormal basis of ker(M). Rank is decided by singular
// values above 1e-10 * ||M||_2.
Matrix orthonormal_nullspace(const Matrix& m);

// Encloses {u : M u = r for some M in m_top, r in r_top, and m_bot u = r_bot}.
// The stacked system must be square.
Enclosure enclose_stacked(const IntervalMatrix& m_top,
                          const IntervalVector& r_top, const Matrix& m_bot,
                          const Vector& r_bot, const EnclosureConfig& cfg = {});

}  // namespace rilp

#endif  // RILP_ENCLOSURE_HPP
