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

// Shared helpers for the test programs: data paths, random instance
// generators and brute-force references that do not use the library's
// simplex or sign-system code.

#ifndef RILP_TESTS_SUPPORT_HPP
#define RILP_TESTS_SUPPORT_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "rilp/interval.hpp"
#include "rilp/model.hpp"

namespace testing {

using rilp::Index;
using rilp::Matrix;
using rilp::Vector;

inline std::string data_path(const std::string& name) {
  return std::string(RILP_DATA_DIR) + "/" + name;
}

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline int uniform_int(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

// A random interval with hull inside [-range, range].
inline rilp::Interval random_interval(std::mt19937_64& rng, double range) {
  const double a = uniform(rng, -range, range);
  const double b = uniform(rng, -range, range);
  return {std::min(a, b), std::max(a, b)};
}

inline double sample_in(std::mt19937_64& rng, const rilp::Interval& x) {
  if (x.lo() == x.hi()) return x.lo();
  return uniform(rng, x.lo(), x.hi());
}

inline Matrix sample_matrix(std::mt19937_64& rng, const rilp::IntervalMatrix& m) {
  Matrix out(m.rows(), m.cols());
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index j = 0; j < m.cols(); ++j) out(i, j) = sample_in(rng, m(i, j));
  }
  return out;
}

// Smallest objective of min c^T x, A x = b, x >= 0 by enumerating every
// basis (all column subsets of size rank(A)). nullopt when infeasible.
// Unboundedness is not detected; callers keep the feasible set bounded.
inline std::optional<double> brute_force_lp_min(const Vector& c, const Matrix& A,
                                                const Vector& b,
                                                double tol = 1e-9) {
  const Index m = A.rows();
  const Index n = A.cols();
  Eigen::FullPivLU<Matrix> lu(A);
  lu.setThreshold(1e-10);
  const Index r = lu.rank();
  std::optional<double> best;
  std::vector<bool> pick(static_cast<std::size_t>(n), false);
  std::fill(pick.begin(), pick.begin() + r, true);
  do {
    std::vector<Index> cols;
    for (Index j = 0; j < n; ++j) {
      if (pick[static_cast<std::size_t>(j)]) cols.push_back(j);
    }
    Matrix basis(m, r);
    for (Index k = 0; k < r; ++k) basis.col(k) = A.col(cols[static_cast<std::size_t>(k)]);
    Eigen::ColPivHouseholderQR<Matrix> qr(basis);
    if (qr.rank() < r) continue;
    const Vector xb = qr.solve(b);
    if ((basis * xb - b).cwiseAbs().maxCoeff() > tol * (1.0 + b.cwiseAbs().maxCoeff())) continue;
    if (xb.size() > 0 && xb.minCoeff() < -tol) continue;
    double obj = 0.0;
    for (Index k = 0; k < r; ++k) obj += c[cols[static_cast<std::size_t>(k)]] * xb[k];
    if (!best || obj < *best) best = obj;
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return best;
}

struct EqInstance {
  rilp::IntervalLP problem;
  rilp::CandidatePoint candidate;
};

struct EqInstanceShape {
  Index max_n = 6;
  Index max_m = 3;
  Index max_uncertain = 10;
  // Radius scale of the uncertain entries.
  double radius = 0.3;
};

// Random equality-form instance with a candidate. The candidate's support
// has at most m entries; costs are built from a random dual vector so that
// both robust and non-robust candidates occur, and the right-hand side box
// sometimes is too narrow for robust feasibility.
inline EqInstance random_eq_instance(std::mt19937_64& rng,
                                     const EqInstanceShape& shape = {}) {
  const Index n = uniform_int(rng, 2, static_cast<int>(shape.max_n));
  const Index m = uniform_int(rng, 1, static_cast<int>(std::min(shape.max_m, n - 1)));

  Matrix ac(m, n);
  for (Index i = 0; i < m; ++i) {
    for (Index j = 0; j < n; ++j) ac(i, j) = uniform_int(rng, -3, 3);
  }
  std::vector<Index> order(static_cast<std::size_t>(n));
  for (Index j = 0; j < n; ++j) order[static_cast<std::size_t>(j)] = j;
  std::shuffle(order.begin(), order.end(), rng);
  const Index support = uniform_int(rng, 1, static_cast<int>(m));
  Vector x = Vector::Zero(n);
  for (Index k = 0; k < support; ++k) {
    x[order[static_cast<std::size_t>(k)]] = uniform_int(rng, 1, 4);
  }

  Vector u(m);
  for (Index i = 0; i < m; ++i) u[i] = uniform_int(rng, -2, 2);
  Vector cc = ac.transpose() * u;
  for (Index j = 0; j < n; ++j) {
    if (x[j] == 0.0) cc[j] += uniform_int(rng, -1, 3);
  }

  // Uncertain entries among A and c.
  Matrix ar = Matrix::Zero(m, n);
  Vector cr = Vector::Zero(n);
  const Index total = m * n + n;
  const Index k_unc = uniform_int(rng, 0, static_cast<int>(std::min(shape.max_uncertain, total)));
  std::vector<Index> cells(static_cast<std::size_t>(total));
  for (Index j = 0; j < total; ++j) cells[static_cast<std::size_t>(j)] = j;
  std::shuffle(cells.begin(), cells.end(), rng);
  for (Index k = 0; k < k_unc; ++k) {
    const Index cell = cells[static_cast<std::size_t>(k)];
    const double r = shape.radius * uniform_int(rng, 1, 4) / 2.0;
    if (cell < m * n) {
      ar(cell / n, cell % n) = r;
    } else {
      cr[cell - m * n] = r;
    }
  }

  const Vector bc = ac * x;
  Vector br = ar * x;
  for (Index i = 0; i < m; ++i) {
    const int mode = uniform_int(rng, 0, 5);
    if (mode == 0) {
      br[i] *= 0.5;  // usually too narrow
    } else {
      br[i] += uniform_int(rng, 0, 2) * 0.5;
    }
  }

  EqInstance out;
  out.problem = rilp::IntervalLP::equality_form(
      rilp::IntervalMatrix::from_mid_rad(ac, ar),
      rilp::IntervalVector::from_mid_rad(bc, br),
      rilp::IntervalVector::from_mid_rad(cc, cr));
  out.candidate = rilp::CandidatePoint(x);
  return out;
}

// Random general-form instance (x and free y blocks, equations and
// inequalities) with a candidate built in the same spirit as above.
inline EqInstance random_general_instance(std::mt19937_64& rng,
                                          double radius = 0.2) {
  const Index n = uniform_int(rng, 1, 4);
  const Index np = uniform_int(rng, 1, 2);
  const Index m = uniform_int(rng, 1, 2);
  const Index mp = uniform_int(rng, 1, 2);

  auto int_matrix = [&](Index r, Index c) {
    Matrix out(r, c);
    for (Index i = 0; i < r; ++i) {
      for (Index j = 0; j < c; ++j) out(i, j) = uniform_int(rng, -3, 3);
    }
    return out;
  };
  const Matrix A = int_matrix(m, n);
  const Matrix B = int_matrix(m, np);
  const Matrix C = int_matrix(mp, n);
  const Matrix D = int_matrix(mp, np);

  Vector x = Vector::Zero(n);
  for (Index j = 0; j < n; ++j) {
    if (uniform_int(rng, 0, 1) == 1) x[j] = uniform_int(rng, 1, 3);
  }
  Vector y(np);
  for (Index j = 0; j < np; ++j) y[j] = uniform_int(rng, -2, 2);

  Vector u(m);
  for (Index i = 0; i < m; ++i) u[i] = uniform_int(rng, -2, 2);
  Vector v(mp);
  Vector slack(mp);
  for (Index k = 0; k < mp; ++k) {
    const bool active = uniform_int(rng, 0, 2) > 0;
    v[k] = active ? uniform_int(rng, 0, 2) : 0.0;
    slack[k] = active ? 0.0 : uniform_int(rng, 1, 3);
  }
  Vector c = A.transpose() * u - C.transpose() * v;
  for (Index j = 0; j < n; ++j) {
    if (x[j] == 0.0) c[j] += uniform_int(rng, -1, 3);
  }
  const Vector d = B.transpose() * u - D.transpose() * v;

  auto radii = [&](Index r, Index cols) {
    Matrix out = Matrix::Zero(r, cols);
    for (Index i = 0; i < r; ++i) {
      for (Index j = 0; j < cols; ++j) {
        if (uniform_int(rng, 0, 5) == 0) out(i, j) = radius * uniform_int(rng, 1, 3);
      }
    }
    return out;
  };
  const Matrix Ar = radii(m, n);
  const Matrix Br = radii(m, np);
  const Matrix Cr = radii(mp, n);
  const Matrix Dr = radii(mp, np);
  const Vector cr = radii(n, 1).col(0);
  const Vector dr = radii(np, 1).col(0);

  const Vector bc = A * x + B * y;
  const Vector br = Ar * x + Br * y.cwiseAbs() +
                    Vector::Constant(m, 0.5 * uniform_int(rng, 0, 1));
  const Vector row = C * x + D * y;
  const Vector worst = row + Cr * x + Dr * y.cwiseAbs();
  Vector alo(mp), ahi(mp);
  for (Index k = 0; k < mp; ++k) {
    ahi[k] = worst[k] + slack[k];
    alo[k] = ahi[k] - uniform_int(rng, 0, 3);
  }

  EqInstance out;
  rilp::IntervalLP& p = out.problem;
  p.A = rilp::IntervalMatrix::from_mid_rad(A, Ar);
  p.B = rilp::IntervalMatrix::from_mid_rad(B, Br);
  p.C = rilp::IntervalMatrix::from_mid_rad(C, Cr);
  p.D = rilp::IntervalMatrix::from_mid_rad(D, Dr);
  p.b = rilp::IntervalVector::from_mid_rad(bc, br);
  p.a = rilp::IntervalVector(alo, ahi);
  p.c = rilp::IntervalVector::from_mid_rad(c, cr);
  p.d = rilp::IntervalVector::from_mid_rad(d, dr);
  out.candidate = rilp::CandidatePoint(x, y);
  return out;
}

// Zero-radius copy.
inline rilp::IntervalLP point_problem(const Matrix& A, const Vector& b,
                                      const Vector& c) {
  return rilp::IntervalLP::equality_form(rilp::IntervalMatrix(A),
                                         rilp::IntervalVector(b),
                                         rilp::IntervalVector(c));
}

}  // namespace testing

#endif  // RILP_TESTS_SUPPORT_HPP
