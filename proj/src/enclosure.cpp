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

#include "rilp/enclosure.hpp"

#include <algorithm>
#include <cmath>

namespace rilp {

namespace {

IntervalVector inflate(const IntervalVector& z, const EnclosureConfig& cfg) {
  const Vector c = z.mid();
  const Vector r = z.rad() * cfg.inflation_factor +
                   Vector::Constant(z.size(), cfg.inflation_abs);
  return IntervalVector::from_mid_rad(c, r);
}

bool strictly_inside(const IntervalVector& inner, const IntervalVector& outer) {
  return (outer.lo().array() < inner.lo().array()).all() &&
         (inner.hi().array() < outer.hi().array()).all();
}

IntervalVector intersect(const IntervalVector& a, const IntervalVector& b) {
  return {a.lo().cwiseMax(b.lo()), a.hi().cwiseMin(b.hi())};
}

}  // namespace

Enclosure enclose_square(const IntervalMatrix& m, const IntervalVector& r,
                         const EnclosureConfig& cfg) {
  const Index n = m.rows();
  if (m.cols() != n) throw DimensionMismatch("enclose_square: matrix not square");
  if (r.size() != n) throw DimensionMismatch("enclose_square: rhs size mismatch");
  if (n == 0) return {IntervalVector(0), true, 0};

  const Matrix mc = m.mid();
  Eigen::FullPivLU<Matrix> lu(mc);
  lu.setThreshold(1e-13);
  if (!lu.isInvertible()) {
    throw EnclosureError(EnclosureFailure::MidpointSingular,
                         "midpoint matrix is singular");
  }
  const Matrix precond = lu.inverse();
  if (!precond.allFinite()) {
    throw EnclosureError(EnclosureFailure::MidpointSingular,
                         "midpoint inverse is not finite");
  }

  Vector xt = precond * r.mid();
  xt += precond * (r.mid() - mc * xt);

  // z = R (r - M xt), g = I - R M.
  const IntervalVector z = real_times(precond, r - imatvec(m, xt));
  const IntervalMatrix rm = real_times(precond, m);
  const IntervalMatrix g(Matrix::Identity(n, n) - rm.hi(),
                         Matrix::Identity(n, n) - rm.lo());

  auto krawczyk = [&](const IntervalVector& box) {
    return z + imatmul_iv(g, box);
  };

  const double start = z.lo().cwiseAbs().cwiseMax(z.hi().cwiseAbs()).maxCoeff() *
                           cfg.inflation_factor +
                       cfg.inflation_abs;
  IntervalVector box(Vector::Constant(n, -start), Vector::Constant(n, start));
  bool verified = false;
  for (int step = 0; step < cfg.max_inflation_steps; ++step) {
    const IntervalVector next = krawczyk(box);
    if (strictly_inside(next, box)) {
      box = next;
      verified = true;
      break;
    }
    if (!next.lo().allFinite() || !next.hi().allFinite()) break;
    box = inflate(hull(next, box), cfg);
  }
  if (!verified) {
    throw EnclosureError(EnclosureFailure::NotStronglyRegular,
                         "Krawczyk iteration failed to verify an inclusion");
  }

  Enclosure out;
  for (int it = 0; it < cfg.max_iterations; ++it) {
    ++out.iterations;
    const IntervalVector next = intersect(krawczyk(box), box);
    const double gain = (box.hi() - box.lo()).sum() - (next.hi() - next.lo()).sum();
    box = next;
    if (gain < cfg.min_improvement) {
      out.tight = true;
      break;
    }
  }
  out.box = IntervalVector(xt) + box;
  return out;
}

Matrix orthonormal_nullspace(const Matrix& m) {
  const Index cols = m.cols();
  if (m.rows() == 0 || cols == 0) return Matrix::Identity(cols, cols);
  Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeFullV);
  const Vector& sv = svd.singularValues();
  const double norm = sv.size() > 0 ? sv[0] : 0.0;
  const double tol = 1e-10 * norm;
  Index rank = 0;
  for (Index i = 0; i < sv.size(); ++i) {
    if (sv[i] > tol) ++rank;
  }
  return svd.matrixV().rightCols(cols - rank);
}

Enclosure enclose_stacked(const IntervalMatrix& m_top,
                          const IntervalVector& r_top, const Matrix& m_bot,
                          const Vector& r_bot, const EnclosureConfig& cfg) {
  if (m_bot.rows() != r_bot.size() || r_top.size() != m_top.rows()) {
    throw DimensionMismatch("enclose_stacked: rhs size mismatch");
  }
  if (m_bot.rows() > 0 && m_top.rows() > 0 && m_bot.cols() != m_top.cols()) {
    throw DimensionMismatch("enclose_stacked: column counts differ");
  }
  const IntervalMatrix stacked = m_top.vstack(IntervalMatrix(m_bot));
  const IntervalVector rhs = r_top.concat(IntervalVector(r_bot));
  if (stacked.rows() != stacked.cols()) {
    throw DimensionMismatch("enclose_stacked: stacked system is not square");
  }
  return enclose_square(stacked, rhs, cfg);
}

}  // namespace rilp
