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

#include "rilp/interval.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

namespace rilp {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw DimensionMismatch(what);
}

void check_bounds(const Matrix& lo, const Matrix& hi) {
  require(lo.rows() == hi.rows() && lo.cols() == hi.cols(),
          "interval matrix: bound shapes differ");
  for (Index j = 0; j < lo.cols(); ++j) {
    for (Index i = 0; i < lo.rows(); ++i) {
      if (!(lo(i, j) <= hi(i, j))) {
        std::ostringstream msg;
        msg << "interval entry (" << i << ", " << j << ") has lo > hi: ["
            << lo(i, j) << ", " << hi(i, j) << "]";
        throw std::invalid_argument(msg.str());
      }
    }
  }
}

double widen_lo(double v, double inflate) {
  return inflate > 0.0 ? v - inflate * (1.0 + std::abs(v)) : v;
}

double widen_hi(double v, double inflate) {
  return inflate > 0.0 ? v + inflate * (1.0 + std::abs(v)) : v;
}

}  // namespace

Interval::Interval(double lo, double hi) : lo_(lo), hi_(hi) {
  if (!(lo <= hi)) {
    std::ostringstream msg;
    msg << "interval with lo > hi: [" << lo << ", " << hi << "]";
    throw std::invalid_argument(msg.str());
  }
}

Interval Interval::from_mid_rad(double mid, double rad) {
  return {mid - rad, mid + rad};
}

double Interval::mag() const { return std::max(std::abs(lo_), std::abs(hi_)); }

Interval operator+(const Interval& a, const Interval& b) {
  return {a.lo() + b.lo(), a.hi() + b.hi()};
}

Interval operator-(const Interval& a, const Interval& b) {
  return {a.lo() - b.hi(), a.hi() - b.lo()};
}

Interval operator-(const Interval& a) { return {-a.hi(), -a.lo()}; }

Interval operator*(const Interval& a, const Interval& b) {
  const double p1 = a.lo() * b.lo();
  const double p2 = a.lo() * b.hi();
  const double p3 = a.hi() * b.lo();
  const double p4 = a.hi() * b.hi();
  return {std::min({p1, p2, p3, p4}), std::max({p1, p2, p3, p4})};
}

Interval operator*(double a, const Interval& b) {
  const double p1 = a * b.lo();
  const double p2 = a * b.hi();
  return {std::min(p1, p2), std::max(p1, p2)};
}

Interval operator*(const Interval& a, double b) { return b * a; }

Interval hull(const Interval& a, const Interval& b) {
  return {std::min(a.lo(), b.lo()), std::max(a.hi(), b.hi())};
}

std::ostream& operator<<(std::ostream& os, const Interval& x) {
  return os << '[' << x.lo() << ", " << x.hi() << ']';
}

// ---------------------------------------------------------------------------

IntervalVector::IntervalVector(Index size)
    : lo_(Vector::Zero(size)), hi_(Vector::Zero(size)) {}

IntervalVector::IntervalVector(const Vector& point) : lo_(point), hi_(point) {}

IntervalVector::IntervalVector(Vector lo, Vector hi)
    : lo_(std::move(lo)), hi_(std::move(hi)) {
  check_bounds(lo_, hi_);
}

IntervalVector::IntervalVector(std::initializer_list<Interval> entries)
    : lo_(static_cast<Index>(entries.size())),
      hi_(static_cast<Index>(entries.size())) {
  Index i = 0;
  for (const Interval& e : entries) {
    lo_[i] = e.lo();
    hi_[i] = e.hi();
    ++i;
  }
}

IntervalVector IntervalVector::from_mid_rad(const Vector& mid,
                                            const Vector& rad) {
  require(mid.size() == rad.size(), "from_mid_rad: size mismatch");
  return {mid - rad, mid + rad};
}

void IntervalVector::set(Index i, const Interval& v) {
  lo_[i] = v.lo();
  hi_[i] = v.hi();
}

IntervalVector IntervalVector::select(std::span<const Index> idx) const {
  Vector lo(static_cast<Index>(idx.size()));
  Vector hi(static_cast<Index>(idx.size()));
  for (std::size_t k = 0; k < idx.size(); ++k) {
    lo[static_cast<Index>(k)] = lo_[idx[k]];
    hi[static_cast<Index>(k)] = hi_[idx[k]];
  }
  IntervalVector out;
  out.lo_ = std::move(lo);
  out.hi_ = std::move(hi);
  return out;
}

IntervalVector IntervalVector::concat(const IntervalVector& other) const {
  IntervalVector out(size() + other.size());
  out.lo_ << lo_, other.lo_;
  out.hi_ << hi_, other.hi_;
  return out;
}

bool IntervalVector::contains(const Vector& v, double tol) const {
  if (v.size() != size()) return false;
  for (Index i = 0; i < size(); ++i) {
    if (v[i] < lo_[i] - tol || v[i] > hi_[i] + tol) return false;
  }
  return true;
}

bool IntervalVector::contains(const IntervalVector& v) const {
  if (v.size() != size()) return false;
  return (lo_.array() <= v.lo_.array()).all() &&
         (v.hi_.array() <= hi_.array()).all();
}

// ---------------------------------------------------------------------------

IntervalMatrix::IntervalMatrix(Index rows, Index cols)
    : lo_(Matrix::Zero(rows, cols)), hi_(Matrix::Zero(rows, cols)) {}

IntervalMatrix::IntervalMatrix(const Matrix& point) : lo_(point), hi_(point) {}

IntervalMatrix::IntervalMatrix(Matrix lo, Matrix hi)
    : lo_(std::move(lo)), hi_(std::move(hi)) {
  check_bounds(lo_, hi_);
}

IntervalMatrix::IntervalMatrix(
    std::initializer_list<std::initializer_list<Interval>> rows) {
  const auto r = static_cast<Index>(rows.size());
  const auto c = r == 0 ? Index{0} : static_cast<Index>(rows.begin()->size());
  lo_.resize(r, c);
  hi_.resize(r, c);
  Index i = 0;
  for (const auto& row : rows) {
    require(static_cast<Index>(row.size()) == c, "ragged interval matrix");
    Index j = 0;
    for (const Interval& e : row) {
      lo_(i, j) = e.lo();
      hi_(i, j) = e.hi();
      ++j;
    }
    ++i;
  }
}

IntervalMatrix IntervalMatrix::from_mid_rad(const Matrix& mid,
                                            const Matrix& rad) {
  require(mid.rows() == rad.rows() && mid.cols() == rad.cols(),
          "from_mid_rad: shape mismatch");
  return {mid - rad, mid + rad};
}

void IntervalMatrix::set(Index i, Index j, const Interval& v) {
  lo_(i, j) = v.lo();
  hi_(i, j) = v.hi();
}

IntervalMatrix IntervalMatrix::transpose() const {
  IntervalMatrix out;
  out.lo_ = lo_.transpose();
  out.hi_ = hi_.transpose();
  return out;
}

IntervalMatrix IntervalMatrix::select_cols(std::span<const Index> idx) const {
  IntervalMatrix out(rows(), static_cast<Index>(idx.size()));
  for (std::size_t k = 0; k < idx.size(); ++k) {
    out.lo_.col(static_cast<Index>(k)) = lo_.col(idx[k]);
    out.hi_.col(static_cast<Index>(k)) = hi_.col(idx[k]);
  }
  return out;
}

IntervalMatrix IntervalMatrix::select_rows(std::span<const Index> idx) const {
  IntervalMatrix out(static_cast<Index>(idx.size()), cols());
  for (std::size_t k = 0; k < idx.size(); ++k) {
    out.lo_.row(static_cast<Index>(k)) = lo_.row(idx[k]);
    out.hi_.row(static_cast<Index>(k)) = hi_.row(idx[k]);
  }
  return out;
}

IntervalMatrix IntervalMatrix::hstack(const IntervalMatrix& other) const {
  if (cols() == 0) {
    require(other.rows() == rows() || rows() == 0,
            "hstack: row counts differ");
    return other;
  }
  if (other.cols() == 0) {
    require(other.rows() == rows() || other.rows() == 0,
            "hstack: row counts differ");
    return *this;
  }
  require(rows() == other.rows(), "hstack: row counts differ");
  IntervalMatrix out(rows(), cols() + other.cols());
  out.lo_ << lo_, other.lo_;
  out.hi_ << hi_, other.hi_;
  return out;
}

IntervalMatrix IntervalMatrix::vstack(const IntervalMatrix& other) const {
  if (rows() == 0) {
    require(other.cols() == cols() || cols() == 0,
            "vstack: column counts differ");
    return other;
  }
  if (other.rows() == 0) {
    require(other.cols() == cols() || other.cols() == 0,
            "vstack: column counts differ");
    return *this;
  }
  require(cols() == other.cols(), "vstack: column counts differ");
  IntervalMatrix out(rows() + other.rows(), cols());
  out.lo_ << lo_, other.lo_;
  out.hi_ << hi_, other.hi_;
  return out;
}

IntervalMatrix IntervalMatrix::operator-() const {
  IntervalMatrix out;
  out.lo_ = -hi_;
  out.hi_ = -lo_;
  return out;
}

bool IntervalMatrix::contains(const Matrix& m, double tol) const {
  if (m.rows() != rows() || m.cols() != cols()) return false;
  return ((lo_.array() - tol) <= m.array()).all() &&
         (m.array() <= (hi_.array() + tol)).all();
}

// ---------------------------------------------------------------------------

SignVector::SignVector(std::vector<std::int8_t> entries)
    : s_(std::move(entries)) {
  for (auto e : s_) {
    if (e != 1 && e != -1) {
      throw std::invalid_argument("sign vector entries must be +1 or -1");
    }
  }
}

SignVector SignVector::from_bits(std::uint64_t bits, Index size) {
  SignVector s(size);
  for (Index j = 0; j < size; ++j) {
    if ((bits >> j) & 1U) s.s_[static_cast<std::size_t>(j)] = -1;
  }
  return s;
}

Vector SignVector::as_vector() const {
  Vector v(size());
  for (Index i = 0; i < size(); ++i) v[i] = (*this)[i];
  return v;
}

Matrix SignVector::diag() const { return as_vector().asDiagonal(); }

// ---------------------------------------------------------------------------

IntervalVector imatvec(const IntervalMatrix& m, const Vector& x,
                       double inflate) {
  require(m.cols() == x.size(), "imatvec: dimension mismatch");
  Vector lo = Vector::Zero(m.rows());
  Vector hi = Vector::Zero(m.rows());
  for (Index j = 0; j < m.cols(); ++j) {
    const double xj = x[j];
    for (Index i = 0; i < m.rows(); ++i) {
      const double p1 = m.lo()(i, j) * xj;
      const double p2 = m.hi()(i, j) * xj;
      lo[i] += std::min(p1, p2);
      hi[i] += std::max(p1, p2);
    }
  }
  for (Index i = 0; i < lo.size(); ++i) {
    lo[i] = widen_lo(lo[i], inflate);
    hi[i] = widen_hi(hi[i], inflate);
  }
  return {std::move(lo), std::move(hi)};
}

IntervalVector imatmul_iv(const IntervalMatrix& m, const IntervalVector& v,
                          double inflate) {
  require(m.cols() == v.size(), "imatmul_iv: dimension mismatch");
  Vector lo = Vector::Zero(m.rows());
  Vector hi = Vector::Zero(m.rows());
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index j = 0; j < m.cols(); ++j) {
      const Interval p = m(i, j) * v[j];
      lo[i] += p.lo();
      hi[i] += p.hi();
    }
    lo[i] = widen_lo(lo[i], inflate);
    hi[i] = widen_hi(hi[i], inflate);
  }
  return {std::move(lo), std::move(hi)};
}

IntervalMatrix real_times(const Matrix& r, const IntervalMatrix& m) {
  require(r.cols() == m.rows(), "real_times: dimension mismatch");
  const Matrix c = r * m.mid();
  const Matrix d = r.cwiseAbs() * m.rad();
  return {c - d, c + d};
}

IntervalVector real_times(const Matrix& r, const IntervalVector& v) {
  require(r.cols() == v.size(), "real_times: dimension mismatch");
  const Vector c = r * v.mid();
  const Vector d = r.cwiseAbs() * v.rad();
  return {c - d, c + d};
}

IntervalVector operator+(const IntervalVector& a, const IntervalVector& b) {
  require(a.size() == b.size(), "interval vector sum: size mismatch");
  return {a.lo() + b.lo(), a.hi() + b.hi()};
}

IntervalVector operator-(const IntervalVector& a, const IntervalVector& b) {
  require(a.size() == b.size(), "interval vector difference: size mismatch");
  return {a.lo() - b.hi(), a.hi() - b.lo()};
}

IntervalVector hull(const IntervalVector& a, const IntervalVector& b) {
  require(a.size() == b.size(), "interval vector hull: size mismatch");
  return {a.lo().cwiseMin(b.lo()), a.hi().cwiseMax(b.hi())};
}

Vector magnitude(const Vector& v) { return v.cwiseAbs(); }

SignVector sgn(const Vector& v) {
  std::vector<std::int8_t> s(static_cast<std::size_t>(v.size()));
  for (Index i = 0; i < v.size(); ++i) {
    s[static_cast<std::size_t>(i)] = v[i] >= 0.0 ? 1 : -1;
  }
  return SignVector(std::move(s));
}

}  // namespace rilp
