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

#ifndef RILP_INTERVAL_HPP
#define RILP_INTERVAL_HPP

#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <span>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

namespace rilp {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;
using Index = Eigen::Index;

class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Closed real interval [lo, hi]. Stored as a bound pair; midpoint and radius
// are derived.
class Interval {
 public:
  Interval() = default;
  explicit Interval(double value) : lo_(value), hi_(value) {}
  Interval(double lo, double hi);

  static Interval from_mid_rad(double mid, double rad);

  double lo() const { return lo_; }
  double hi() const { return hi_; }
  double mid() const { return 0.5 * (lo_ + hi_); }
  double rad() const { return 0.5 * (hi_ - lo_); }
  double width() const { return hi_ - lo_; }
  double mag() const;
  bool is_point() const { return lo_ == hi_; }
  bool contains(double v) const { return lo_ <= v && v <= hi_; }
  bool contains(const Interval& other) const {
    return lo_ <= other.lo_ && other.hi_ <= hi_;
  }

  friend bool operator==(const Interval&, const Interval&) = default;

 private:
  double lo_ = 0.0;
  double hi_ = 0.0;
};

Interval operator+(const Interval& a, const Interval& b);
Interval operator-(const Interval& a, const Interval& b);
Interval operator-(const Interval& a);
// Four-product rule.
Interval operator*(const Interval& a, const Interval& b);
// Two-endpoint rule.
Interval operator*(double a, const Interval& b);
Interval operator*(const Interval& a, double b);
Interval hull(const Interval& a, const Interval& b);

std::ostream& operator<<(std::ostream& os, const Interval& x);

class IntervalVector {
 public:
  IntervalVector() = default;
  explicit IntervalVector(Index size);
  // Point vector.
  explicit IntervalVector(const Vector& point);
  IntervalVector(Vector lo, Vector hi);
  IntervalVector(std::initializer_list<Interval> entries);

  static IntervalVector from_mid_rad(const Vector& mid, const Vector& rad);

  Index size() const { return lo_.size(); }
  Interval operator[](Index i) const { return {lo_[i], hi_[i]}; }
  void set(Index i, const Interval& v);

  const Vector& lo() const { return lo_; }
  const Vector& hi() const { return hi_; }
  Vector mid() const { return 0.5 * (lo_ + hi_); }
  Vector rad() const { return 0.5 * (hi_ - lo_); }

  IntervalVector select(std::span<const Index> idx) const;
  // Concatenation (this ; other).
  IntervalVector concat(const IntervalVector& other) const;
  bool contains(const Vector& v, double tol = 0.0) const;
  bool contains(const IntervalVector& v) const;

 private:
  Vector lo_;
  Vector hi_;
};

class IntervalMatrix {
 public:
  IntervalMatrix() = default;
  IntervalMatrix(Index rows, Index cols);
  explicit IntervalMatrix(const Matrix& point);
  IntervalMatrix(Matrix lo, Matrix hi);
  IntervalMatrix(std::initializer_list<std::initializer_list<Interval>> rows);

  static IntervalMatrix from_mid_rad(const Matrix& mid, const Matrix& rad);

  Index rows() const { return lo_.rows(); }
  Index cols() const { return lo_.cols(); }
  Interval operator()(Index i, Index j) const { return {lo_(i, j), hi_(i, j)}; }
  void set(Index i, Index j, const Interval& v);

  const Matrix& lo() const { return lo_; }
  const Matrix& hi() const { return hi_; }
  Matrix mid() const { return 0.5 * (lo_ + hi_); }
  Matrix rad() const { return 0.5 * (hi_ - lo_); }

  IntervalMatrix transpose() const;
  IntervalMatrix select_cols(std::span<const Index> idx) const;
  IntervalMatrix select_rows(std::span<const Index> idx) const;
  // [this | other]
  IntervalMatrix hstack(const IntervalMatrix& other) const;
  // [this ; other]
  IntervalMatrix vstack(const IntervalMatrix& other) const;
  IntervalMatrix operator-() const;
  bool contains(const Matrix& m, double tol = 0.0) const;

 private:
  Matrix lo_;
  Matrix hi_;
};

// Entry i of the result is the sign of v_i with sgn(0) = +1.
class SignVector {
 public:
  SignVector() = default;
  explicit SignVector(Index size) : s_(static_cast<std::size_t>(size), 1) {}
  explicit SignVector(std::vector<std::int8_t> entries);

  // Bit j of `bits` set means entry j is -1.
  static SignVector from_bits(std::uint64_t bits, Index size);

  Index size() const { return static_cast<Index>(s_.size()); }
  int operator[](Index i) const { return s_[static_cast<std::size_t>(i)]; }
  void flip(Index i) { s_[static_cast<std::size_t>(i)] *= -1; }
  Vector as_vector() const;
  // diag(s) as a dense matrix.
  Matrix diag() const;

  friend bool operator==(const SignVector&, const SignVector&) = default;

 private:
  std::vector<std::int8_t> s_;
};

inline Matrix mid(const IntervalMatrix& m) { return m.mid(); }
inline Matrix rad(const IntervalMatrix& m) { return m.rad(); }
inline Vector mid(const IntervalVector& v) { return v.mid(); }
inline Vector rad(const IntervalVector& v) { return v.rad(); }

// M * x for a real x. `inflate` widens every result entry outward by
// inflate * (1 + |bound|).
IntervalVector imatvec(const IntervalMatrix& m, const Vector& x,
                       double inflate = 0.0);
// M * v with both operands interval-valued.
IntervalVector imatmul_iv(const IntervalMatrix& m, const IntervalVector& v,
                          double inflate = 0.0);
// R * M for a real R, evaluated in midpoint-radius form.
IntervalMatrix real_times(const Matrix& r, const IntervalMatrix& m);
// R * v for a real R.
IntervalVector real_times(const Matrix& r, const IntervalVector& v);

IntervalVector operator+(const IntervalVector& a, const IntervalVector& b);
IntervalVector operator-(const IntervalVector& a, const IntervalVector& b);
IntervalVector hull(const IntervalVector& a, const IntervalVector& b);

Vector magnitude(const Vector& v);
SignVector sgn(const Vector& v);

}  // namespace rilp

#endif  // RILP_INTERVAL_HPP
