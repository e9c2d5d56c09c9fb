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


#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "rilp/enclosure.hpp"
#include "support.hpp"

using namespace rilp;

namespace {

IntervalMatrix diag_dominant(std::mt19937_64& rng, Index n, double rad) {
  Matrix mid(n, n);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) mid(i, j) = testing::uniform(rng, -1.0, 1.0);
    mid(i, i) = (rng() % 2 ? 1.0 : -1.0) * (n + 1.0);
  }
  return IntervalMatrix::from_mid_rad(mid, Matrix::Constant(n, n, rad));
}

}  // namespace

TEST_CASE("point systems are solved exactly") {
  const Matrix A = (Matrix(2, 2) << 2, 1, 1, 3).finished();
  const Vector b = (Vector(2) << 3, 5).finished();
  const Enclosure e = enclose_square(IntervalMatrix(A), IntervalVector(b));
  const Vector x = A.partialPivLu().solve(b);
  CHECK(e.box.contains(x, 1e-12));
  CHECK(e.box.rad().maxCoeff() < 1e-8);
}

TEST_CASE("one-dimensional system") {
  // [2, 4] x = [4, 8] has solution set [1, 4].
  const IntervalMatrix M = {{Interval(2, 4)}};
  const IntervalVector r = {Interval(4, 8)};
  const Enclosure e = enclose_square(M, r);
  CHECK(e.box[0].lo() <= 1.0 + 1e-9);
  CHECK(e.box[0].hi() >= 4.0 - 1e-9);
  CHECK(e.box[0].lo() > -1.0);
  CHECK(e.box[0].hi() < 8.0);
}

TEST_CASE("failures are classified") {
  const IntervalMatrix singular(Matrix::Ones(2, 2));
  try {
    enclose_square(singular, IntervalVector(Vector::Ones(2)));
    FAIL("expected an exception");
  } catch (const EnclosureError& e) {
    CHECK(e.kind() == EnclosureFailure::MidpointSingular);
  }
  // Contains a singular matrix: [-1, 1] x = 1.
  const IntervalMatrix wide = {{Interval(-1, 1.5)}};
  try {
    enclose_square(wide, IntervalVector(Vector::Ones(1)));
    FAIL("expected an exception");
  } catch (const EnclosureError& e) {
    CHECK(e.kind() == EnclosureFailure::NotStronglyRegular);
  }
  CHECK_THROWS_AS(enclose_square(IntervalMatrix(Matrix::Identity(2, 3)),
                                 IntervalVector(Vector::Ones(2))),
                  DimensionMismatch);
}

TEST_CASE("enclosures contain solutions of sampled member systems") {
  std::mt19937_64 rng(41);
  for (int t = 0; t < 100; ++t) {
    const Index n = testing::uniform_int(rng, 1, 5);
    const IntervalMatrix M = diag_dominant(rng, n, 0.2);
    Vector rmid(n);
    for (Index i = 0; i < n; ++i) rmid[i] = testing::uniform(rng, -3.0, 3.0);
    const IntervalVector r = IntervalVector::from_mid_rad(rmid, Vector::Constant(n, 0.1));
    const Enclosure e = enclose_square(M, r);
    for (int s = 0; s < 20; ++s) {
      const Matrix Ms = testing::sample_matrix(rng, M);
      Vector rs(n);
      for (Index i = 0; i < n; ++i) rs[i] = testing::sample_in(rng, r[i]);
      CHECK(e.box.contains(Ms.partialPivLu().solve(rs), 1e-9));
    }
  }
}

TEST_CASE("null space basis is orthonormal and spans the kernel") {
  std::mt19937_64 rng(42);
  for (int t = 0; t < 50; ++t) {
    const Index rows = testing::uniform_int(rng, 1, 4);
    const Index cols = testing::uniform_int(rng, rows, 6);
    const Index rank = testing::uniform_int(rng, 1, static_cast<int>(rows));
    const Matrix M = Matrix::Random(rows, rank) * Matrix::Random(rank, cols);
    const Matrix N = orthonormal_nullspace(M);
    CHECK(N.rows() == cols);
    CHECK(N.cols() == cols - rank);
    if (N.cols() == 0) continue;
    CHECK((M * N).cwiseAbs().maxCoeff() < 1e-9);
    CHECK((N.transpose() * N - Matrix::Identity(N.cols(), N.cols())).cwiseAbs().maxCoeff() <
          1e-9);
  }
}

TEST_CASE("stacked enclosure pins the null-space coordinates") {
  // {u : [1 +- 0.1, 1] u = 2, n^T u = 0} with n spanning ker of the midpoint.
  const IntervalMatrix top = {{Interval(0.9, 1.1), Interval(1)}};
  const IntervalVector r = {Interval(2)};
  const Matrix null = orthonormal_nullspace(top.mid());
  REQUIRE(null.cols() == 1);
  const Vector hat = Vector::Zero(1);
  const Enclosure e = enclose_stacked(top, r, null.transpose(), hat);
  std::mt19937_64 rng(43);
  for (int s = 0; s < 200; ++s) {
    const double a = testing::uniform(rng, 0.9, 1.1);
    Matrix sys(2, 2);
    sys << a, 1, null.transpose();
    const Vector u = sys.partialPivLu().solve((Vector(2) << 2, 0).finished());
    CHECK(e.box.contains(u, 1e-9));
  }
}
