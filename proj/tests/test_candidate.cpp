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

#include "rilp/candidate.hpp"
#include "rilp/robustcheck.hpp"
#include "support.hpp"

using namespace rilp;

TEST_CASE("transportation example candidate") {
  const IntervalLP p = load_problem(testing::data_path("transportation.json")).problem;
  const CandidateOutcome out = find_candidate(p);
  REQUIRE(out.status == CandidateStatus::Found);
  CHECK(*out.objective == doctest::Approx(5040.0));
  CHECK(check_feasibility_eq(p, *out.point));
  CHECK(check_optimality_exact(p, *out.point).optimal == Optimality::Yes);
}

TEST_CASE("diet candidate zero pattern") {
  const IntervalLP p = load_diet(testing::data_path("diet_stigler.json"));
  const CandidateOutcome out = find_candidate(p);
  REQUIRE(out.status == CandidateStatus::Found);
  IndexSet zeros;
  for (Index i = 0; i < out.point->x.size(); ++i) {
    if (out.point->x[i] == 0.0) zeros.push_back(i);
  }
  CHECK(zeros == IndexSet{3, 4, 8, 9, 10, 12, 13, 15, 16, 17, 18, 19});
}

TEST_CASE("zero radii give the classical optimum") {
  std::mt19937_64 rng(71);
  for (int t = 0; t < 100; ++t) {
    const Index n = testing::uniform_int(rng, 2, 5);
    Matrix A(2, n);
    A.row(0).setOnes();
    for (Index j = 0; j < n; ++j) A(1, j) = testing::uniform_int(rng, -2, 2);
    const Vector b = A * Vector::Ones(n);
    Vector c(n);
    for (Index j = 0; j < n; ++j) c[j] = testing::uniform_int(rng, -4, 4);
    const CandidateOutcome out = find_candidate(testing::point_problem(A, b, c));
    REQUIRE(out.status == CandidateStatus::Found);
    const auto ref = testing::brute_force_lp_min(c, A, b);
    REQUIRE(ref);
    CHECK(*out.objective == doctest::Approx(*ref).epsilon(1e-8));
  }
}

TEST_CASE("empty and unbounded") {
  // x1 + x2 in [-2, -1] has no nonnegative solution.
  const IntervalLP empty = IntervalLP::equality_form(
      IntervalMatrix(Matrix::Ones(1, 2)), IntervalVector{Interval(-2, -1)},
      IntervalVector(Vector::Ones(2)));
  CHECK(find_candidate(empty).status == CandidateStatus::Empty);
  CHECK_FALSE(find_candidate(empty).point);

  // x1 - x2 = 0 with cost -1 on both: the ray (1, 1) is improving.
  const IntervalLP ray = testing::point_problem((Matrix(1, 2) << 1, -1).finished(),
                                                Vector::Zero(1), -Vector::Ones(2));
  CHECK(find_candidate(ray).status == CandidateStatus::Unbounded);
}

TEST_CASE("candidates are robust feasible and dominate robust feasible points") {
  std::mt19937_64 rng(72);
  int found = 0;
  for (int t = 0; t < 300; ++t) {
    const auto inst = (t % 2) ? testing::random_general_instance(rng)
                              : testing::random_eq_instance(rng);
    const IntervalLP& p = inst.problem;
    const CandidateOutcome out = find_candidate(p);
    const bool given_ok = check_feasibility_gen(p, inst.candidate);
    if (given_ok) CHECK(out.status != CandidateStatus::Empty);
    if (out.status != CandidateStatus::Found) continue;
    ++found;
    CHECK(check_feasibility_gen(p, *out.point));
    if (given_ok) {
      const double mine = p.c.mid().dot(out.point->x) + p.d.mid().dot(out.point->y);
      const double theirs = p.c.mid().dot(inst.candidate.x) + p.d.mid().dot(inst.candidate.y);
      CHECK(mine <= theirs + 1e-7 * (1.0 + std::abs(theirs)));
    }
  }
  CHECK(found > 100);
}

TEST_CASE("robust feasible points admit the positive/negative split") {
  std::mt19937_64 rng(73);
  for (int t = 0; t < 200; ++t) {
    const auto inst = testing::random_general_instance(rng);
    const IntervalLP& p = inst.problem;
    const LinearSystem sys = robust_feasible_system(p);
    const Vector& x = inst.candidate.x;
    const Vector& y = inst.candidate.y;
    Vector z(x.size() + 2 * y.size());
    z << x, y.cwiseMax(0.0), (-y).cwiseMax(0.0);
    const bool split_ok = sys.max_violation(z) <= 1e-8;
    CHECK(split_ok == check_feasibility_gen(p, inst.candidate));
  }
}

TEST_CASE("equality form needs no split variables") {
  std::mt19937_64 rng(74);
  const auto inst = testing::random_eq_instance(rng);
  CHECK(robust_feasible_system(inst.problem).num_vars() == inst.problem.n());
}
