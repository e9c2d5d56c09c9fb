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

#include <algorithm>
#include <random>

#include "rilp/linprog.hpp"
#include "rilp/oracle.hpp"
#include "rilp/robustcheck.hpp"
#include "support.hpp"

using namespace rilp;

namespace {

// Triangle example: x1 + x2 + x3 = 1, x1 - x2 in [-1, 1], c = (1, 1, [0.5, 1.5]).
IntervalLP triangle() { return load_problem(testing::data_path("disconnected.json")).problem; }

IntervalLP transportation() { return load_problem(testing::data_path("transportation.json")).problem; }

bool parallel(const Vector& got, const Vector& want) {
  const double scale = got.dot(want) / want.squaredNorm();
  return scale > 0 && (got - scale * want).cwiseAbs().maxCoeff() <= 1e-7 * (1 + scale);
}

// Counterexample witnesses solve their own sign system.
void check_witness(const IntervalLP& p, const Verdict& v) {
  REQUIRE(v.certificate);
  const Certificate& cert = *v.certificate;
  REQUIRE(cert.kind == CertificateKind::OptimalityCounterexample);
  REQUIRE(cert.sign_vector);
  REQUIRE(cert.witness);
  const LinearSystem sys = optimality_system(p, v.active, *cert.sign_vector);
  CHECK(sys.max_violation(*cert.witness) <= 1e-7);
}

}  // namespace

TEST_CASE("triangle example: feasibility") {
  const IntervalLP p = triangle();
  CHECK(check_feasibility_eq(p, CandidatePoint((Vector(3) << 1, 0, 0).finished())));
  CHECK(check_feasibility_eq(p, CandidatePoint((Vector(3) << 0, 0, 1).finished())));
  // x1 - x2 = 2 is outside [-1, 1].
  const CandidatePoint off((Vector(3) << 2, 0, 0).finished());
  CHECK_FALSE(check_feasibility_eq(p, off));
  const auto cert = feasibility_violation(p, off);
  REQUIRE(cert);
  CHECK(cert->kind == CertificateKind::FeasibilityViolation);
}

TEST_CASE("triangle example: exact optimality") {
  const IntervalLP p = triangle();
  for (const Vector& x : {(Vector(3) << 1, 0, 0).finished(), (Vector(3) << 0, 1, 0).finished()}) {
    const Verdict v = check_optimality_exact(p, CandidatePoint(x));
    CHECK(v.feasible);
    CHECK(v.optimal == Optimality::Yes);
    CHECK(v.method == "exact");
  }

  const Verdict top = check_optimality_exact(p, CandidatePoint((Vector(3) << 0, 0, 1).finished()));
  REQUIRE(top.optimal == Optimality::No);
  check_witness(p, top);
  const Certificate& cert = *top.certificate;
  REQUIRE(cert.direction_x);
  CHECK(parallel(*cert.direction_x, (Vector(3) << 1, 1, -2).finished()));
  REQUIRE(cert.realization);
  CHECK(cert.realization->c[2] == doctest::Approx(1.5));

  const Verdict edge =
      check_optimality_exact(p, CandidatePoint((Vector(3) << 0.5, 0.5, 0).finished()));
  REQUIRE(edge.optimal == Optimality::No);
  check_witness(p, edge);
  CHECK(edge.certificate->realization->c[2] == doctest::Approx(0.5));
}

TEST_CASE("triangle example: components are two points") {
  const auto comps = enumerate_robust_components(triangle());
  REQUIRE(comps.size() == 2);
  std::vector<Vector> points;
  for (const auto& c : comps) {
    CHECK(c.singleton);
    points.push_back(c.point);
  }
  std::sort(points.begin(), points.end(), [](const Vector& a, const Vector& b) { return a[0] < b[0]; });
  CHECK((points[0] - (Vector(3) << 0, 1, 0).finished()).norm() < 1e-9);
  CHECK((points[1] - (Vector(3) << 1, 0, 0).finished()).norm() < 1e-9);
  CHECK_THROWS_AS(enumerate_robust_components(triangle(), 2), TooLarge);
}

TEST_CASE("transportation example") {
  const IntervalLP p = transportation();
  const CandidatePoint midpoint_opt((Vector(9) << 0, 0, 100, 150, 10, 0, 0, 200, 50).finished());
  const Verdict mv = check_optimality_exact(p, midpoint_opt);
  CHECK(mv.feasible);
  CHECK(mv.optimal == Optimality::No);
  check_witness(p, mv);

  const CandidatePoint printed((Vector(9) << 0, 0, 99, 144, 0, 0, 0, 189, 36).finished());
  const Verdict v = check_optimality_exact(p, printed);
  CHECK(v.optimal == Optimality::Yes);
  CHECK(v.systems_checked == 16);

  CheckOptions small;
  small.budget = 8;
  CHECK_THROWS_AS(check_optimality_exact(p, printed, small), BudgetExceeded);
  // Auto mode keeps the sufficient verdict instead of failing.
  const Verdict a = check_robust(p, printed, CheckMode::Auto, small);
  CHECK(a.optimal != Optimality::No);
}

TEST_CASE("infeasible candidates are refuted before optimality") {
  const Verdict v = check_optimality_exact(triangle(), CandidatePoint((Vector(3) << 2, 0, 0).finished()));
  CHECK_FALSE(v.feasible);
  CHECK(v.optimal == Optimality::No);
  REQUIRE(v.certificate);
  CHECK(v.certificate->kind == CertificateKind::FeasibilityViolation);
  CHECK(v.systems_checked == 0);
}

TEST_CASE("general feasibility reduces to the equality test") {
  std::mt19937_64 rng(61);
  for (int t = 0; t < 500; ++t) {
    const auto inst = testing::random_eq_instance(rng);
    CHECK(check_feasibility_gen(inst.problem, inst.candidate) ==
          check_feasibility_eq(inst.problem, inst.candidate));
  }
}

TEST_CASE("inequality-only toy problem") {
  IntervalLP p;
  p.A = IntervalMatrix(Matrix::Zero(0, 2));
  p.B = IntervalMatrix(Matrix::Zero(0, 0));
  p.C = IntervalMatrix((Matrix(1, 2) << 1, 1).finished());
  p.D = IntervalMatrix(Matrix::Zero(1, 0));
  p.b = IntervalVector(Vector::Zero(0));
  p.a = IntervalVector{Interval(0, 2)};
  p.c = IntervalVector(Vector::Ones(2));
  p.d = IntervalVector(Vector::Zero(0));
  CHECK(check_feasibility_gen(p, CandidatePoint((Vector(2) << 1, 0).finished())));
  CHECK_FALSE(check_feasibility_gen(p, CandidatePoint((Vector(2) << 2, 1).finished())));
}

TEST_CASE("general feasibility agrees with vertex enumeration") {
  std::mt19937_64 rng(62);
  int infeasible = 0;
  for (int t = 0; t < 300; ++t) {
    auto inst = testing::random_general_instance(rng);
    if (t % 2 == 1) {
      // Push the candidate off the generated feasible point.
      Vector x = inst.candidate.x;
      x[0] += 1.0;
      inst.candidate = CandidatePoint(x, inst.candidate.y);
    }
    const bool got = check_feasibility_gen(inst.problem, inst.candidate);
    CHECK(got == oracle_robust_feasible(inst.problem, inst.candidate).feasible);
    if (!got) {
      ++infeasible;
      CHECK(feasibility_violation(inst.problem, inst.candidate));
    }
  }
  CHECK(infeasible > 0);
}

TEST_CASE("counterexamples re-verify and do not depend on the thread count") {
  std::mt19937_64 rng(63);
  int refuted = 0;
  for (int t = 0; t < 300; ++t) {
    const auto inst = (t % 3 == 0) ? testing::random_general_instance(rng)
                                   : testing::random_eq_instance(rng);
    const Verdict one = check_optimality_exact(inst.problem, inst.candidate);
    CheckOptions many;
    many.threads = 4;
    const Verdict four = check_optimality_exact(inst.problem, inst.candidate, many);
    CHECK(one.optimal == four.optimal);
    CHECK(one.systems_checked == four.systems_checked);
    if (!one.feasible || one.optimal != Optimality::No) continue;
    ++refuted;
    check_witness(inst.problem, one);
    CHECK(*one.certificate->sign_vector == *four.certificate->sign_vector);
    // In general form the refuting realization may leave an inequality row
    // active that the criterion treats as inactive, so only equality-form
    // refutations are replayed against a single realization.
    if (!inst.problem.is_equality_form()) continue;
    const Realization& r = *one.certificate->realization;
    CHECK(inst.problem.A.contains(r.A, 1e-9));
    CHECK(inst.problem.c.contains(r.c, 1e-9));
    CHECK(realization_feasible(inst.problem, r, inst.candidate));
    CHECK_FALSE(realization_optimal(inst.problem, r, inst.candidate));
  }
  CHECK(refuted > 20);
}

TEST_CASE("criterion is monotone in the zero set") {
  std::mt19937_64 rng(64);
  int tested = 0;
  for (int t = 0; t < 300; ++t) {
    const auto inst = testing::random_eq_instance(rng);
    const ActiveSets act = active_sets(inst.problem, inst.candidate);
    if (act.J.empty() || !optimality_criterion(inst.problem, act).holds) continue;
    ActiveSets bigger = act;
    std::shuffle(bigger.J.begin(), bigger.J.end(), rng);
    const auto moved = static_cast<std::size_t>(testing::uniform_int(rng, 1, static_cast<int>(act.J.size())));
    bigger.I.insert(bigger.I.end(), bigger.J.begin(), bigger.J.begin() + static_cast<long>(moved));
    bigger.J.erase(bigger.J.begin(), bigger.J.begin() + static_cast<long>(moved));
    std::sort(bigger.I.begin(), bigger.I.end());
    std::sort(bigger.J.begin(), bigger.J.end());
    CHECK(optimality_criterion(inst.problem, bigger).holds);
    ++tested;
  }
  CHECK(tested > 20);
}

TEST_CASE("sufficient conditions imply the exact verdict") {
  std::mt19937_64 rng(65);
  int yes = 0, nondegenerate = 0;
  for (int t = 0; t < 3000 && yes < 200; ++t) {
    const auto inst = (t % 3 == 0) ? testing::random_general_instance(rng)
                                   : testing::random_eq_instance(rng);
    const Verdict nd = sufficient_nondegenerate(inst.problem, inst.candidate);
    const Verdict dg = sufficient_degenerate(inst.problem, inst.candidate);
    if (!nd.feasible) continue;
    CHECK(nd.optimal != Optimality::No);
    CHECK(dg.optimal != Optimality::No);
    if (nd.optimal == Optimality::Yes) {
      ++nondegenerate;
      CHECK(dg.optimal == Optimality::Yes);
    }
    const Verdict s = sufficient_condition(inst.problem, inst.candidate);
    if (s.optimal != Optimality::Yes) continue;
    ++yes;
    REQUIRE(s.certificate);
    CHECK(s.certificate->kind == CertificateKind::DualEnclosure);
    CHECK(check_optimality_exact(inst.problem, inst.candidate).optimal == Optimality::Yes);
  }
  CHECK(yes == 200);
  CHECK(nondegenerate > 10);
}

TEST_CASE("midpoint dual infeasibility gives Unknown") {
  // min x1 + 2 x2 s.t. x1 + x2 = 1: x = (0, 1) is not even midpoint optimal.
  const IntervalLP p = testing::point_problem(Matrix::Ones(1, 2), Vector::Ones(1),
                                              (Vector(2) << 1, 2).finished());
  const CandidatePoint pt((Vector(2) << 0, 1).finished());
  CHECK_FALSE(dual_center(p, active_sets(p, pt)));
  CHECK(sufficient_degenerate(p, pt).optimal == Optimality::Unknown);
  CHECK(check_optimality_exact(p, pt).optimal == Optimality::No);
}

TEST_CASE("zero radii reduce to classical optimality") {
  std::mt19937_64 rng(66);
  int optimal = 0;
  for (int t = 0; t < 200; ++t) {
    testing::EqInstanceShape shape;
    shape.max_uncertain = 0;
    const auto inst = testing::random_eq_instance(rng, shape);
    const IntervalLP& p = inst.problem;
    if (!check_feasibility_eq(p, inst.candidate)) continue;
    // Bound the feasible set so that basis enumeration sees every optimum.
    const Matrix A = p.A.mid();
    const Vector c = p.c.mid();
    const Vector& x = inst.candidate.x;
    const LinearSystem sys = [&] {
      LinearSystem s = LinearSystem::over(A.cols(), true);
      s.add_eq_rows(A, p.b.mid());
      return s;
    }();
    const LpResult lp = lp_solve(c, sys);
    const bool classical = lp.status == LpStatus::Optimal && c.dot(x) <= *lp.objective + 1e-7;
    const Verdict v = check_optimality_exact(p, inst.candidate);
    CHECK((v.optimal == Optimality::Yes) == classical);
    const Verdict s = sufficient_condition(p, inst.candidate);
    if (s.optimal == Optimality::Yes) CHECK(classical);
    optimal += classical;
  }
  CHECK(optimal > 20);
}
