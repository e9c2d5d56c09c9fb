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

#include "rilp/candidate.hpp"

#include <cmath>

namespace rilp {

std::string to_string(CandidateStatus s) {
  switch (s) {
    case CandidateStatus::Found: return "found";
    case CandidateStatus::Empty: return "empty";
    case CandidateStatus::Unbounded: return "unbounded";
  }
  return "?";
}

LinearSystem robust_feasible_system(const IntervalLP& p) {
  p.validate();
  const Index n = p.n();
  const Index k = p.n_prime();
  LinearSystem sys = LinearSystem::over(n + 2 * k, true);

  Matrix upper(p.m(), n + 2 * k);
  upper << p.A.hi(), p.B.hi(), -p.B.lo();
  Matrix lower(p.m(), n + 2 * k);
  lower << p.A.lo(), p.B.lo(), -p.B.hi();
  sys.add_ineq_rows(upper, p.b.hi());
  sys.add_ineq_rows(-lower, -p.b.lo());

  if (p.m_prime() > 0) {
    Matrix ineq(p.m_prime(), n + 2 * k);
    ineq << p.C.hi(), p.D.hi(), -p.D.lo();
    sys.add_ineq_rows(ineq, p.a.hi());
  }
  return sys;
}

CandidateOutcome find_candidate(const IntervalLP& p, const LpConfig& cfg,
                                double clean_tol) {
  const LinearSystem sys = robust_feasible_system(p);
  const Index n = p.n();
  const Index k = p.n_prime();
  Vector obj(n + 2 * k);
  obj << p.c.mid(), p.d.mid(), -p.d.mid();

  const LpResult res = lp_solve(obj, sys, Sense::Minimize, cfg);
  CandidateOutcome out;
  out.pivots = res.pivots;
  if (res.status == LpStatus::Infeasible) return out;
  if (res.status == LpStatus::Unbounded) {
    out.status = CandidateStatus::Unbounded;
    return out;
  }

  Vector z = *res.point;
  for (Index i = 0; i < z.size(); ++i) {
    if (std::abs(z[i]) < clean_tol) z[i] = 0.0;
  }
  Vector x = z.head(n).cwiseMax(0.0);
  Vector y = z.segment(n, k) - z.tail(k);
  for (Index i = 0; i < k; ++i) {
    if (std::abs(y[i]) < clean_tol) y[i] = 0.0;
  }
  out.status = CandidateStatus::Found;
  out.objective = p.c.mid().dot(x) + p.d.mid().dot(y);
  out.point = CandidatePoint(std::move(x), std::move(y));
  return out;
}

}  // namespace rilp
