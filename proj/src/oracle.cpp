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

#include "rilp/oracle.hpp"

#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "rilp/parallel.hpp"

namespace rilp {

namespace {

enum class Block { A, B, C, D, c, d };

struct Entry {
  Block block;
  Index row;
  Index col;
  double lo;
  double hi;
};

std::vector<Entry> uncertain_entries_of(const IntervalLP& p) {
  std::vector<Entry> out;
  auto scan = [&](Block blk, const IntervalMatrix& M) {
    for (Index j = 0; j < M.cols(); ++j) {
      for (Index i = 0; i < M.rows(); ++i) {
        if (M.hi()(i, j) > M.lo()(i, j)) {
          out.push_back({blk, i, j, M.lo()(i, j), M.hi()(i, j)});
        }
      }
    }
  };
  auto scan_vec = [&](Block blk, const IntervalVector& v) {
    for (Index i = 0; i < v.size(); ++i) {
      if (v.hi()[i] > v.lo()[i]) out.push_back({blk, i, 0, v.lo()[i], v.hi()[i]});
    }
  };
  scan(Block::A, p.A);
  scan(Block::B, p.B);
  scan(Block::C, p.C);
  scan(Block::D, p.D);
  scan_vec(Block::c, p.c);
  scan_vec(Block::d, p.d);
  return out;
}

std::string too_many_message(Index count, Index limit) {
  std::ostringstream os;
  os << count << " uncertain entries exceed the oracle limit of " << limit;
  return os.str();
}

class Sweep {
 public:
  Sweep(const IntervalLP& p, const OracleOptions& opts)
      : entries_(uncertain_entries_of(p)), base_(2 + opts.grid) {
    if (opts.grid < 0) throw std::invalid_argument("oracle grid must be >= 0");
    const auto k = static_cast<Index>(entries_.size());
    if (k > opts.max_uncertain) throw TooManyUncertainEntries(k, opts.max_uncertain);
    count_ = 1;
    for (Index i = 0; i < k; ++i) {
      if (count_ > (std::uint64_t{1} << 62) / base_) {
        throw TooManyUncertainEntries(k, opts.max_uncertain);
      }
      count_ *= base_;
    }
    base_realization_ = {p.A.lo(), p.B.lo(), p.C.lo(), p.D.lo(),
                         p.b.mid(), p.a.mid(), p.c.lo(), p.d.lo()};
  }

  std::uint64_t count() const { return count_; }

  Realization at(std::uint64_t index) const {
    Realization r = base_realization_;
    for (const Entry& e : entries_) {
      const auto digit = static_cast<double>(index % base_);
      index /= base_;
      const double v = e.lo + (e.hi - e.lo) * digit / static_cast<double>(base_ - 1);
      switch (e.block) {
        case Block::A: r.A(e.row, e.col) = v; break;
        case Block::B: r.B(e.row, e.col) = v; break;
        case Block::C: r.C(e.row, e.col) = v; break;
        case Block::D: r.D(e.row, e.col) = v; break;
        case Block::c: r.c[e.row] = v; break;
        case Block::d: r.d[e.row] = v; break;
      }
    }
    return r;
  }

 private:
  std::vector<Entry> entries_;
  std::uint64_t base_;
  std::uint64_t count_ = 1;
  Realization base_realization_;
};

Vector equation_values(const IntervalLP& p, const Realization& r,
                       const CandidatePoint& pt) {
  Vector v = r.A * pt.x;
  if (p.n_prime() > 0) v += r.B * pt.y;
  return v;
}

Vector inequality_values(const IntervalLP& p, const Realization& r,
                         const CandidatePoint& pt) {
  Vector v = r.C * pt.x;
  if (p.n_prime() > 0) v += r.D * pt.y;
  return v;
}

template <class Accept>
OracleResult sweep_until(const IntervalLP& p, const OracleOptions& opts,
                         Accept fails) {
  const Sweep sweep(p, opts);
  OracleResult out;
  out.realizations = sweep.count();
  auto make_worker = [&] {
    return [&](std::uint64_t k) { return fails(sweep.at(k)); };
  };
  const auto found = parallel_find_first(sweep.count(),
                                         resolve_threads(opts.threads),
                                         make_worker, 8);
  if (found) {
    out.failing_index = *found;
    out.failing = sweep.at(*found);
  }
  return out;
}

}  // namespace

TooManyUncertainEntries::TooManyUncertainEntries(Index count, Index limit)
    : std::runtime_error(too_many_message(count, limit)), count_(count) {}

std::uint64_t oracle_realization_count(const IntervalLP& p,
                                       const OracleOptions& opts) {
  return Sweep(p, opts).count();
}

Realization oracle_realization(const IntervalLP& p, std::uint64_t index,
                               const OracleOptions& opts) {
  return Sweep(p, opts).at(index);
}

bool realization_feasible(const IntervalLP& p, const Realization& r,
                          const CandidatePoint& pt, double feas_tol) {
  const Vector eq = equation_values(p, r, pt);
  for (Index k = 0; k < p.m(); ++k) {
    const double tol = feas_tol * (1.0 + std::abs(eq[k]) + p.b[k].mag());
    if (eq[k] < p.b.lo()[k] - tol || eq[k] > p.b.hi()[k] + tol) return false;
  }
  const Vector in = inequality_values(p, r, pt);
  for (Index k = 0; k < p.m_prime(); ++k) {
    const double tol = feas_tol * (1.0 + std::abs(in[k]) + p.a[k].mag());
    if (in[k] > p.a.hi()[k] + tol) return false;
  }
  return true;
}

bool realization_optimal(const IntervalLP& p, const Realization& r,
                         const CandidatePoint& pt, const OracleOptions& opts) {
  // Taking a_k as small as allowed makes every row that can be tight at x*
  // tight, which restricts the improving directions the most.
  IndexSet I, J, K;
  for (Index i = 0; i < p.n(); ++i) {
    (std::abs(pt.x[i]) <= opts.zero_tol ? I : J).push_back(i);
  }
  const Vector in = inequality_values(p, r, pt);
  for (Index k = 0; k < p.m_prime(); ++k) {
    if (in[k] >= p.a.lo()[k] - opts.zero_tol) K.push_back(k);
  }

  // Direction (dx, dy): dx_I >= 0, everything else free.
  const Index nx = p.n();
  const Index ny = p.n_prime();
  LinearSystem sys = LinearSystem::over(nx + ny);
  for (Index i : I) sys.nonneg[static_cast<std::size_t>(i)] = true;

  Vector obj(nx + ny);
  obj << r.c, r.d;
  sys.add_ineq(obj, -1.0);
  if (p.m() > 0) {
    Matrix eq(p.m(), nx + ny);
    eq << r.A, r.B;
    sys.add_eq_rows(eq, Vector::Zero(p.m()));
  }
  for (Index k : K) {
    Vector row(nx + ny);
    row << r.C.row(k).transpose(), r.D.row(k).transpose();
    sys.add_ineq(row, 0.0);
  }
  return lp_feasible(sys, opts.lp).status != LpStatus::Feasible;
}

OracleResult oracle_robust_feasible(const IntervalLP& p,
                                    const CandidatePoint& pt,
                                    const OracleOptions& opts) {
  check_dimensions(p, pt);
  OracleResult out = sweep_until(p, opts, [&](const Realization& r) {
    return !realization_feasible(p, r, pt, opts.feas_tol);
  });
  out.feasible = !out.failing_index.has_value();
  out.optimal = out.feasible;
  return out;
}

OracleResult oracle_robust_optimal(const IntervalLP& p,
                                   const CandidatePoint& pt,
                                   const OracleOptions& opts) {
  OracleResult out = oracle_robust_feasible(p, pt, opts);
  if (!out.feasible) {
    out.optimal = false;
    return out;
  }
  out = sweep_until(p, opts, [&](const Realization& r) {
    return !realization_optimal(p, r, pt, opts);
  });
  out.feasible = true;
  out.optimal = !out.failing_index.has_value();
  return out;
}

}  // namespace rilp
