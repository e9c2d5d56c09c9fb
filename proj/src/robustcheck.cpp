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

#include "rilp/robustcheck.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <sstream>

#include "rilp/candidate.hpp"
#include "rilp/parallel.hpp"

namespace rilp {

std::string to_string(Optimality o) {
  switch (o) {
    case Optimality::Yes: return "yes";
    case Optimality::No: return "no";
    case Optimality::Unknown: return "unknown";
  }
  return "?";
}

std::string to_string(CertificateKind k) {
  switch (k) {
    case CertificateKind::FeasibilityViolation: return "feasibility_violation";
    case CertificateKind::OptimalityCounterexample:
      return "optimality_counterexample";
    case CertificateKind::DualEnclosure: return "dual_enclosure";
  }
  return "?";
}

namespace {

std::string budget_message(std::uint64_t required_log2, std::uint64_t budget) {
  std::ostringstream os;
  os << "exact check needs 2^" << required_log2 << " sign systems, budget is "
     << budget;
  return os.str();
}

using Clock = std::chrono::steady_clock;

Vector midpoint_row_scale(const IntervalMatrix& A, const IntervalMatrix& B,
                          const IntervalVector& rhs, const Vector& x,
                          const Vector& y) {
  Vector s = Vector::Ones(A.rows()) + rhs.lo().cwiseAbs().cwiseMax(
                                          rhs.hi().cwiseAbs());
  if (A.cols() > 0) {
    s += A.lo().cwiseAbs().cwiseMax(A.hi().cwiseAbs()) * x.cwiseAbs();
  }
  if (B.cols() > 0) {
    s += B.lo().cwiseAbs().cwiseMax(B.hi().cwiseAbs()) * y.cwiseAbs();
  }
  return s;
}

// Row excess of the equation condition; positive entries are violations.
Vector equation_excess(const IntervalLP& p, const CandidatePoint& pt) {
  Vector center = p.A.mid() * pt.x - p.b.mid();
  Vector spread = p.A.rad() * pt.x.cwiseAbs() - p.b.rad();
  if (p.n_prime() > 0) {
    center += p.B.mid() * pt.y;
    spread += p.B.rad() * pt.y.cwiseAbs();
  }
  return center.cwiseAbs() + spread;
}

Vector inequality_excess(const IntervalLP& p, const CandidatePoint& pt) {
  Vector worst = p.C.hi() * pt.x - p.a.hi();
  if (p.n_prime() > 0) {
    worst += p.D.mid() * pt.y + p.D.rad() * pt.y.cwiseAbs();
  }
  return worst;
}

Realization midpoint_realization(const IntervalLP& p) {
  return {p.A.mid(), p.B.mid(), p.C.mid(), p.D.mid(),
          p.b.mid(), p.a.mid(), p.c.mid(), p.d.mid()};
}

// Data of the sign systems, split into the fixed x_I columns and the free
// columns whose entries read mid - s_j * rad.
struct SignSystemData {
  Index n_fixed = 0;
  Index n_free = 0;
  Matrix fixed;     // rows x n_fixed
  Matrix free_mid;  // rows x n_free
  Matrix free_rad;  // rows x n_free
  Vector rhs;

  SignSystemData(const IntervalLP& p, const ActiveSets& act) {
    const bool eq_form = p.is_equality_form();
    n_fixed = static_cast<Index>(act.I.size());
    n_free = static_cast<Index>(act.J.size()) + p.n_prime();
    const Index m = p.m();
    const Index k = static_cast<Index>(act.K.size());
    const Index rows = (eq_form ? 2 : 1) + 2 * m + k;

    const IntervalMatrix a_i = p.A.select_cols(act.I);
    const IntervalMatrix b_t = p.A.select_cols(act.J).hstack(p.B);
    const IntervalVector c_i = p.c.select(act.I);
    const IntervalVector d_t = p.c.select(act.J).concat(p.d);
    const IntervalMatrix c_k = p.C.select_rows(act.K);
    const IntervalMatrix c_ki = c_k.select_cols(act.I);
    const IntervalMatrix d_k = c_k.select_cols(act.J).hstack(p.D.select_rows(act.K));

    fixed = Matrix::Zero(rows, n_fixed);
    free_mid = Matrix::Zero(rows, n_free);
    free_rad = Matrix::Zero(rows, n_free);
    rhs = Vector::Zero(rows);

    Index r = 0;
    // Some objective realization decreases along the direction.
    fixed.row(r) = c_i.lo().transpose();
    free_mid.row(r) = d_t.mid().transpose();
    free_rad.row(r) = d_t.rad().transpose();
    rhs[r++] = -1.0;
    if (eq_form) {
      fixed.row(r) = -c_i.hi().transpose();
      free_mid.row(r) = -d_t.mid().transpose();
      free_rad.row(r) = d_t.rad().transpose();
      rhs[r++] = 1.0;
    }
    // Some matrix realization keeps the equations: lower part <= 0 <= upper.
    if (m > 0) {
      fixed.middleRows(r, m) = a_i.lo();
      free_mid.middleRows(r, m) = b_t.mid();
      free_rad.middleRows(r, m) = b_t.rad();
      r += m;
      fixed.middleRows(r, m) = -a_i.hi();
      free_mid.middleRows(r, m) = -b_t.mid();
      free_rad.middleRows(r, m) = b_t.rad();
      r += m;
    }
    // Active inequalities stay satisfied.
    if (k > 0) {
      fixed.middleRows(r, k) = c_ki.lo();
      free_mid.middleRows(r, k) = d_k.mid();
      free_rad.middleRows(r, k) = d_k.rad();
      r += k;
    }
  }

  LinearSystem build(const SignVector& s) const {
    LinearSystem sys = LinearSystem::over(n_fixed + n_free);
    for (Index j = 0; j < n_fixed; ++j) sys.nonneg[static_cast<std::size_t>(j)] = true;
    Matrix lhs(rhs.size(), n_fixed + n_free);
    lhs.leftCols(n_fixed) = fixed;
    for (Index j = 0; j < n_free; ++j) {
      lhs.col(n_fixed + j) = free_mid.col(j) - s[j] * free_rad.col(j);
    }
    sys.add_ineq_rows(lhs, rhs);
    return sys;
  }

  void refresh_column(LinearSystem& sys, const SignVector& s, Index j) const {
    sys.ineq_lhs.col(n_fixed + j) = free_mid.col(j) - s[j] * free_rad.col(j);
  }
};

std::uint64_t gray(std::uint64_t k) { return k ^ (k >> 1); }

// Keeps one sign system and walks it along the Gray sequence, so that
// consecutive indices cost a single column update.
class SignWalker {
 public:
  SignWalker(const SignSystemData& data, const LpConfig& cfg)
      : data_(data), cfg_(cfg), s_(data.n_free), sys_(data.build(s_)) {}

  void seek(std::uint64_t k) {
    if (k == pos_) return;
    if (k == pos_ + 1) {
      const auto j = static_cast<Index>(std::countr_zero(k));
      s_.flip(j);
      data_.refresh_column(sys_, s_, j);
    } else {
      s_ = SignVector::from_bits(gray(k), data_.n_free);
      sys_ = data_.build(s_);
    }
    pos_ = k;
  }

  // True when the k-th system has a solution.
  bool feasible(std::uint64_t k) {
    seek(k);
    return lp_feasible(sys_, cfg_).status == LpStatus::Feasible;
  }

  const SignVector& signs() const { return s_; }
  const LinearSystem& system() const { return sys_; }

 private:
  const SignSystemData& data_;
  LpConfig cfg_;
  std::uint64_t pos_ = 0;
  SignVector s_;
  LinearSystem sys_;
};

// Turns a solution of a sign system into an explicit realization for which
// the direction improves the objective and keeps the constraints.
Realization counterexample_realization(const IntervalLP& p,
                                       const CandidatePoint& pt,
                                       const Vector& dx, const Vector& dy) {
  Realization r = midpoint_realization(p);
  const SignVector sx = sgn(dx);
  const SignVector sy = sgn(dy);
  for (Index i = 0; i < p.n(); ++i) {
    r.c[i] = p.c.mid()[i] - p.c.rad()[i] * sx[i];
  }
  for (Index i = 0; i < p.n_prime(); ++i) {
    r.d[i] = p.d.mid()[i] - p.d.rad()[i] * sy[i];
  }

  // Equation rows: M^c - t M^D diag(sgn z) with t chosen so that row * z = 0.
  for (Index k = 0; k < p.m(); ++k) {
    double num = p.A.mid().row(k).dot(dx);
    double den = p.A.rad().row(k).dot(dx.cwiseAbs());
    if (p.n_prime() > 0) {
      num += p.B.mid().row(k).dot(dy);
      den += p.B.rad().row(k).dot(dy.cwiseAbs());
    }
    const double t = den > 0.0 ? std::clamp(num / den, -1.0, 1.0) : 0.0;
    for (Index j = 0; j < p.n(); ++j) {
      r.A(k, j) = p.A.mid()(k, j) - t * p.A.rad()(k, j) * sx[j];
    }
    for (Index j = 0; j < p.n_prime(); ++j) {
      r.B(k, j) = p.B.mid()(k, j) - t * p.B.rad()(k, j) * sy[j];
    }
  }

  // Inequality rows: the smallest value along the direction.
  for (Index k = 0; k < p.m_prime(); ++k) {
    for (Index j = 0; j < p.n(); ++j) {
      r.C(k, j) = p.C.mid()(k, j) - p.C.rad()(k, j) * sx[j];
    }
    for (Index j = 0; j < p.n_prime(); ++j) {
      r.D(k, j) = p.D.mid()(k, j) - p.D.rad()(k, j) * sy[j];
    }
  }
  // Right-hand sides that keep x* feasible in this realization.
  Vector bx = r.A * pt.x;
  if (p.n_prime() > 0) bx += r.B * pt.y;
  r.b = bx.cwiseMax(p.b.lo()).cwiseMin(p.b.hi());
  if (p.m_prime() > 0) {
    Vector ax = r.C * pt.x;
    if (p.n_prime() > 0) ax += r.D * pt.y;
    r.a = ax.cwiseMax(p.a.lo()).cwiseMin(p.a.hi());
  }
  return r;
}

Certificate make_counterexample(const IntervalLP& p, const CandidatePoint& pt,
                                const ActiveSets& act, const SignVector& s,
                                const Vector& w) {
  const auto n_fixed = static_cast<Index>(act.I.size());
  const auto n_j = static_cast<Index>(act.J.size());
  Vector dx = Vector::Zero(p.n());
  for (Index i = 0; i < n_fixed; ++i) dx[act.I[static_cast<std::size_t>(i)]] = w[i];
  for (Index i = 0; i < n_j; ++i) {
    dx[act.J[static_cast<std::size_t>(i)]] = w[n_fixed + i];
  }
  Vector dy = w.tail(p.n_prime());

  Certificate cert;
  cert.kind = CertificateKind::OptimalityCounterexample;
  cert.sign_vector = s;
  cert.witness = w;
  cert.realization = counterexample_realization(p, pt, dx, dy);
  cert.direction_x = std::move(dx);
  cert.direction_y = std::move(dy);
  return cert;
}

Verdict start_verdict(const IntervalLP& p, const CandidatePoint& pt,
                      const CheckOptions& opts) {
  Verdict v;
  v.active = active_sets(p, pt, opts.zero_tol);
  if (auto cert = feasibility_violation(p, pt, opts)) {
    v.feasible = false;
    v.optimal = Optimality::No;
    v.certificate = std::move(cert);
    v.method = "feasibility";
  } else {
    v.feasible = true;
  }
  return v;
}

}  // namespace

BudgetExceeded::BudgetExceeded(std::uint64_t required_log2, std::uint64_t budget)
    : std::runtime_error(budget_message(required_log2, budget)),
      required_log2_(required_log2),
      budget_(budget) {}

bool check_feasibility_eq(const IntervalLP& p, const CandidatePoint& pt,
                          const CheckOptions& opts) {
  check_dimensions(p, pt);
  const Vector excess = equation_excess(p, pt);
  const Vector scale = midpoint_row_scale(p.A, p.B, p.b, pt.x, pt.y);
  return (excess.array() <= opts.feas_tol * scale.array()).all();
}

bool check_feasibility_gen(const IntervalLP& p, const CandidatePoint& pt,
                           const CheckOptions& opts) {
  if (!check_feasibility_eq(p, pt, opts)) return false;
  if (p.m_prime() == 0) return true;
  const Vector excess = inequality_excess(p, pt);
  const Vector scale = midpoint_row_scale(p.C, p.D, p.a, pt.x, pt.y);
  return (excess.array() <= opts.feas_tol * scale.array()).all();
}

std::optional<Certificate> feasibility_violation(const IntervalLP& p,
                                                 const CandidatePoint& pt,
                                                 const CheckOptions& opts) {
  check_dimensions(p, pt);
  const SignVector sy = sgn(pt.y);
  Realization r = midpoint_realization(p);

  const Vector eq_excess = equation_excess(p, pt);
  const Vector eq_scale = midpoint_row_scale(p.A, p.B, p.b, pt.x, pt.y);
  for (Index k = 0; k < p.m(); ++k) {
    if (eq_excess[k] <= opts.feas_tol * eq_scale[k]) continue;
    double center = p.A.mid().row(k).dot(pt.x) - p.b.mid()[k];
    if (p.n_prime() > 0) center += p.B.mid().row(k).dot(pt.y);
    // Push the row value away from the right-hand side interval.
    const double dir = center >= 0.0 ? 1.0 : -1.0;
    r.A.row(k) = dir > 0 ? p.A.hi().row(k) : p.A.lo().row(k);
    for (Index j = 0; j < p.n_prime(); ++j) {
      r.B(k, j) = p.B.mid()(k, j) + dir * p.B.rad()(k, j) * sy[j];
    }
    Certificate cert;
    cert.kind = CertificateKind::FeasibilityViolation;
    cert.violated_row = k;
    Vector w = r.A * pt.x;
    if (p.n_prime() > 0) w += r.B * pt.y;
    cert.witness = std::move(w);
    cert.realization = std::move(r);
    return cert;
  }

  if (p.m_prime() == 0) return std::nullopt;
  const Vector in_excess = inequality_excess(p, pt);
  const Vector in_scale = midpoint_row_scale(p.C, p.D, p.a, pt.x, pt.y);
  for (Index k = 0; k < p.m_prime(); ++k) {
    if (in_excess[k] <= opts.feas_tol * in_scale[k]) continue;
    r.C.row(k) = p.C.hi().row(k);
    for (Index j = 0; j < p.n_prime(); ++j) {
      r.D(k, j) = p.D.mid()(k, j) + p.D.rad()(k, j) * sy[j];
    }
    Certificate cert;
    cert.kind = CertificateKind::FeasibilityViolation;
    cert.violated_row = p.m() + k;
    Vector w = r.C * pt.x;
    if (p.n_prime() > 0) w += r.D * pt.y;
    cert.witness = std::move(w);
    cert.realization = std::move(r);
    return cert;
  }
  return std::nullopt;
}

LinearSystem optimality_system(const IntervalLP& p, const ActiveSets& active,
                               const SignVector& s) {
  const SignSystemData data(p, active);
  if (s.size() != data.n_free) {
    throw DimensionMismatch("optimality_system: sign vector has wrong length");
  }
  return data.build(s);
}

CriterionResult optimality_criterion(const IntervalLP& p,
                                     const ActiveSets& active,
                                     const CheckOptions& opts) {
  p.validate();
  const SignSystemData data(p, active);
  const auto bits = static_cast<std::uint64_t>(data.n_free);
  if (bits >= 63 || (std::uint64_t{1} << bits) > opts.budget) {
    throw BudgetExceeded(bits, opts.budget);
  }
  const std::uint64_t count = std::uint64_t{1} << bits;

  auto make_worker = [&] {
    return [walker = SignWalker(data, opts.lp)](std::uint64_t k) mutable {
      return walker.feasible(k);
    };
  };
  const auto found =
      parallel_find_first(count, resolve_threads(opts.threads), make_worker);

  CriterionResult out;
  if (!found) {
    out.holds = true;
    out.systems_checked = count;
    return out;
  }
  out.holds = false;
  out.systems_checked = *found + 1;

  // Solve the failing system again on this thread to recover its witness.
  SignWalker walker(data, opts.lp);
  walker.seek(*found);
  const LpResult res = lp_feasible(walker.system(), opts.lp);
  if (res.status != LpStatus::Feasible || !res.point) {
    throw LpError("sign system changed status on re-solve");
  }
  CandidatePoint origin(Vector::Zero(p.n()), Vector::Zero(p.n_prime()));
  out.counterexample =
      make_counterexample(p, origin, active, walker.signs(), *res.point);
  return out;
}

Verdict check_optimality_exact(const IntervalLP& p, const CandidatePoint& pt,
                               const CheckOptions& opts) {
  const auto t0 = Clock::now();
  Verdict v = start_verdict(p, pt, opts);
  if (v.feasible) {
    v.method = "exact";
    CriterionResult crit = optimality_criterion(p, v.active, opts);
    v.systems_checked = crit.systems_checked;
    if (crit.holds) {
      v.optimal = Optimality::Yes;
    } else {
      v.optimal = Optimality::No;
      // Rebuild the realization against the actual candidate so that its
      // right-hand sides keep x* feasible.
      Certificate cert = std::move(*crit.counterexample);
      cert.realization = counterexample_realization(
          p, pt, *cert.direction_x, *cert.direction_y);
      v.certificate = std::move(cert);
    }
  }
  v.elapsed = Clock::now() - t0;
  return v;
}

Verdict sufficient_nondegenerate(const IntervalLP& p, const CandidatePoint& pt,
                                 const CheckOptions& opts) {
  const auto t0 = Clock::now();
  Verdict v = start_verdict(p, pt, opts);
  if (!v.feasible) {
    v.elapsed = Clock::now() - t0;
    return v;
  }
  v.method = "sufficient-nondegenerate";
  v.optimal = Optimality::Unknown;
  const auto& act = v.active;
  if (!p.is_equality_form() || static_cast<Index>(act.J.size()) != p.m()) {
    v.elapsed = Clock::now() - t0;
    return v;
  }
  try {
    const IntervalMatrix a_j = p.A.select_cols(act.J);
    Enclosure enc =
        enclose_square(a_j.transpose(), p.c.select(act.J), opts.enclosure);
    const IntervalVector reduced =
        imatmul_iv(p.A.select_cols(act.I).transpose(), enc.box);
    const Vector c_lo = p.c.select(act.I).lo();
    if ((reduced.hi().array() <= c_lo.array()).all()) {
      v.optimal = Optimality::Yes;
      Certificate cert;
      cert.kind = CertificateKind::DualEnclosure;
      cert.dual_box = std::move(enc);
      v.certificate = std::move(cert);
    }
  } catch (const EnclosureError&) {
    // Singular or not strongly regular: the test does not apply.
  }
  v.elapsed = Clock::now() - t0;
  return v;
}

namespace {

// Blocks of the dual system for given active sets: A~ = A_I, B~ = (A_J | B),
// C~ = C_{K,I}, D~ = (C_{K,J} | D_K), c~ = c_I, d~ = (c_J, d).
struct DualBlocks {
  Index m = 0, nk = 0, ni = 0, nt = 0;
  IntervalMatrix a_i, b_t, c_ki, d_k;
  IntervalVector c_i, d_t;
  Matrix ai_c, bt_c, cki_c, dk_c;

  DualBlocks(const IntervalLP& p, const ActiveSets& act) {
    m = p.m();
    nk = static_cast<Index>(act.K.size());
    ni = static_cast<Index>(act.I.size());
    a_i = p.A.select_cols(act.I);
    b_t = p.A.select_cols(act.J).hstack(p.B);
    const IntervalMatrix c_k = p.C.select_rows(act.K);
    c_ki = c_k.select_cols(act.I);
    d_k = c_k.select_cols(act.J).hstack(p.D.select_rows(act.K));
    c_i = p.c.select(act.I);
    d_t = p.c.select(act.J).concat(p.d);
    nt = d_t.size();
    // Empty blocks can come back with a collapsed shape; pin them down.
    auto mid_or_zero = [](const IntervalMatrix& M, Index r, Index c) {
      return M.rows() == r && M.cols() == c ? M.mid() : Matrix::Zero(r, c);
    };
    ai_c = mid_or_zero(a_i, m, ni);
    bt_c = mid_or_zero(b_t, m, nt);
    cki_c = mid_or_zero(c_ki, nk, ni);
    dk_c = mid_or_zero(d_k, nk, nt);
  }

  // [B~^T | -D~^T] as an interval matrix of shape nt x (m + nk).
  IntervalMatrix top() const {
    const IntervalMatrix bt_t = b_t.rows() == m && b_t.cols() == nt
                                    ? b_t.transpose()
                                    : IntervalMatrix(Matrix::Zero(nt, m));
    const IntervalMatrix dk_t = d_k.rows() == nk && d_k.cols() == nt
                                    ? -d_k.transpose()
                                    : IntervalMatrix(Matrix::Zero(nt, nk));
    if (m == 0) return dk_t;
    if (nk == 0) return bt_t;
    return bt_t.hstack(dk_t);
  }
};

}  // namespace

std::optional<Vector> dual_center(const IntervalLP& p, const ActiveSets& act,
                                  const CheckOptions& opts) {
  const DualBlocks blk(p, act);
  const Index m = blk.m, nk = blk.nk, ni = blk.ni, nt = blk.nt;

  // Variables (u, v, alpha), all free: maximize alpha subject to
  //   A~^T u - C~^T v + alpha e <= c~,  B~^T u - D~^T v = d~,  v >= alpha e.
  const Index nv = m + nk + 1;
  LinearSystem center = LinearSystem::over(nv);
  Matrix rows(ni, nv);
  rows << blk.ai_c.transpose(), -blk.cki_c.transpose(), Vector::Ones(ni);
  center.add_ineq_rows(rows, blk.c_i.mid());
  Matrix eq(nt, nv);
  eq << blk.bt_c.transpose(), -blk.dk_c.transpose(), Vector::Zero(nt);
  center.add_eq_rows(eq, blk.d_t.mid());
  Matrix vrows(nk, nv);
  vrows << Matrix::Zero(nk, m), -Matrix::Identity(nk, nk), Vector::Ones(nk);
  center.add_ineq_rows(vrows, Vector::Zero(nk));

  Vector obj = Vector::Zero(nv);
  obj[nv - 1] = 1.0;
  LpResult res = lp_solve(obj, center, Sense::Maximize, opts.lp);
  if (res.status == LpStatus::Unbounded) {
    // Nothing bounds alpha; any positive margin serves as the center.
    const double cap = 1.0 + (ni > 0 ? blk.c_i.mid().cwiseAbs().maxCoeff() : 0.0);
    center.add_ineq(obj, cap);
    res = lp_solve(obj, center, Sense::Maximize, opts.lp);
  }
  if (res.status != LpStatus::Optimal || !res.point) return std::nullopt;
  if ((*res.point)[nv - 1] < -opts.lp.opt_tol) return std::nullopt;
  return Vector(res.point->head(m + nk));
}

std::optional<Enclosure> dual_enclosure_test(const IntervalLP& p,
                                             const ActiveSets& act,
                                             const Vector& center,
                                             const CheckOptions& opts) {
  const DualBlocks blk(p, act);
  const Index m = blk.m, nk = blk.nk, ni = blk.ni, nt = blk.nt;
  if (center.size() != m + nk) {
    throw DimensionMismatch("dual_enclosure_test: center has wrong length");
  }

  Enclosure enc;
  if (m + nk == 0) {
    enc = Enclosure{IntervalVector(0), true, 0};
  } else {
    Matrix top_mid(nt, m + nk);
    top_mid << blk.bt_c.transpose(), -blk.dk_c.transpose();
    const Matrix null = orthonormal_nullspace(top_mid);
    const Vector d_hat = null.transpose() * center;
    try {
      enc = enclose_stacked(blk.top(), blk.d_t, null.transpose(), d_hat,
                            opts.enclosure);
    } catch (const EnclosureError&) {
      return std::nullopt;
    } catch (const DimensionMismatch&) {
      // The midpoint dual equations are rank deficient.
      return std::nullopt;
    }
  }

  std::vector<Index> u_idx(static_cast<std::size_t>(m));
  std::vector<Index> v_idx(static_cast<std::size_t>(nk));
  for (Index i = 0; i < m; ++i) u_idx[static_cast<std::size_t>(i)] = i;
  for (Index i = 0; i < nk; ++i) v_idx[static_cast<std::size_t>(i)] = m + i;
  const IntervalVector u = enc.box.select(u_idx);
  const IntervalVector v = enc.box.select(v_idx);

  if (nk > 0 && (v.lo().array() < 0.0).any()) return std::nullopt;
  if (ni > 0) {
    IntervalVector reduced(Vector::Zero(ni));
    if (m > 0) reduced = reduced + imatmul_iv(blk.a_i.transpose(), u);
    if (nk > 0) reduced = reduced - imatmul_iv(blk.c_ki.transpose(), v);
    if (!(reduced.hi().array() <= blk.c_i.lo().array()).all()) return std::nullopt;
  }
  return enc;
}

Verdict sufficient_degenerate(const IntervalLP& p, const CandidatePoint& pt,
                              const CheckOptions& opts) {
  const auto t0 = Clock::now();
  Verdict v = start_verdict(p, pt, opts);
  if (v.feasible) {
    v.method = "sufficient-degenerate";
    v.optimal = Optimality::Unknown;
    if (const auto center = dual_center(p, v.active, opts)) {
      if (auto enc = dual_enclosure_test(p, v.active, *center, opts)) {
        v.optimal = Optimality::Yes;
        Certificate cert;
        cert.kind = CertificateKind::DualEnclosure;
        cert.dual_box = std::move(*enc);
        v.certificate = std::move(cert);
      }
    }
  }
  v.elapsed = Clock::now() - t0;
  return v;
}

Verdict sufficient_condition(const IntervalLP& p, const CandidatePoint& pt,
                             const CheckOptions& opts) {
  const auto t0 = Clock::now();
  Verdict v = sufficient_nondegenerate(p, pt, opts);
  if (v.feasible && v.optimal != Optimality::Yes) {
    v = sufficient_degenerate(p, pt, opts);
  }
  v.elapsed = Clock::now() - t0;
  return v;
}

std::optional<CheckMode> parse_mode(const std::string& text) {
  if (text == "exact") return CheckMode::Exact;
  if (text == "sufficient") return CheckMode::Sufficient;
  if (text == "auto") return CheckMode::Auto;
  return std::nullopt;
}

Verdict check_robust(const IntervalLP& p, const CandidatePoint& pt,
                     CheckMode mode, const CheckOptions& opts) {
  switch (mode) {
    case CheckMode::Exact:
      return check_optimality_exact(p, pt, opts);
    case CheckMode::Sufficient:
      return sufficient_condition(p, pt, opts);
    case CheckMode::Auto:
      break;
  }
  const auto t0 = Clock::now();
  Verdict v = sufficient_condition(p, pt, opts);
  if (v.feasible && v.optimal == Optimality::Unknown) {
    try {
      v = check_optimality_exact(p, pt, opts);
    } catch (const BudgetExceeded&) {
      // Stay with the inconclusive sufficient verdict.
    }
  }
  v.elapsed = Clock::now() - t0;
  return v;
}

std::vector<RobustComponent> enumerate_robust_components(
    const IntervalLP& p, Index max_n, const CheckOptions& opts) {
  p.validate();
  if (!p.is_equality_form()) {
    throw std::invalid_argument(
        "component enumeration needs an equality-form problem");
  }
  const Index n = p.n();
  if (n > max_n || n >= 63) {
    std::ostringstream os;
    os << "component enumeration over n = " << n << " variables exceeds "
       << "the limit of " << max_n;
    throw TooLarge(os.str());
  }

  const LinearSystem feasible = robust_feasible_system(p);
  std::vector<std::uint64_t> masks(std::uint64_t{1} << n);
  for (std::uint64_t i = 0; i < masks.size(); ++i) masks[i] = i;
  std::stable_sort(masks.begin(), masks.end(),
                   [](std::uint64_t a, std::uint64_t b) {
                     return std::popcount(a) < std::popcount(b);
                   });

  std::vector<std::uint64_t> passing;
  std::vector<std::uint64_t> empty;
  auto covers = [](const std::vector<std::uint64_t>& sets, std::uint64_t mask) {
    return std::any_of(sets.begin(), sets.end(), [mask](std::uint64_t s) {
      return (mask & s) == s;
    });
  };

  std::vector<RobustComponent> out;
  for (const std::uint64_t mask : masks) {
    if (covers(passing, mask) || covers(empty, mask)) continue;

    ActiveSets act;
    for (Index i = 0; i < n; ++i) {
      ((mask >> i) & 1U ? act.I : act.J).push_back(i);
    }
    LinearSystem face = feasible;
    for (Index i : act.I) {
      Vector row = Vector::Zero(n);
      row[i] = 1.0;
      face.add_eq(row, 0.0);
    }
    const LpResult probe = lp_feasible(face, opts.lp);
    if (probe.status != LpStatus::Feasible || !probe.point) {
      empty.push_back(mask);
      continue;
    }
    CheckOptions local = opts;
    local.budget = std::max<std::uint64_t>(opts.budget, std::uint64_t{1} << n);
    if (!optimality_criterion(p, act, local).holds) continue;
    passing.push_back(mask);

    RobustComponent comp;
    comp.zero_set = act.I;
    comp.point = *probe.point;
    comp.lower = Vector::Constant(n, -std::numeric_limits<double>::infinity());
    comp.upper = Vector::Constant(n, std::numeric_limits<double>::infinity());
    for (Index j = 0; j < n; ++j) {
      Vector e = Vector::Zero(n);
      e[j] = 1.0;
      const LpResult lo = lp_solve(e, face, Sense::Minimize, opts.lp);
      if (lo.status == LpStatus::Optimal) comp.lower[j] = *lo.objective;
      const LpResult hi = lp_solve(e, face, Sense::Maximize, opts.lp);
      if (hi.status == LpStatus::Optimal) comp.upper[j] = *hi.objective;
    }
    comp.singleton =
        ((comp.upper - comp.lower).array() <= 1e-7).all();
    comp.polyhedron = std::move(face);
    out.push_back(std::move(comp));
  }
  return out;
}

}  // namespace rilp
