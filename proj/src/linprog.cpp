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

#include "rilp/linprog.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace rilp {

LinearSystem LinearSystem::over(Index num_vars, bool all_nonneg) {
  LinearSystem sys;
  sys.eq_lhs.resize(0, num_vars);
  sys.eq_rhs.resize(0);
  sys.ineq_lhs.resize(0, num_vars);
  sys.ineq_rhs.resize(0);
  sys.nonneg.assign(static_cast<std::size_t>(num_vars), all_nonneg);
  return sys;
}

void LinearSystem::validate() const {
  const Index n = num_vars();
  if (eq_lhs.cols() != n && eq_lhs.rows() != 0) {
    throw DimensionMismatch("linear system: equality block has wrong width");
  }
  if (ineq_lhs.cols() != n && ineq_lhs.rows() != 0) {
    throw DimensionMismatch("linear system: inequality block has wrong width");
  }
  if (eq_lhs.rows() != eq_rhs.size()) {
    throw DimensionMismatch("linear system: equality rhs length mismatch");
  }
  if (ineq_lhs.rows() != ineq_rhs.size()) {
    throw DimensionMismatch("linear system: inequality rhs length mismatch");
  }
}

namespace {

void append_rows(Index width, Matrix& lhs, Vector& rhs, const Matrix& rows,
                 const Vector& values) {
  if (rows.rows() != values.size()) {
    throw DimensionMismatch("linear system: appended rhs length mismatch");
  }
  if (rows.cols() != width) {
    throw DimensionMismatch("linear system: appended rows have wrong width");
  }
  const Index old = lhs.rows();
  lhs.conservativeResize(old + rows.rows(), rows.cols());
  lhs.bottomRows(rows.rows()) = rows;
  rhs.conservativeResize(old + values.size());
  rhs.tail(values.size()) = values;
}

}  // namespace

void LinearSystem::add_eq(const Vector& row, double rhs) {
  append_rows(num_vars(), eq_lhs, eq_rhs, row.transpose(), Vector::Constant(1, rhs));
}

void LinearSystem::add_ineq(const Vector& row, double rhs) {
  append_rows(num_vars(), ineq_lhs, ineq_rhs, row.transpose(), Vector::Constant(1, rhs));
}

void LinearSystem::add_eq_rows(const Matrix& rows, const Vector& rhs) {
  append_rows(num_vars(), eq_lhs, eq_rhs, rows, rhs);
}

void LinearSystem::add_ineq_rows(const Matrix& rows, const Vector& rhs) {
  append_rows(num_vars(), ineq_lhs, ineq_rhs, rows, rhs);
}

double LinearSystem::max_violation(const Vector& x) const {
  double worst = 0.0;
  if (num_eq() > 0) {
    worst = std::max(worst, (eq_lhs * x - eq_rhs).cwiseAbs().maxCoeff());
  }
  if (num_ineq() > 0) {
    worst = std::max(worst, (ineq_lhs * x - ineq_rhs).maxCoeff());
  }
  for (Index j = 0; j < num_vars(); ++j) {
    if (nonneg[static_cast<std::size_t>(j)]) worst = std::max(worst, -x[j]);
  }
  return worst;
}

std::string to_string(LpStatus status) {
  switch (status) {
    case LpStatus::Optimal:
      return "optimal";
    case LpStatus::Infeasible:
      return "infeasible";
    case LpStatus::Unbounded:
      return "unbounded";
    case LpStatus::Feasible:
      return "feasible";
  }
  return "unknown";
}

namespace {

using RowMajor = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic,
                               Eigen::RowMajor>;

double inf_norm(const Matrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

double inf_norm(const Vector& v) {
  return v.size() == 0 ? 0.0 : v.cwiseAbs().maxCoeff();
}

// Primal feasibility of x measured relative to the data scale.
bool primal_ok(const LinearSystem& sys, const Vector& x, double tol) {
  const double scale = 1.0 +
                       std::max(inf_norm(sys.eq_lhs), inf_norm(sys.ineq_lhs)) *
                           inf_norm(x) +
                       std::max(inf_norm(sys.eq_rhs), inf_norm(sys.ineq_rhs));
  return sys.max_violation(x) <= tol * scale;
}

class Tableau {
 public:
  Tableau(const LinearSystem& sys, const LpConfig& cfg) : sys_(sys), cfg_(cfg) {
    const Index n = sys.num_vars();
    const Index me = sys.num_eq();
    const Index mi = sys.num_ineq();
    rows_ = me + mi;

    pos_col_.resize(static_cast<std::size_t>(n));
    neg_col_.assign(static_cast<std::size_t>(n), -1);
    Index col = 0;
    for (Index j = 0; j < n; ++j) {
      pos_col_[static_cast<std::size_t>(j)] = col++;
      if (!sys.nonneg[static_cast<std::size_t>(j)]) {
        neg_col_[static_cast<std::size_t>(j)] = col++;
      }
    }
    first_slack_ = col;
    structural_ = col + mi;
    first_art_ = structural_;
    width_ = structural_ + rows_;
    rhs_col_ = width_;

    t_ = RowMajor::Zero(rows_, width_ + 1);
    row_factor_ = Vector::Ones(rows_);
    for (Index i = 0; i < rows_; ++i) {
      const bool is_eq = i < me;
      const auto orow = is_eq ? Vector(sys.eq_lhs.row(i).transpose())
                              : Vector(sys.ineq_lhs.row(i - me).transpose());
      const double rhs = is_eq ? sys.eq_rhs[i] : sys.ineq_rhs[i - me];
      const double big = orow.size() > 0 ? orow.cwiseAbs().maxCoeff() : 0.0;
      const double scale = big > 0.0 ? 1.0 / big : 1.0;
      const double sign = rhs * scale < 0.0 ? -1.0 : 1.0;
      const double f = sign * scale;
      row_factor_[i] = f;
      for (Index j = 0; j < n; ++j) {
        t_(i, pos_col_[static_cast<std::size_t>(j)]) = f * orow[j];
        const Index nc = neg_col_[static_cast<std::size_t>(j)];
        if (nc >= 0) t_(i, nc) = -f * orow[j];
      }
      if (!is_eq) t_(i, first_slack_ + (i - me)) = f;
      t_(i, first_art_ + i) = 1.0;
      t_(i, rhs_col_) = f * rhs;
    }
    basis_.resize(static_cast<std::size_t>(rows_));
    for (Index i = 0; i < rows_; ++i) {
      basis_[static_cast<std::size_t>(i)] = first_art_ + i;
    }
    max_pivots_ = cfg.max_pivots > 0
                      ? cfg.max_pivots
                      : static_cast<int>(50 * (rows_ + width_) + 1000);
  }

  enum class Outcome { Optimal, Unbounded };

  // Minimizes cost over the columns in [0, allowed_end).
  Outcome run(const Vector& cost, Index allowed_end) {
    price(cost);
    int phase_pivots = 0;
    const double price_tol = std::min(cfg_.opt_tol, 1e-9);
    while (true) {
      const bool bland = phase_pivots >= cfg_.dantzig_pivots;
      Index enter = -1;
      double best = -price_tol;
      for (Index j = 0; j < allowed_end; ++j) {
        if (is_basic_[static_cast<std::size_t>(j)]) continue;
        if (rc_[j] < best) {
          enter = j;
          if (bland) break;
          best = rc_[j];
        }
      }
      if (enter < 0) return Outcome::Optimal;

      Index leave = -1;
      double best_ratio = std::numeric_limits<double>::infinity();
      double best_piv = 0.0;
      for (Index i = 0; i < rows_; ++i) {
        const double a = t_(i, enter);
        if (a <= cfg_.pivot_tol) continue;
        const double ratio = std::max(0.0, t_(i, rhs_col_)) / a;
        const double tie = 1e-12 * (1.0 + std::abs(best_ratio));
        if (leave < 0 || ratio < best_ratio - tie) {
          leave = i;
          best_ratio = ratio;
          best_piv = a;
        } else if (ratio <= best_ratio + tie) {
          const bool prefer =
              bland ? basis_[static_cast<std::size_t>(i)] <
                          basis_[static_cast<std::size_t>(leave)]
                    : a > best_piv;
          if (prefer) {
            leave = i;
            best_ratio = std::min(best_ratio, ratio);
            best_piv = a;
          }
        }
      }
      if (leave < 0) {
        unbounded_col_ = enter;
        return Outcome::Unbounded;
      }
      pivot(leave, enter);
      ++phase_pivots;
      if (++total_pivots_ > max_pivots_) {
        throw LpError("simplex: pivot limit exceeded");
      }
    }
  }

  double objective(const Vector& cost) const {
    double v = 0.0;
    for (Index i = 0; i < rows_; ++i) {
      v += cost[basis_[static_cast<std::size_t>(i)]] * t_(i, rhs_col_);
    }
    return v;
  }

  // Pivots basic artificials out wherever a structural column allows it.
  void drive_out_artificials() {
    for (Index i = 0; i < rows_; ++i) {
      if (basis_[static_cast<std::size_t>(i)] < first_art_) continue;
      Index best = -1;
      double mag = cfg_.pivot_tol * 1e3;
      for (Index j = 0; j < structural_; ++j) {
        if (is_basic_[static_cast<std::size_t>(j)]) continue;
        if (std::abs(t_(i, j)) > mag) {
          mag = std::abs(t_(i, j));
          best = j;
        }
      }
      if (best >= 0) pivot(i, best);
    }
  }

  // pi = c_B^T B^{-1}, mapped back to the unscaled rows.
  Vector row_multipliers(const Vector& cost) const {
    Vector pi = Vector::Zero(rows_);
    for (Index k = 0; k < rows_; ++k) {
      const double cb = cost[basis_[static_cast<std::size_t>(k)]];
      if (cb == 0.0) continue;
      pi += cb * t_.block(k, first_art_, 1, rows_).transpose();
    }
    return pi.cwiseProduct(row_factor_);
  }

  Vector primal() const {
    Vector std_x = Vector::Zero(width_);
    for (Index i = 0; i < rows_; ++i) {
      std_x[basis_[static_cast<std::size_t>(i)]] = t_(i, rhs_col_);
    }
    const Index n = sys_.num_vars();
    Vector x(n);
    for (Index j = 0; j < n; ++j) {
      x[j] = std_x[pos_col_[static_cast<std::size_t>(j)]];
      const Index nc = neg_col_[static_cast<std::size_t>(j)];
      if (nc >= 0) x[j] -= std_x[nc];
    }
    return x;
  }

  Vector structural_cost(const Vector& objective) const {
    Vector cost = Vector::Zero(width_);
    for (Index j = 0; j < sys_.num_vars(); ++j) {
      cost[pos_col_[static_cast<std::size_t>(j)]] = objective[j];
      const Index nc = neg_col_[static_cast<std::size_t>(j)];
      if (nc >= 0) cost[nc] = -objective[j];
    }
    return cost;
  }

  Vector artificial_cost() const {
    Vector cost = Vector::Zero(width_);
    cost.tail(rows_).setOnes();
    return cost;
  }

  double rhs_norm() const {
    return rows_ == 0 ? 0.0 : t_.col(rhs_col_).cwiseAbs().maxCoeff();
  }

  Index structural() const { return structural_; }
  Index width() const { return width_; }
  int pivots() const { return total_pivots_; }

 private:
  void price(const Vector& cost) {
    is_basic_.assign(static_cast<std::size_t>(width_), false);
    for (Index b : basis_) is_basic_[static_cast<std::size_t>(b)] = true;
    rc_ = cost;
    for (Index i = 0; i < rows_; ++i) {
      const double cb = cost[basis_[static_cast<std::size_t>(i)]];
      if (cb != 0.0) rc_ -= cb * t_.block(i, 0, 1, width_).transpose();
    }
  }

  void pivot(Index r, Index c) {
    const double p = t_(r, c);
    t_.row(r) /= p;
    t_(r, c) = 1.0;
    for (Index i = 0; i < rows_; ++i) {
      if (i == r) continue;
      const double f = t_(i, c);
      if (f == 0.0) continue;
      t_.row(i) -= f * t_.row(r);
      t_(i, c) = 0.0;
    }
    if (rc_.size() == width_) {
      const double f = rc_[c];
      if (f != 0.0) {
        rc_ -= f * t_.block(r, 0, 1, width_).transpose();
        rc_[c] = 0.0;
      }
    }
    auto& leaving = basis_[static_cast<std::size_t>(r)];
    if (!is_basic_.empty()) {
      is_basic_[static_cast<std::size_t>(leaving)] = false;
      is_basic_[static_cast<std::size_t>(c)] = true;
    }
    leaving = c;
  }

  const LinearSystem& sys_;
  LpConfig cfg_;
  Index rows_ = 0;
  Index first_slack_ = 0;
  Index structural_ = 0;
  Index first_art_ = 0;
  Index width_ = 0;
  Index rhs_col_ = 0;
  std::vector<Index> pos_col_;
  std::vector<Index> neg_col_;
  std::vector<Index> basis_;
  std::vector<bool> is_basic_;
  Vector row_factor_;
  Vector rc_;
  RowMajor t_;
  Index unbounded_col_ = -1;
  int total_pivots_ = 0;
  int max_pivots_ = 0;
};

struct PhaseOne {
  bool feasible = false;
  LpResult infeasible;
};

PhaseOne phase_one(Tableau& tab, const LinearSystem& sys, const LpConfig& cfg) {
  const Vector cost = tab.artificial_cost();
  tab.run(cost, tab.structural());
  const double infeas = tab.objective(cost);
  PhaseOne out;
  if (infeas <= cfg.feas_tol * std::max(1.0, tab.rhs_norm())) {
    out.feasible = true;
    return out;
  }
  // Phase-I duals pi satisfy pi^T A <= 0 and pi^T b > 0 on the standard
  // form; y = -pi is the ray in the orientation documented in FarkasRay.
  Vector y = -tab.row_multipliers(cost);
  const double norm = inf_norm(y);
  if (norm > 0.0) y /= norm;
  FarkasRay ray;
  ray.eq_mult = y.head(sys.num_eq());
  ray.ineq_mult = y.tail(sys.num_ineq());
  out.infeasible.status = LpStatus::Infeasible;
  out.infeasible.certified = verify_farkas(sys, ray, cfg.feas_tol * 1e2);
  out.infeasible.farkas = std::move(ray);
  out.infeasible.pivots = tab.pivots();
  return out;
}

}  // namespace

bool verify_farkas(const LinearSystem& sys, const FarkasRay& ray, double tol) {
  if (ray.eq_mult.size() != sys.num_eq() ||
      ray.ineq_mult.size() != sys.num_ineq()) {
    return false;
  }
  const double mult_norm =
      std::max(inf_norm(ray.eq_mult), inf_norm(ray.ineq_mult));
  if (mult_norm == 0.0) return false;
  if (sys.num_ineq() > 0 && ray.ineq_mult.minCoeff() < -tol * mult_norm) {
    return false;
  }
  Vector w = Vector::Zero(sys.num_vars());
  if (sys.num_eq() > 0) w += sys.eq_lhs.transpose() * ray.eq_mult;
  if (sys.num_ineq() > 0) w += sys.ineq_lhs.transpose() * ray.ineq_mult;
  const double coef_scale =
      std::max(1.0, std::max(inf_norm(sys.eq_lhs), inf_norm(sys.ineq_lhs))) *
      mult_norm;
  for (Index j = 0; j < sys.num_vars(); ++j) {
    const bool nn = sys.nonneg[static_cast<std::size_t>(j)];
    if (nn && w[j] < -tol * coef_scale) return false;
    if (!nn && std::abs(w[j]) > tol * coef_scale) return false;
  }
  double value = 0.0;
  if (sys.num_eq() > 0) value += sys.eq_rhs.dot(ray.eq_mult);
  if (sys.num_ineq() > 0) value += sys.ineq_rhs.dot(ray.ineq_mult.cwiseMax(0.0));
  // The slack left by rounding in w must not be able to close the gap:
  // for any feasible x, w^T x >= 0 but w^T x = value - z^T(slack) <= value.
  return value < 0.0;
}

bool verify_optimal(const Vector& objective, const LinearSystem& sys,
                    const LpResult& result, double tol) {
  if (!result.point || !result.eq_duals || !result.ineq_duals) return false;
  const Vector& x = *result.point;
  const Vector& y = *result.eq_duals;
  const Vector& z = *result.ineq_duals;
  const double cscale = 1.0 + inf_norm(objective);
  if (z.size() > 0 && z.maxCoeff() > tol * cscale) return false;
  Vector w = Vector::Zero(sys.num_vars());
  if (sys.num_eq() > 0) w += sys.eq_lhs.transpose() * y;
  if (sys.num_ineq() > 0) w += sys.ineq_lhs.transpose() * z;
  const double wscale =
      cscale + std::max(inf_norm(sys.eq_lhs), inf_norm(sys.ineq_lhs)) *
                   std::max(inf_norm(y), inf_norm(z));
  for (Index j = 0; j < sys.num_vars(); ++j) {
    const double gap = w[j] - objective[j];
    if (sys.nonneg[static_cast<std::size_t>(j)]) {
      if (gap > tol * wscale) return false;
    } else if (std::abs(gap) > tol * wscale) {
      return false;
    }
  }
  const double primal = objective.dot(x);
  double dual = 0.0;
  if (sys.num_eq() > 0) dual += sys.eq_rhs.dot(y);
  if (sys.num_ineq() > 0) dual += sys.ineq_rhs.dot(z);
  const double bscale =
      1.0 + std::abs(primal) +
      std::max(inf_norm(sys.eq_rhs), inf_norm(sys.ineq_rhs)) *
          std::max(inf_norm(y), inf_norm(z));
  return std::abs(primal - dual) <= tol * bscale;
}

LpResult lp_feasible(const LinearSystem& sys, const LpConfig& cfg) {
  sys.validate();
  Tableau tab(sys, cfg);
  PhaseOne p1 = phase_one(tab, sys, cfg);
  if (!p1.feasible) return std::move(p1.infeasible);
  LpResult out;
  out.status = LpStatus::Feasible;
  Vector x = tab.primal();
  out.certified = primal_ok(sys, x, cfg.feas_tol);
  out.point = std::move(x);
  out.pivots = tab.pivots();
  return out;
}

LpResult lp_solve(const Vector& objective, const LinearSystem& sys,
                  Sense sense, const LpConfig& cfg) {
  sys.validate();
  if (objective.size() != sys.num_vars()) {
    throw DimensionMismatch("lp_solve: objective length mismatch");
  }
  const Vector min_obj = sense == Sense::Minimize ? objective : Vector(-objective);
  Tableau tab(sys, cfg);
  PhaseOne p1 = phase_one(tab, sys, cfg);
  if (!p1.feasible) return std::move(p1.infeasible);

  tab.drive_out_artificials();
  const Vector cost = tab.structural_cost(min_obj);
  LpResult out;
  if (tab.run(cost, tab.structural()) == Tableau::Outcome::Unbounded) {
    out.status = LpStatus::Unbounded;
    out.pivots = tab.pivots();
    return out;
  }
  Vector x = tab.primal();
  // pi^T A_std <= c_std on structural columns; pi in the original row
  // orientation is the dual of the minimization form.
  const Vector pi = tab.row_multipliers(cost);
  out.status = LpStatus::Optimal;
  out.objective = objective.dot(x);
  out.eq_duals = pi.head(sys.num_eq());
  out.ineq_duals = pi.tail(sys.num_ineq());
  out.point = std::move(x);
  out.pivots = tab.pivots();
  out.certified = primal_ok(sys, *out.point, cfg.feas_tol) &&
                  verify_optimal(min_obj, sys, out, cfg.opt_tol);
  return out;
}

}  // namespace rilp
