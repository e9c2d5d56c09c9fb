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

#include "rilp/model.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace rilp {

using json = nlohmann::json;

IntervalLP IntervalLP::equality_form(IntervalMatrix A, IntervalVector b,
                                     IntervalVector c) {
  IntervalLP p;
  const Index m = A.rows();
  const Index n = A.cols();
  p.A = std::move(A);
  p.b = std::move(b);
  p.c = std::move(c);
  p.B = IntervalMatrix(m, 0);
  p.C = IntervalMatrix(0, n);
  p.D = IntervalMatrix(0, 0);
  p.a = IntervalVector(0);
  p.d = IntervalVector(0);
  p.validate();
  return p;
}

void IntervalLP::validate() const {
  const Index m = A.rows(), n = A.cols();
  const Index mp = C.rows(), np = B.cols();
  auto need = [](bool ok, const char* what) {
    if (!ok) throw DimensionMismatch(what);
  };
  need(B.rows() == m, "B must have m rows");
  need(C.cols() == n, "C must have n columns");
  need(D.rows() == mp && D.cols() == np, "D must be m' x n'");
  need(b.size() == m, "b must have m entries");
  need(a.size() == mp, "a must have m' entries");
  need(c.size() == n, "c must have n entries");
  need(d.size() == np, "d must have n' entries");
}

Index IntervalLP::uncertain_entries() const {
  auto count = [](const Matrix& lo, const Matrix& hi) {
    return static_cast<Index>((hi.array() > lo.array()).count());
  };
  return count(A.lo(), A.hi()) + count(B.lo(), B.hi()) + count(C.lo(), C.hi()) +
         count(D.lo(), D.hi()) + count(c.lo(), c.hi()) + count(d.lo(), d.hi());
}

CandidatePoint::CandidatePoint(Vector x_, Vector y_)
    : x(std::move(x_)), y(std::move(y_)) {
  for (Index i = 0; i < x.size(); ++i) {
    if (!(x[i] >= 0.0)) {
      std::ostringstream msg;
      msg << "candidate x[" << i << "] = " << x[i] << " is negative";
      throw std::invalid_argument(msg.str());
    }
  }
}

void check_dimensions(const IntervalLP& p, const CandidatePoint& pt) {
  if (pt.x.size() != p.n()) {
    throw DimensionMismatch("candidate x length does not match n");
  }
  if (pt.y.size() != p.n_prime()) {
    throw DimensionMismatch("candidate y length does not match n'");
  }
}

ActiveSets active_sets(const IntervalLP& p, const CandidatePoint& pt,
                       double zero_tol) {
  check_dimensions(p, pt);
  ActiveSets s;
  for (Index i = 0; i < p.n(); ++i) {
    (std::abs(pt.x[i]) <= zero_tol ? s.I : s.J).push_back(i);
  }
  if (p.m_prime() > 0) {
    const Vector worst = p.C.lo() * pt.x + p.D.mid() * pt.y -
                         p.D.rad() * pt.y.cwiseAbs();
    for (Index k = 0; k < p.m_prime(); ++k) {
      if (worst[k] >= p.a.lo()[k] - zero_tol) s.K.push_back(k);
    }
  }
  return s;
}

IntervalLP build_transportation(
    const IntervalMatrix& costs, const IntervalVector& supplies,
    const IntervalVector& demands,
    const std::vector<std::pair<Index, Index>>& uncertain_edges) {
  const Index m = costs.rows();
  const Index n = costs.cols();
  if (supplies.size() != m || demands.size() != n) {
    throw DimensionMismatch(
        "transportation: supplies/demands do not match cost matrix");
  }
  Matrix lo = Matrix::Zero(m + n, m * n);
  Matrix hi = Matrix::Zero(m + n, m * n);
  for (Index i = 0; i < m; ++i) {
    for (Index j = 0; j < n; ++j) {
      const Index v = i * n + j;
      lo(i, v) = hi(i, v) = 1.0;
      lo(m + j, v) = hi(m + j, v) = 1.0;
    }
  }
  for (const auto& [i, j] : uncertain_edges) {
    if (i < 0 || i >= m || j < 0 || j >= n) {
      std::ostringstream msg;
      msg << "transportation: edge (" << i << ", " << j << ") out of range";
      throw std::out_of_range(msg.str());
    }
    const Index v = i * n + j;
    lo(i, v) = 0.0;
    lo(m + j, v) = 0.0;
  }
  Vector c_lo(m * n), c_hi(m * n);
  for (Index i = 0; i < m; ++i) {
    for (Index j = 0; j < n; ++j) {
      c_lo[i * n + j] = costs.lo()(i, j);
      c_hi[i * n + j] = costs.hi()(i, j);
    }
  }
  return IntervalLP::equality_form(IntervalMatrix(std::move(lo), std::move(hi)),
                                   supplies.concat(demands),
                                   IntervalVector(std::move(c_lo), std::move(c_hi)));
}

// ---------------------------------------------------------------------------
// Problem files

namespace {

int line_of_offset(const std::string& text, std::size_t offset) {
  int line = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') ++line;
  }
  return line;
}

class Reader {
 public:
  Reader(const json& doc, const std::string& text) : doc_(doc), text_(text) {}

  [[noreturn]] void fail(const std::string& field, const std::string& what) const {
    throw ParseError("field '" + field + "': " + what, line_of(field), field);
  }

  Index dim(const char* field, bool required) const {
    if (!doc_.contains(field)) {
      if (required) fail(field, "missing");
      return 0;
    }
    const json& v = doc_.at(field);
    if (!v.is_number_integer() && !v.is_number_unsigned()) {
      fail(field, "expected a non-negative integer");
    }
    const auto value = v.get<long long>();
    if (value < 0) fail(field, "expected a non-negative integer");
    return static_cast<Index>(value);
  }

  Matrix matrix(const std::string& field, Index rows, Index cols) const {
    if (!doc_.contains(field)) {
      if (rows * cols > 0) fail(field, "missing");
      return Matrix::Zero(rows, cols);
    }
    const json& v = doc_.at(field);
    if (!v.is_array()) fail(field, "expected an array");
    Matrix out(rows, cols);
    const bool nested = !v.empty() && v.front().is_array();
    if (nested) {
      if (static_cast<Index>(v.size()) != rows) {
        fail(field, "expected " + std::to_string(rows) + " rows, got " +
                        std::to_string(v.size()));
      }
      for (Index i = 0; i < rows; ++i) {
        const json& row = v[static_cast<std::size_t>(i)];
        if (!row.is_array() || static_cast<Index>(row.size()) != cols) {
          fail(field, "row " + std::to_string(i) + " must have " +
                          std::to_string(cols) + " entries");
        }
        for (Index j = 0; j < cols; ++j) {
          out(i, j) = number(field, row[static_cast<std::size_t>(j)]);
        }
      }
    } else {
      if (static_cast<Index>(v.size()) != rows * cols) {
        fail(field, "expected " + std::to_string(rows * cols) +
                        " entries, got " + std::to_string(v.size()));
      }
      for (Index i = 0; i < rows; ++i) {
        for (Index j = 0; j < cols; ++j) {
          out(i, j) = number(field, v[static_cast<std::size_t>(i * cols + j)]);
        }
      }
    }
    return out;
  }

  Vector vector(const std::string& field, Index size) const {
    if (!doc_.contains(field)) {
      if (size > 0) fail(field, "missing");
      return Vector::Zero(size);
    }
    const json& v = doc_.at(field);
    if (!v.is_array()) fail(field, "expected an array");
    if (static_cast<Index>(v.size()) != size) {
      fail(field, "expected " + std::to_string(size) + " entries, got " +
                      std::to_string(v.size()));
    }
    Vector out(size);
    for (Index i = 0; i < size; ++i) {
      out[i] = number(field, v[static_cast<std::size_t>(i)]);
    }
    return out;
  }

  IntervalMatrix imatrix(const std::string& name, Index rows,
                         Index cols) const {
    Matrix lo = matrix(name + "_lo", rows, cols);
    Matrix hi = matrix(name + "_hi", rows, cols);
    for (Index i = 0; i < rows; ++i) {
      for (Index j = 0; j < cols; ++j) {
        if (!(lo(i, j) <= hi(i, j))) {
          fail(name + "_lo", "entry (" + std::to_string(i) + ", " +
                                 std::to_string(j) + ") has lo > hi");
        }
      }
    }
    return {std::move(lo), std::move(hi)};
  }

  IntervalVector ivector(const std::string& name, Index size) const {
    Vector lo = vector(name + "_lo", size);
    Vector hi = vector(name + "_hi", size);
    for (Index i = 0; i < size; ++i) {
      if (!(lo[i] <= hi[i])) {
        fail(name + "_lo", "entry " + std::to_string(i) + " has lo > hi");
      }
    }
    return {std::move(lo), std::move(hi)};
  }

  std::optional<Vector> optional_vector(const std::string& field,
                                        Index size) const {
    if (!doc_.contains(field) || doc_.at(field).is_null()) return std::nullopt;
    return vector(field, size);
  }

 private:
  double number(const std::string& field, const json& v) const {
    if (!v.is_number()) fail(field, "expected a number");
    const double x = v.get<double>();
    if (!std::isfinite(x)) fail(field, "expected a finite number");
    return x;
  }

  int line_of(const std::string& field) const {
    const auto pos = text_.find("\"" + field + "\"");
    return pos == std::string::npos ? 0 : line_of_offset(text_, pos);
  }

  const json& doc_;
  const std::string& text_;
};

std::string num(double v) { return json(v).dump(); }

void write_matrix(std::ostream& os, const char* name, const Matrix& m) {
  os << "  \"" << name << "\": [";
  for (Index i = 0; i < m.rows(); ++i) {
    os << (i == 0 ? "\n    [" : ",\n    [");
    for (Index j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << num(m(i, j));
    os << ']';
  }
  os << (m.rows() > 0 ? "\n  ]" : "]");
}

void write_vector(std::ostream& os, const char* name, const Vector& v) {
  os << "  \"" << name << "\": [";
  for (Index i = 0; i < v.size(); ++i) os << (i ? ", " : "") << num(v[i]);
  os << ']';
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what(),
                     line_of_offset(text, e.byte), "");
  }
}

}  // namespace

ProblemFile parse_problem(const std::string& text) {
  const json doc = parse_json(text);
  if (!doc.is_object()) throw ParseError("top level must be an object", 1);
  Reader r(doc, text);
  const Index m = r.dim("m", true);
  const Index n = r.dim("n", true);
  const Index mp = r.dim("m_prime", false);
  const Index np = r.dim("n_prime", false);

  ProblemFile out;
  IntervalLP& p = out.problem;
  p.A = r.imatrix("A", m, n);
  p.B = r.imatrix("B", m, np);
  p.C = r.imatrix("C", mp, n);
  p.D = r.imatrix("D", mp, np);
  p.b = r.ivector("b", m);
  p.a = r.ivector("a", mp);
  p.c = r.ivector("c", n);
  p.d = r.ivector("d", np);
  p.validate();

  auto cx = r.optional_vector("candidate_x", n);
  auto cy = r.optional_vector("candidate_y", np);
  if (cx) {
    try {
      out.candidate = CandidatePoint(*cx, cy.value_or(Vector::Zero(np)));
    } catch (const std::invalid_argument& e) {
      r.fail("candidate_x", e.what());
    }
  } else if (cy) {
    r.fail("candidate_y", "given without candidate_x");
  }
  return out;
}

ProblemFile load_problem(const std::filesystem::path& path) {
  return parse_problem(read_file(path));
}

std::string dump_problem(const IntervalLP& p,
                         const std::optional<CandidatePoint>& candidate) {
  p.validate();
  std::ostringstream os;
  os << "{\n";
  os << "  \"m\": " << p.m() << ",\n  \"n\": " << p.n()
     << ",\n  \"m_prime\": " << p.m_prime()
     << ",\n  \"n_prime\": " << p.n_prime() << ",\n";
  write_matrix(os, "A_lo", p.A.lo()); os << ",\n";
  write_matrix(os, "A_hi", p.A.hi()); os << ",\n";
  write_vector(os, "b_lo", p.b.lo()); os << ",\n";
  write_vector(os, "b_hi", p.b.hi()); os << ",\n";
  write_vector(os, "c_lo", p.c.lo()); os << ",\n";
  write_vector(os, "c_hi", p.c.hi());
  if (!p.is_equality_form()) {
    os << ",\n";
    write_matrix(os, "B_lo", p.B.lo()); os << ",\n";
    write_matrix(os, "B_hi", p.B.hi()); os << ",\n";
    write_matrix(os, "C_lo", p.C.lo()); os << ",\n";
    write_matrix(os, "C_hi", p.C.hi()); os << ",\n";
    write_matrix(os, "D_lo", p.D.lo()); os << ",\n";
    write_matrix(os, "D_hi", p.D.hi()); os << ",\n";
    write_vector(os, "a_lo", p.a.lo()); os << ",\n";
    write_vector(os, "a_hi", p.a.hi()); os << ",\n";
    write_vector(os, "d_lo", p.d.lo()); os << ",\n";
    write_vector(os, "d_hi", p.d.hi());
  }
  if (candidate) {
    os << ",\n";
    write_vector(os, "candidate_x", candidate->x);
    if (p.n_prime() > 0) {
      os << ",\n";
      write_vector(os, "candidate_y", candidate->y);
    }
  }
  os << "\n}\n";
  return os.str();
}

void save_problem(const std::filesystem::path& path, const IntervalLP& p,
                  const std::optional<CandidatePoint>& candidate) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << dump_problem(p, candidate);
}

// ---------------------------------------------------------------------------
// Diet data

DietData load_diet_data(const std::filesystem::path& path) {
  const std::string text = read_file(path);
  const json doc = parse_json(text);
  DietData data;
  try {
    const json& nutrients = doc.at("nutrients");
    const json& foods = doc.at("foods");
    const auto m = static_cast<Index>(nutrients.size());
    const auto n = static_cast<Index>(foods.size());
    data.content = Matrix::Zero(m, n);
    data.allowance = Vector::Zero(m);
    for (Index i = 0; i < m; ++i) {
      const json& item = nutrients[static_cast<std::size_t>(i)];
      data.nutrients.push_back(item.at("name").get<std::string>());
      data.allowance[i] = item.at("allowance").get<double>();
    }
    for (Index j = 0; j < n; ++j) {
      const json& item = foods[static_cast<std::size_t>(j)];
      data.foods.push_back(item.at("name").get<std::string>());
      const json& values = item.at("content");
      if (static_cast<Index>(values.size()) != m) {
        throw ParseError("food '" + data.foods.back() + "' has " +
                             std::to_string(values.size()) +
                             " nutrient values, expected " + std::to_string(m),
                         line_of_offset(text, text.find(data.foods.back())),
                         "content");
      }
      for (Index i = 0; i < m; ++i) {
        data.content(i, j) = values[static_cast<std::size_t>(i)].get<double>();
      }
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("diet data: ") + e.what());
  }
  return data;
}

IntervalLP diet_problem(const DietData& data, const DietOptions& opts) {
  const Matrix& a = data.content;
  const Matrix ar = a.cwiseAbs() * opts.matrix_rel;
  const Vector br = data.allowance.cwiseAbs() * opts.rhs_rel;
  const Vector c = Vector::Ones(a.cols());
  return IntervalLP::equality_form(
      IntervalMatrix::from_mid_rad(a, ar),
      IntervalVector::from_mid_rad(data.allowance, br),
      IntervalVector::from_mid_rad(c, c * opts.cost_rel));
}

IntervalLP load_diet(const std::filesystem::path& path,
                     const DietOptions& opts) {
  return diet_problem(load_diet_data(path), opts);
}

}  // namespace rilp
