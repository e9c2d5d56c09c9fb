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

// robust-ilp: command-line front end.
//
// Exit codes: 0 robust optimal (or success), 1 refuted / not found,
// 2 inconclusive, 3 input error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "rilp/bench.hpp"
#include "rilp/candidate.hpp"
#include "rilp/model.hpp"
#include "rilp/robustcheck.hpp"

namespace {

using nlohmann::json;
using namespace rilp;

constexpr int kSchemaVersion = 1;

enum Exit { kOk = 0, kRefuted = 1, kUnknown = 2, kInputError = 3 };

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Source {
  std::string problem;
  std::string diet;
  double matrix_rel = 0.05;
  double rhs_rel = 0.10;

  void attach(CLI::App* app) {
    auto* prob = app->add_option("--problem", problem, "Problem file (JSON)");
    auto* d = app->add_option("--diet", diet, "Diet data file (JSON)");
    prob->excludes(d);
    app->add_option("--matrix-rel", matrix_rel,
                    "Diet: relative radius of nutrient contents")
        ->capture_default_str();
    app->add_option("--rhs-rel", rhs_rel,
                    "Diet: relative radius of the allowances")
        ->capture_default_str();
  }

  ProblemFile load() const {
    if (!diet.empty()) {
      DietOptions o;
      o.matrix_rel = matrix_rel;
      o.rhs_rel = rhs_rel;
      return {load_diet(diet, o), std::nullopt};
    }
    if (problem.empty()) throw InputError("one of --problem or --diet is required");
    return load_problem(problem);
  }
};

std::vector<double> parse_numbers(const std::string& text) {
  std::vector<double> out;
  std::string item;
  std::istringstream is(text);
  while (std::getline(is, item, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used]))) ++used;
    if (used == 0 || used != item.size()) {
      throw InputError("cannot parse candidate entry '" + item + "'");
    }
    out.push_back(v);
  }
  return out;
}

Vector to_vector(const std::vector<double>& v) {
  return Eigen::Map<const Vector>(v.data(), static_cast<Index>(v.size()));
}

// A file path (problem-file layout or {"x": [...], "y": [...]}) or inline
// "x1,x2,..." optionally followed by ";y1,y2,...".
CandidatePoint parse_candidate(const std::string& arg) {
  if (std::filesystem::exists(arg)) {
    std::ifstream in(arg);
    json j;
    try {
      j = json::parse(in);
    } catch (const json::exception& e) {
      throw InputError(std::string("candidate file: ") + e.what());
    }
    const char* xk = j.contains("candidate_x") ? "candidate_x" : "x";
    const char* yk = j.contains("candidate_y") ? "candidate_y" : "y";
    if (!j.contains(xk)) throw InputError("candidate file has no x block");
    const auto x = j.at(xk).get<std::vector<double>>();
    std::vector<double> y;
    if (j.contains(yk)) y = j.at(yk).get<std::vector<double>>();
    return CandidatePoint(to_vector(x), to_vector(y));
  }
  const auto semi = arg.find(';');
  const auto x = parse_numbers(arg.substr(0, semi));
  std::vector<double> y;
  if (semi != std::string::npos) y = parse_numbers(arg.substr(semi + 1));
  return CandidatePoint(to_vector(x), to_vector(y));
}

json to_json(const Vector& v) {
  return std::vector<double>(v.data(), v.data() + v.size());
}

json to_json(const Matrix& m) {
  json rows = json::array();
  for (Index i = 0; i < m.rows(); ++i) rows.push_back(to_json(Vector(m.row(i))));
  return rows;
}

json to_json(const IndexSet& s) { return std::vector<Index>(s.begin(), s.end()); }

json to_json(const Verdict& v) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["feasible"] = v.feasible;
  j["optimal"] = to_string(v.optimal);
  j["method"] = v.method;
  j["systems_checked"] = v.systems_checked;
  j["elapsed_s"] = v.elapsed.count();
  j["active"] = {{"I", to_json(v.active.I)},
                 {"J", to_json(v.active.J)},
                 {"K", to_json(v.active.K)}};
  if (v.certificate) {
    const Certificate& c = *v.certificate;
    json cj;
    cj["kind"] = to_string(c.kind);
    if (c.sign_vector) {
      std::vector<int> s;
      for (Index i = 0; i < c.sign_vector->size(); ++i) s.push_back((*c.sign_vector)[i]);
      cj["sign_vector"] = s;
    }
    if (c.witness) cj["witness"] = to_json(*c.witness);
    if (c.direction_x) cj["direction_x"] = to_json(*c.direction_x);
    if (c.direction_y) cj["direction_y"] = to_json(*c.direction_y);
    if (c.violated_row) cj["violated_row"] = *c.violated_row;
    if (c.dual_box) {
      cj["dual_box"] = {{"lo", to_json(c.dual_box->box.lo())},
                        {"hi", to_json(c.dual_box->box.hi())}};
    }
    if (c.realization) {
      const Realization& r = *c.realization;
      cj["realization"] = {{"A", to_json(r.A)}, {"b", to_json(r.b)},
                           {"c", to_json(r.c)}};
      if (r.B.cols() > 0) cj["realization"]["B"] = to_json(r.B);
      if (r.C.rows() > 0) {
        cj["realization"]["C"] = to_json(r.C);
        cj["realization"]["a"] = to_json(r.a);
      }
      if (r.D.size() > 0) cj["realization"]["D"] = to_json(r.D);
      if (r.d.size() > 0) cj["realization"]["d"] = to_json(r.d);
    }
    j["certificate"] = cj;
  }
  return j;
}

std::string fmt(const Vector& v) {
  std::ostringstream os;
  os << '(';
  for (Index i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
  os << ')';
  return os.str();
}

std::string fmt(const IndexSet& s) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < s.size(); ++i) os << (i ? ", " : "") << s[i];
  os << '}';
  return os.str();
}

void print_verdict(std::ostream& os, const Verdict& v) {
  os << "feasible: " << (v.feasible ? "yes" : "no") << '\n';
  os << "optimal: " << to_string(v.optimal) << '\n';
  os << "method: " << v.method << '\n';
  os << "active set I: " << fmt(v.active.I) << '\n';
  if (!v.active.K.empty()) os << "active rows K: " << fmt(v.active.K) << '\n';
  if (v.systems_checked > 0) os << "systems checked: " << v.systems_checked << '\n';
  if (v.certificate) {
    const Certificate& c = *v.certificate;
    os << "certificate: " << to_string(c.kind) << '\n';
    if (c.violated_row) os << "  violated row: " << *c.violated_row << '\n';
    if (c.sign_vector) os << "  sign vector: " << fmt(c.sign_vector->as_vector()) << '\n';
    if (c.direction_x) os << "  direction x: " << fmt(*c.direction_x) << '\n';
    if (c.direction_y && c.direction_y->size() > 0) {
      os << "  direction y: " << fmt(*c.direction_y) << '\n';
    }
    if (c.realization) {
      if (c.kind == CertificateKind::OptimalityCounterexample) {
        os << "  objective c: " << fmt(c.realization->c) << '\n';
      } else if (c.witness) {
        os << "  row values: " << fmt(*c.witness) << '\n';
      }
    }
    if (c.dual_box) {
      os << "  dual box lo: " << fmt(c.dual_box->box.lo()) << '\n';
      os << "  dual box hi: " << fmt(c.dual_box->box.hi()) << '\n';
    }
  }
  os << "elapsed: " << v.elapsed.count() << " s\n";
}

int exit_for(const Verdict& v) {
  switch (v.optimal) {
    case Optimality::Yes: return kOk;
    case Optimality::No: return kRefuted;
    case Optimality::Unknown: return kUnknown;
  }
  return kUnknown;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Robust optimality checks for interval linear programs"};
  app.require_subcommand(1);
  unsigned threads = 0;
  app.add_option("--threads", threads,
                 "Worker threads (0: machine parallelism; ROBUST_ILP_THREADS overrides)");

  // check
  auto* check = app.add_subcommand("check", "Check a candidate for robust optimality");
  Source check_src;
  check_src.attach(check);
  std::string candidate_arg;
  std::string mode_arg = "auto";
  std::uint64_t budget = std::uint64_t{1} << 20;
  double zero_tol = kDefaultZeroTol;
  bool as_json = false;
  check->add_option("--candidate", candidate_arg,
                    "Candidate file or inline 'x1,x2,...[;y1,...]'");
  check->add_option("--mode", mode_arg, "exact | sufficient | auto")
      ->check(CLI::IsMember({"exact", "sufficient", "auto"}))
      ->capture_default_str();
  check->add_option("--budget", budget, "Largest number of sign systems")
      ->capture_default_str();
  check->add_option("--zero-tol", zero_tol, "Threshold for x_i = 0")
      ->capture_default_str();
  check->add_flag("--json", as_json, "Emit JSON");

  // find
  auto* find = app.add_subcommand("find", "Compute the midpoint candidate");
  Source find_src;
  find_src.attach(find);
  bool verify = false;
  bool find_json = false;
  find->add_flag("--verify", verify, "Run the exact check on the candidate");
  find->add_option("--budget", budget, "Largest number of sign systems");
  find->add_flag("--json", find_json, "Emit JSON");

  // components
  auto* comps = app.add_subcommand("components",
                                   "Enumerate robust optimal pieces (equality form)");
  Source comp_src;
  comp_src.attach(comps);
  Index max_n = 12;
  bool comp_json = false;
  comps->add_option("--max-n", max_n, "Refuse problems with more variables")
      ->capture_default_str();
  comps->add_flag("--json", comp_json, "Emit JSON");

  // bench
  auto* bench = app.add_subcommand("bench", "Random transportation experiment");
  std::string dims = "5x10:2,4,6";
  int trials = 200;
  std::uint64_t seed = 1;
  std::string out_path = "-";
  bool no_timing = false;
  bench->add_option("--dims", dims, "e.g. '5x10:2,4,6;10x15:3,5,7'")
      ->capture_default_str();
  bench->add_option("--trials", trials, "Trials per configuration")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  bench->add_option("--seed", seed, "Base seed")->capture_default_str();
  bench->add_option("--out", out_path, "CSV path ('-' for stdout)")
      ->capture_default_str();
  bench->add_flag("--no-timing", no_timing,
                  "Write zero timings for reproducible output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kInputError;
  }

  CheckOptions opts;
  opts.threads = threads;
  opts.budget = budget;
  opts.zero_tol = zero_tol;

  try {
    if (*check) {
      const ProblemFile pf = check_src.load();
      CandidatePoint pt;
      if (!candidate_arg.empty()) {
        pt = parse_candidate(candidate_arg);
      } else if (pf.candidate) {
        pt = *pf.candidate;
      } else {
        throw InputError("no candidate given and none stored in the problem file");
      }
      check_dimensions(pf.problem, pt);
      Verdict v;
      try {
        v = check_robust(pf.problem, pt, *parse_mode(mode_arg), opts);
      } catch (const BudgetExceeded& e) {
        std::cerr << "robust-ilp: " << e.what() << '\n';
        return kUnknown;
      }
      if (as_json) {
        std::cout << to_json(v).dump(2) << '\n';
      } else {
        print_verdict(std::cout, v);
      }
      return exit_for(v);
    }

    if (*find) {
      const ProblemFile pf = find_src.load();
      const CandidateOutcome cand = find_candidate(pf.problem);
      json j;
      j["schema_version"] = kSchemaVersion;
      j["status"] = to_string(cand.status);
      if (cand.status != CandidateStatus::Found) {
        if (find_json) {
          std::cout << j.dump(2) << '\n';
        } else {
          std::cout << "candidate: " << to_string(cand.status) << '\n';
        }
        return kRefuted;
      }
      const CandidatePoint& pt = *cand.point;
      j["x"] = to_json(pt.x);
      if (pt.y.size() > 0) j["y"] = to_json(pt.y);
      j["objective"] = *cand.objective;
      if (!find_json) {
        std::cout << "candidate x: " << fmt(pt.x) << '\n';
        if (pt.y.size() > 0) std::cout << "candidate y: " << fmt(pt.y) << '\n';
        std::cout << "midpoint objective: " << *cand.objective << '\n';
      }
      if (!verify) {
        if (find_json) std::cout << j.dump(2) << '\n';
        return kOk;
      }
      Verdict v;
      try {
        v = check_optimality_exact(pf.problem, pt, opts);
      } catch (const BudgetExceeded& e) {
        std::cerr << "robust-ilp: " << e.what() << '\n';
        return kUnknown;
      }
      if (find_json) {
        j["verdict"] = to_json(v);
        std::cout << j.dump(2) << '\n';
      } else {
        std::cout << "robust feasible: " << (v.feasible ? "yes" : "no") << '\n';
        std::cout << "robust optimal: " << to_string(v.optimal) << " ("
                  << v.systems_checked << " systems)\n";
      }
      return exit_for(v);
    }

    if (*comps) {
      const ProblemFile pf = comp_src.load();
      std::vector<RobustComponent> found;
      try {
        found = enumerate_robust_components(pf.problem, max_n, opts);
      } catch (const TooLarge& e) {
        std::cerr << "robust-ilp: " << e.what() << '\n';
        return kInputError;
      }
      if (comp_json) {
        json arr = json::array();
        for (const auto& c : found) {
          arr.push_back({{"zero_set", to_json(c.zero_set)},
                         {"point", to_json(c.point)},
                         {"lower", to_json(c.lower)},
                         {"upper", to_json(c.upper)},
                         {"singleton", c.singleton}});
        }
        std::cout << json{{"schema_version", kSchemaVersion}, {"components", arr}}
                         .dump(2)
                  << '\n';
      } else {
        std::cout << found.size() << " component(s)\n";
        for (const auto& c : found) {
          std::cout << "I = " << fmt(c.zero_set) << ": ";
          if (c.singleton) {
            std::cout << "point " << fmt(c.point) << '\n';
          } else {
            std::cout << "box " << fmt(c.lower) << " .. " << fmt(c.upper) << '\n';
          }
        }
      }
      return kOk;
    }

    if (*bench) {
      BenchOptions bo;
      bo.trials = trials;
      bo.seed = seed;
      bo.threads = threads;
      bo.timing = !no_timing;
      const auto rows = run_table1(parse_dims(dims), bo);
      if (out_path == "-") {
        write_csv(std::cout, rows);
      } else {
        std::ofstream out(out_path);
        if (!out) throw InputError("cannot write " + out_path);
        write_csv(out, rows);
      }
      return kOk;
    }
  } catch (const ParseError& e) {
    std::cerr << "robust-ilp: " << e.what() << '\n';
    return kInputError;
  } catch (const InputError& e) {
    std::cerr << "robust-ilp: " << e.what() << '\n';
    return kInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "robust-ilp: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "robust-ilp: " << e.what() << '\n';
    return kUnknown;
  }
  return kInputError;
}
