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

#include "rilp/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "rilp/candidate.hpp"
#include "rilp/parallel.hpp"
#include "rilp/robustcheck.hpp"

namespace rilp {

namespace {

Index parse_index(const std::string& text, const std::string& spec) {
  std::size_t used = 0;
  long v = 0;
  try {
    v = std::stol(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || text.empty() || v < 0) {
    throw std::invalid_argument("bad dimension spec '" + spec + "'");
  }
  return static_cast<Index>(v);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) out.push_back(cur);
  return out;
}

struct TrialResult {
  bool found = false;
  bool verified = false;
  double candidate_s = 0.0;
  double robust_s = 0.0;
};

}  // namespace

std::vector<BenchConfig> parse_dims(const std::string& spec) {
  std::vector<BenchConfig> out;
  for (const std::string& part : split(spec, ';')) {
    if (part.empty()) continue;
    const auto colon = part.find(':');
    const auto x = part.find('x');
    if (colon == std::string::npos || x == std::string::npos || x > colon) {
      throw std::invalid_argument("bad dimension spec '" + part + "'");
    }
    BenchConfig cfg;
    cfg.m = parse_index(part.substr(0, x), part);
    cfg.n = parse_index(part.substr(x + 1, colon - x - 1), part);
    for (const std::string& e : split(part.substr(colon + 1), ',')) {
      cfg.edges.push_back(parse_index(e, part));
    }
    if (cfg.m == 0 || cfg.n == 0 || cfg.edges.empty()) {
      throw std::invalid_argument("bad dimension spec '" + part + "'");
    }
    for (Index e : cfg.edges) {
      if (e > cfg.m * cfg.n) {
        throw std::invalid_argument("more uncertain edges than flows in '" +
                                    part + "'");
      }
    }
    out.push_back(std::move(cfg));
  }
  if (out.empty()) throw std::invalid_argument("empty dimension spec");
  return out;
}

IntervalLP random_transportation(Index m, Index n, Index edges,
                                 std::mt19937_64& rng) {
  std::uniform_int_distribution<int> cost_dist(10, 50);
  std::uniform_int_distribution<int> amount_dist(50, 300);

  Matrix cost(m, n);
  for (Index i = 0; i < m; ++i) {
    for (Index j = 0; j < n; ++j) cost(i, j) = cost_dist(rng);
  }
  Matrix cost_rad = Matrix::Zero(m, n);
  std::vector<Index> cells(static_cast<std::size_t>(m * n));
  std::iota(cells.begin(), cells.end(), Index{0});
  std::shuffle(cells.begin(), cells.end(), rng);
  const auto n_uncertain = static_cast<std::size_t>(std::lround(0.1 * static_cast<double>(m * n)));
  for (std::size_t k = 0; k < n_uncertain; ++k) {
    const Index cell = cells[k];
    cost_rad(cell / n, cell % n) = 0.1 * cost(cell / n, cell % n);
  }

  Vector supply(m);
  for (Index i = 0; i < m; ++i) supply[i] = amount_dist(rng);
  Vector demand(n);
  for (Index j = 0; j < n; ++j) demand[j] = amount_dist(rng);
  const double total = supply.sum();
  demand *= total / demand.sum();
  for (Index j = 0; j < n; ++j) demand[j] = std::round(demand[j]);
  demand[n - 1] += total - demand.sum();

  std::shuffle(cells.begin(), cells.end(), rng);
  std::vector<std::pair<Index, Index>> uncertain;
  for (Index k = 0; k < edges; ++k) {
    const Index cell = cells[static_cast<std::size_t>(k)];
    uncertain.emplace_back(cell / n, cell % n);
  }

  return build_transportation(
      IntervalMatrix::from_mid_rad(cost, cost_rad),
      IntervalVector::from_mid_rad(supply, 0.1 * supply),
      IntervalVector::from_mid_rad(demand, 0.1 * demand), uncertain);
}

std::mt19937_64 trial_rng(std::uint64_t seed, Index m, Index n, Index edges,
                          int trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed & 0xffffffffU),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(m), static_cast<std::uint32_t>(n),
                    static_cast<std::uint32_t>(edges),
                    static_cast<std::uint32_t>(trial)};
  return std::mt19937_64(seq);
}

std::vector<BenchRow> run_table1(const std::vector<BenchConfig>& dims,
                                 const BenchOptions& opts) {
  if (opts.trials < 1) throw std::invalid_argument("trials must be >= 1");
  using Clock = std::chrono::steady_clock;
  const unsigned threads = resolve_threads(opts.threads);

  std::vector<BenchRow> rows;
  for (const BenchConfig& cfg : dims) {
    for (Index edges : cfg.edges) {
      std::vector<TrialResult> results(static_cast<std::size_t>(opts.trials));
      parallel_for(results.size(), threads, [&](std::uint64_t t) {
        auto rng = trial_rng(opts.seed, cfg.m, cfg.n, edges, static_cast<int>(t));
        const IntervalLP p = random_transportation(cfg.m, cfg.n, edges, rng);
        TrialResult& r = results[t];
        const auto t0 = Clock::now();
        const CandidateOutcome cand = find_candidate(p);
        const auto t1 = Clock::now();
        r.candidate_s = std::chrono::duration<double>(t1 - t0).count();
        if (cand.status != CandidateStatus::Found) return;
        r.found = true;
        CheckOptions check;
        check.threads = 1;
        const Verdict v = sufficient_condition(p, *cand.point, check);
        r.robust_s = std::chrono::duration<double>(Clock::now() - t1).count();
        r.verified = v.optimal == Optimality::Yes;
      });

      BenchRow row;
      row.m = cfg.m;
      row.n = cfg.n;
      row.edges = edges;
      row.trials = opts.trials;
      row.seed = opts.seed;
      double cand_total = 0.0;
      double robust_total = 0.0;
      for (const TrialResult& r : results) {
        cand_total += r.candidate_s;
        robust_total += r.robust_s;
        row.candidates_found += r.found ? 1 : 0;
        row.verified += r.verified ? 1 : 0;
      }
      if (opts.timing) {
        row.candidate_time_s = cand_total / opts.trials;
        row.robust_time_s =
            row.candidates_found > 0 ? robust_total / row.candidates_found : 0.0;
      }
      row.success_rate_pct = 100.0 * row.verified / opts.trials;
      rows.push_back(row);
    }
  }
  return rows;
}

void write_csv(std::ostream& os, const std::vector<BenchRow>& rows) {
  os << "m,n,edges,candidate_time_s,robust_time_s,success_rate_pct,trials,seed\n";
  for (const BenchRow& r : rows) {
    os << r.m << ',' << r.n << ',' << r.edges << ',' << std::fixed
       << std::setprecision(6) << r.candidate_time_s << ',' << r.robust_time_s
       << ',' << std::setprecision(2) << r.success_rate_pct << ',' << r.trials
       << ',' << r.seed << '\n';
    os.unsetf(std::ios::floatfield);
  }
}

}  // namespace rilp
