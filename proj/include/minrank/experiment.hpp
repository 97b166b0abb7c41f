#pragma once

#include <atomic>
#include <cstdint>
#include <cstdio>
#include <limits>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "minrank/bounds.hpp"
#include "minrank/common.hpp"
#include "minrank/graph.hpp"
#include "minrank/solver.hpp"

namespace minrank {

struct ExperimentConfig {
  std::vector<std::size_t> n_list;
  std::vector<double> p_list;
  std::size_t trials = 1;
  std::uint64_t seed = 0;
  std::uint32_t field_q = 2;
  std::uint64_t budget = kDefaultSolverBudget;
  unsigned jobs = 1;
  // exact-search limits; rows beyond them fall back to greedy / bracket
  std::size_t alpha_limit = kDefaultAlphaLimit;
  std::size_t cc_limit = kDefaultCliqueCoverLimit;
  std::size_t minrank_limit = kDefaultMinrankLimit;
};

struct ExperimentRow {
  std::size_t n = 0;
  double p = 0.0;
  std::uint64_t seed = 0;   // derived per-trial seed fed to gnp
  std::size_t trial = 0;    // trial index within (n, p)
  std::size_t alpha = 0;    // 0 when beyond the exact limit
  std::size_t cc = 0;
  std::string cc_mode;      // "exact" | "greedy"
  std::size_t minrank_lo = 0;
  std::size_t minrank_hi = 0;
  std::string status;       // "exact" | "undecided" | "bracket"
  double theory_lower = 0.0;
  double reference_scale = 0.0;
  double ratio = 0.0;       // minrank_hi / reference_scale
};

struct ExperimentReport {
  std::vector<ExperimentRow> rows;
};

namespace detail {

inline ExperimentRow run_trial(const ExperimentConfig& cfg, std::size_t n,
                               double p, std::size_t trial,
                               std::uint64_t global_index) {
  ExperimentRow row;
  row.n = n;
  row.p = p;
  row.trial = trial;
  row.seed = splitmix64_mix(cfg.seed ^ global_index);
  Graph g = gnp(n, p, row.seed);

  if (n <= cfg.alpha_limit && n <= 64) row.alpha = independence_number(g, cfg.alpha_limit);
  if (n <= cfg.cc_limit && n <= 64) {
    row.cc = clique_cover_exact(g, cfg.cc_limit).first;
    row.cc_mode = "exact";
  } else {
    row.cc = greedy_clique_cover(g).first;
    row.cc_mode = "greedy";
  }

  if (n <= cfg.minrank_limit) {
    MinrankResult res = minrank_exact(g, cfg.field_q, cfg.budget, cfg.minrank_limit);
    if (res.exact) {
      row.minrank_lo = row.minrank_hi = res.value;
      row.status = "exact";
    } else {
      row.minrank_lo = res.lower;
      row.minrank_hi = res.upper;
      row.status = "undecided";
    }
  } else {
    row.minrank_lo = std::max<std::size_t>(row.alpha, 1);
    row.minrank_hi = row.cc;
    row.status = "bracket";
  }

  const double inf = std::numeric_limits<double>::infinity();
  if (n >= 2 && p > 0.0 && p <= 1.0) {
    auto [lower, scale] = envelope(n, p);
    row.theory_lower = lower;
    row.reference_scale = scale;
  } else {
    row.theory_lower = inf;
    row.reference_scale = inf;
  }
  row.ratio = double(row.minrank_hi) / row.reference_scale;
  return row;
}

inline std::string fmt_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

}  // namespace detail

// Deterministic Monte Carlo report: rows ordered by (n, p, trial), each
// trial seeded from splitmix64(seed XOR global_trial_index), identical
// output for any worker count.
inline ExperimentReport run_experiment(const ExperimentConfig& cfg) {
  if (cfg.trials < 1) throw std::invalid_argument("run_experiment: trials < 1");
  if (cfg.n_list.empty() || cfg.p_list.empty())
    throw std::invalid_argument("run_experiment: empty n or p list");
  for (double p : cfg.p_list)
    if (p < 0.0 || p > 1.0)
      throw std::invalid_argument("run_experiment: p out of [0,1]");

  struct Task {
    std::size_t n;
    double p;
    std::size_t trial;
    std::uint64_t global_index;
  };
  std::vector<Task> tasks;
  std::uint64_t gidx = 0;
  for (std::size_t n : cfg.n_list)
    for (double p : cfg.p_list)
      for (std::size_t t = 0; t < cfg.trials; ++t)
        tasks.push_back({n, p, t, gidx++});

  ExperimentReport rep;
  rep.rows.resize(tasks.size());
  const unsigned jobs = std::max(1u, cfg.jobs);
  if (jobs == 1) {
    for (std::size_t i = 0; i < tasks.size(); ++i)
      rep.rows[i] = detail::run_trial(cfg, tasks[i].n, tasks[i].p,
                                      tasks[i].trial, tasks[i].global_index);
  } else {
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (;;) {
        std::size_t i = next.fetch_add(1);
        if (i >= tasks.size()) return;
        rep.rows[i] = detail::run_trial(cfg, tasks[i].n, tasks[i].p,
                                        tasks[i].trial, tasks[i].global_index);
      }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  return rep;
}

inline const char* kReportCsvHeader =
    "n,p,seed,trial,alpha,cc,cc_mode,minrank_lo,minrank_hi,status,"
    "theory_lower,reference_scale,ratio";

inline std::string report_to_csv(const ExperimentReport& rep) {
  std::string out = kReportCsvHeader;
  out += '\n';
  for (const auto& r : rep.rows) {
    out += std::to_string(r.n) + ',' + detail::fmt_double(r.p) + ',' +
           std::to_string(r.seed) + ',' + std::to_string(r.trial) + ',' +
           std::to_string(r.alpha) + ',' + std::to_string(r.cc) + ',' +
           r.cc_mode + ',' + std::to_string(r.minrank_lo) + ',' +
           std::to_string(r.minrank_hi) + ',' + r.status + ',' +
           detail::fmt_double(r.theory_lower) + ',' +
           detail::fmt_double(r.reference_scale) + ',' +
           detail::fmt_double(r.ratio) + '\n';
  }
  return out;
}

}  // namespace minrank
