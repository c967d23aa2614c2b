#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "pocut/anneal.hpp"
#include "pocut/gen.hpp"
#include "pocut/neargreedy.hpp"
#include "pocut/objective.hpp"
#include "pocut/path_opt.hpp"
#include "pocut/stats.hpp"

namespace pocut {

struct TrialResult {
  std::string algo;      // token as requested, e.g. "po" or "kl:line"
  std::string graph_id;  // genspec string
  std::uint64_t graph_seed = 0;
  std::int64_t graph_m = 0;
  Objective objective = Objective::MaxCut;
  Score best;
  double best_value = 0.0;    // objective value of best
  double budget_s = 0.0;      // configured per-trial budget (0 in restart mode)
  double loop_seconds = 0.0;  // measured optimization-loop time
  double mean_path_len = -1.0;  // po only, -1 elsewhere
  std::string extra;            // per-algorithm counters, key=value form
  bool failed = false;
  std::string error;
};

struct AlgoSummary {
  std::string algo;
  CiSummary cuts;        // over per-graph best cut counts
  double mean_value = 0.0;      // mean best objective value
  double mean_cut_percent = 0.0;  // mean of 100*cuts/m
  double mean_loop_seconds = 0.0;
  int failures = 0;
};

struct BenchConfig {
  std::vector<std::string> algos;  // po | kl | sa | pg | w, optional ":init"
  Objective objective = Objective::MaxCut;
  double per_graph_time = 1.0;  // seconds per trial
  std::int64_t restarts = 0;    // > 0: deterministic restart-count mode,
                                // wall time is ignored
  std::uint64_t seed = 0;
  int jobs = 1;  // timed runs should keep 1 so trials do not share the core
  std::string profile_path;  // required by pg
  PoConfig po;
  SaConfig sa;
  bool sa_long_auto = true;  // long_run follows the objective (MaxCut: on)
};

struct BenchOutput {
  std::vector<TrialResult> results;  // graph-major; per graph, cfg.algos order
  std::vector<AlgoSummary> summaries;
};

// One algorithm on one graph under cfg's budget rules (cfg.algos is ignored
// here). profile may be null unless the token is pg; best_out, when given,
// receives the winning partitioning. Failures land in the result, not as
// exceptions.
TrialResult run_single(const Graph& g, const std::string& graph_id,
                       std::uint64_t graph_seed, const std::string& algo_token,
                       const BenchConfig& cfg, const NgProfile* profile,
                       std::uint64_t trial_seed,
                       Partitioning* best_out = nullptr);

// Runs every algo on every suite graph with equal budgets. Trial seeds are
// derived from cfg.seed by (graph, algo) index, so output is deterministic
// given the config (loop_seconds aside). Failures are recorded on the trial
// and excluded from summaries.
BenchOutput run_benchmark(const std::vector<GenSpec>& suite,
                          const BenchConfig& cfg);

// One genspec per line; blank lines and # comments skipped.
std::vector<GenSpec> load_suite(std::istream& in);
std::vector<GenSpec> load_suite_file(const std::string& path);

void emit_human_table(const BenchOutput& out, std::ostream& os);
// algo,graph,seed,objective,score,cuts,time_s -- time_s is the configured
// budget so reruns of a deterministic config are bit-identical.
void emit_csv(const BenchOutput& out, std::ostream& os);
// algo,lo,mean,hi over best cut counts (only algos with >= 2 samples).
void emit_intervals(const BenchOutput& out, std::ostream& os);

}  // namespace pocut
