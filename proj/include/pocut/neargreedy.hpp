#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "pocut/gen.hpp"
#include "pocut/graph.hpp"
#include "pocut/objective.hpp"
#include "pocut/partition.hpp"

namespace pocut {

enum class NgOrdering { Random, MaxDiffMaxDegree };

enum class StepLabel : std::uint8_t { Greedy = 0, NonGreedy = 1 };

struct PlacementTrace {
  std::vector<int> order;         // permutation of V, placement order
  std::vector<StepLabel> labels;  // one per placement
  // edges of the still-unplaced subgraph before each placement; the average
  // degree there is 2*rem_edges[i] / (n - i), and keeping the integer makes
  // ensemble aggregation exact
  std::vector<std::int64_t> rem_edges;
};

// Replays a constructive placement against a target partitioning: vertices
// are selected by the ordering policy and placed on their target side; a
// placement is GREEDY iff its side is at least as good as the other side for
// the incremental objective (cut edges added; ties are GREEDY).
PlacementTrace replay_label(const Graph& g, const Partitioning& target,
                            NgOrdering ordering, Objective objective,
                            std::uint64_t seed);

struct FitResult {
  double a = 0.0;
  double b = 0.0;
  double r_squared = 0.0;
  double residual_se = 0.0;
};

// OLS of raw[i] on 1/sqrt(i), i = 1-based over the whole vector.
// Throws std::invalid_argument on fewer than 2 points.
FitResult fit_ng(std::span<const double> raw);

struct NgProfile {
  std::vector<double> raw;    // per placement index: non-greedy fraction
  std::vector<double> probs;  // 100 percentile-bin means of raw
  double a = 0.0, b = 0.0;
  double r_squared = 0.0;
  double residual_se = 0.0;
  std::int64_t ensemble_size = 0;
  std::vector<double> rem_avg_degree;  // ensemble mean per placement index
};

std::vector<double> percentile_bins(std::span<const double> raw, int bins);

// Oracle choices for estimate_ng: "kl" (the default FM local search), "po",
// "sa", "w".
struct NgConfig {
  NgOrdering ordering = NgOrdering::MaxDiffMaxDegree;
  std::string oracle = "kl";
  std::int64_t oracle_restarts = 1;  // restarts the oracle may spend per graph
  int jobs = 1;
};

// Runs the oracle on ensemble_size graphs drawn from spec with derived
// seeds, replay-labels each result, and aggregates: raw[i] = fraction of
// graphs whose i-th placement was non-greedy, plus the percentile curve and
// the fit. Deterministic for a given (spec, cfg, seed), independent of jobs.
NgProfile estimate_ng(const GenSpec& spec, Objective objective,
                      const NgConfig& cfg, std::int64_t ensemble_size,
                      std::uint64_t seed);

// Fitted F(i) clamped to [0,1]; i is 1-based.
double profile_f(const NgProfile& profile, int i);

// Constructive placement with max-diff/max-degree selection that goes
// anti-greedy at step i with probability F(i) (ties split randomly).
Partitioning pg_construct(const Graph& g, Objective objective,
                          const NgProfile& profile, std::uint64_t seed);

struct PgStats {
  std::int64_t constructs = 0;
  double loop_seconds = 0.0;
};

// Best of repeated pg_construct calls. time_budget: > 0 seconds, <= 0
// untimed (requires max_restarts > 0); max_restarts > 0 caps constructions.
Partitioning pg_run(const Graph& g, Objective objective,
                    const NgProfile& profile, double time_budget,
                    std::uint64_t seed, std::int64_t max_restarts = 0,
                    PgStats* stats = nullptr);

// Profile file: "# format v1", then "a b r2 stderr n" on one line, then n
// raw values one per line.
void save_profile(const NgProfile& profile, std::ostream& out);
void save_profile_file(const NgProfile& profile, const std::string& path);
NgProfile load_profile(std::istream& in);
NgProfile load_profile_file(const std::string& path);

}  // namespace pocut
