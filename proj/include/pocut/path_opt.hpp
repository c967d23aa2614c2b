#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "pocut/graph.hpp"
#include "pocut/objective.hpp"
#include "pocut/partition.hpp"

namespace pocut {

// A developing path of vertices to flip together: flip_cost tracks the
// change in cut count if the whole sequence toggles, and side_delta tracks
// (moved left-to-right) - (moved right-to-left). MaxCut paths alternate
// sides, so side_delta stays in {-1, 0, 1}; MinQuotientCut paths stay on
// one side, so side_delta is +-length.
struct AltPath {
  std::vector<int> seq;
  std::vector<char> in_path;  // indexed by vertex
  std::int64_t flip_cost = 0;
  int side_delta = 0;

  explicit AltPath(int n) : in_path(static_cast<std::size_t>(n), 0) {}
  void push(const Partitioning& p, int v, std::int64_t delta) {
    seq.push_back(v);
    in_path[v] = 1;
    flip_cost += delta;
    side_delta += p.side(v) == Side::Left ? 1 : -1;
  }
  int length() const { return static_cast<int>(seq.size()); }
};

// Cost change of appending v: delta = flip_cost(path + v) - flip_cost(path),
// in O(deg v). favorable means the growth rule accepts it: delta >= 0 for
// MaxCut, delta <= 0 for MinQuotientCut (delta counts raw cut edges).
std::pair<std::int64_t, bool> flip_cost_incr(const Graph& g,
                                             const Partitioning& p,
                                             const AltPath& path, int v,
                                             Objective objective);

// Grows a path from start, scanning candidates in adjacency-list order and
// appending the first favorable one until none qualifies. MaxCut extends
// from the newest vertex's opposite-side neighbors; MinQuotientCut from the
// second-newest vertex's same-side neighbors (the second vertex, having no
// second-newest yet, comes from start's same-side neighbors), so a
// minimization path is a connected same-side cluster.
AltPath develop_path(const Graph& g, const Partitioning& p, int start,
                     Objective objective);

struct PoConfig {
  int k_starts = 10;          // gain-ordered start candidates per iteration
  int stale_iters = 5;        // stale climbs before a restart
  int stale_restarts = 5;     // no-gain restarts before the run slice halts
  double time_budget = 0.0;   // seconds; <= 0 means no time limit
  std::int64_t max_restarts = 0;  // > 0 caps total restarts (deterministic)
  std::int64_t plateau_cap = 1;   // accepted flips past the incumbent before
                                  // the climb counts as stale (min 1)
};

struct PoStats {
  std::int64_t iterations = 0;
  std::int64_t flips = 0;  // accepted paths
  std::int64_t restarts = 0;
  std::int64_t path_len_sum = 0;  // over accepted paths
  double loop_seconds = 0.0;
  double mean_path_length() const {
    return flips ? static_cast<double>(path_len_sum) / static_cast<double>(flips)
                 : 0.0;
  }
};

// The PO driver: per iteration, try paths from the k_starts best-gain
// vertices (in shuffled order) and flip-flop the first one with favorable
// flip-cost — cut delta >= 0 for MaxCut, <= 0 for MinQuotientCut, rejecting
// paths that would empty a side. The best objective score seen is tracked as
// the incumbent; zero-cost flips let the walk drift across plateaus (and,
// for the quotient, across balance) while the cut never worsens within a
// climb. A climb ends when no start yields a favorable path or plateau_cap
// flips pass without the incumbent moving; stale_iters stale climbs trigger
// a fresh construct_w restart; stale restarts or the budget end the run.
// Returns the best partitioning seen. Stats accumulate into *stats when
// given.
Partitioning po_optimize(const Graph& g, const Partitioning& p0,
                         Objective objective, const PoConfig& cfg,
                         std::uint64_t seed, PoStats* stats = nullptr);

}  // namespace pocut
