#pragma once

#include <cstdint>
#include <utility>

#include "pocut/graph.hpp"
#include "pocut/init.hpp"
#include "pocut/objective.hpp"
#include "pocut/partition.hpp"

namespace pocut {

// One Fiduccia-Mattheyses pass: up to n single-vertex moves, each taking the
// best-scoring unlocked vertex (MaxCut: max gain; MinQuotientCut: the move in
// the best gain bucket minimizing the exact resulting quotient, skipping
// moves that would empty a side), locking it, and updating neighbor gains;
// then rolls p back to the best-scoring move prefix. Returns whether that
// prefix strictly improved on the starting score.
bool fm_pass(const Graph& g, Partitioning& p, Objective objective);

struct FmStats {
  std::int64_t passes = 0;
  std::int64_t restarts = 0;
  double loop_seconds = 0.0;
};

// Local search driver: descend with fm_pass until a pass fails to improve,
// then restart from init_gen; repeats while time and restarts remain.
// time_budget > 0 is a limit in seconds, 0 returns p0 untouched, < 0 means
// untimed. max_restarts > 0 caps restarts (the descent from p0 is not
// counted); with max_restarts == 0 and no time limit, a single descent runs.
// Returns the best partitioning seen.
Partitioning fm_optimize(const Graph& g, const Partitioning& p0,
                         Objective objective, double time_budget,
                         std::uint64_t seed, const InitGen& init_gen,
                         std::int64_t max_restarts = 0,
                         FmStats* stats = nullptr);

}  // namespace pocut
