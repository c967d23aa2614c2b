#pragma once

#include <cstdint>

#include "pocut/graph.hpp"
#include "pocut/init.hpp"
#include "pocut/objective.hpp"
#include "pocut/partition.hpp"

namespace pocut {

struct SaConfig {
  double cooling_ratio = 0.95;      // temperature factor per stage
  double temp_length_factor = 16.0; // proposals per stage = factor * n
  double init_accept_target = 0.4;  // uphill acceptance the trial tunes T0 to
  int freeze_stages = 5;            // consecutive cold stages that end a run
  double freeze_accept_threshold = 0.02;
  // zero-delta flips are always accepted, so plateau-heavy instances can
  // hold the acceptance rate over the threshold forever; a stage starting
  // below this temperature counts as frozen (uphill odds there are ~0)
  double temp_floor = 0.001;
  double balance_alpha = 0.05;      // quotient imbalance penalty weight
  bool long_run = false;            // one budget-spanning anneal
  std::int64_t long_run_stages = 0; // 0: derive from the trial's speed
  std::int64_t max_anneals = 0;     // > 0 caps anneals (deterministic runs)
  bool include_trial_in_budget = false;
  int trial_flips_per_vertex = 10;
};

// The annealing energy: MaxCut is -cut; MinQuotientCut is
// cut + alpha * (size_left - size_right)^2 / n. Lower is better for both.
double sa_cost(const Graph& g, const Partitioning& p, Objective objective,
               double alpha);

// Random-walk trial: trial_flips_per_vertex * n uniformly random flips from
// a random partitioning; returns T0 with exp(-mean_uphill/T0) =
// init_accept_target. Falls back to 1 when no uphill move is seen.
double sa_trial_init(const Graph& g, Objective objective, const SaConfig& cfg,
                     std::uint64_t seed);

struct SaStats {
  std::int64_t anneals = 0;
  std::int64_t stages = 0;
  std::int64_t proposals = 0;
  std::int64_t acceptances = 0;
  double t0 = 0.0;
  double ratio_used = 0.0;
  double loop_seconds = 0.0;
};

// Metropolis single-flip annealing. Each anneal starts from init_gen, runs
// temp_length_factor * n proposals per stage, cools by cooling_ratio, and
// freezes after freeze_stages consecutive stages below the acceptance
// threshold. With cfg.long_run one anneal's ratio is stretched to
// (0.01/T0)^(1/S) so the schedule spans the budget (S from cfg or the
// trial's measured speed); otherwise anneals repeat while time remains.
// time_budget: > 0 seconds, 0 returns a bare initial partitioning, < 0
// untimed (pair with max_anneals or long_run_stages). Best seen (by the true
// objective across anneals) is returned; the trial run is excluded from the
// budget unless cfg says otherwise.
Partitioning sa_run(const Graph& g, Objective objective, const SaConfig& cfg,
                    double time_budget, std::uint64_t seed,
                    const InitGen& init_gen, SaStats* stats = nullptr);

}  // namespace pocut
