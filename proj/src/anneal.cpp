#include "pocut/anneal.hpp"

#include <algorithm>
#include <cmath>

#include "pocut/rng.hpp"
#include "pocut/timer.hpp"

namespace pocut {

double sa_cost(const Graph& g, const Partitioning& p, Objective objective,
               double alpha) {
  if (objective == Objective::MaxCut) return -static_cast<double>(p.cut());
  const double dl = p.size_left() - p.size_right();
  return static_cast<double>(p.cut()) + alpha * dl * dl / std::max(1, g.n());
}

namespace {

// Cost change of flipping v, from exact integer state.
double flip_delta(const Graph& g, const Partitioning& p, Objective objective,
                  double alpha, int v) {
  const int dcut = gain(g, p, v);
  if (objective == Objective::MaxCut) return -static_cast<double>(dcut);
  const double dl = p.size_left() - p.size_right();
  const double dl2 = dl + (p.side(v) == Side::Left ? -2.0 : 2.0);
  return static_cast<double>(dcut) +
         alpha * (dl2 * dl2 - dl * dl) / std::max(1, g.n());
}

// Random walk from a random partitioning; returns the mean positive cost
// delta (0 if none) and the number of proposals made.
double trial_walk(const Graph& g, Objective objective, const SaConfig& cfg,
                  std::uint64_t seed, std::int64_t* proposals_out) {
  Rng rng = make_rng(seed);
  Partitioning p = init_random(g, rng());
  const std::int64_t props =
      static_cast<std::int64_t>(cfg.trial_flips_per_vertex) * g.n();
  if (proposals_out) *proposals_out = props;
  if (g.n() == 0) return 0.0;
  double up_sum = 0.0;
  std::int64_t up_cnt = 0;
  for (std::int64_t i = 0; i < props; ++i) {
    const int v = static_cast<int>(uniform_below(rng, g.n()));
    const double d = flip_delta(g, p, objective, cfg.balance_alpha, v);
    if (d > 0) {
      up_sum += d;
      ++up_cnt;
    }
    p.flip(g, v);
  }
  return up_cnt ? up_sum / static_cast<double>(up_cnt) : 0.0;
}

struct Incumbent {
  Partitioning p;
  Score score;

  bool offer(Objective obj, const Partitioning& cand) {
    if (!better(obj, cand.score(), score)) return false;
    p = cand;
    score = cand.score();
    return true;
  }
};

}  // namespace

double sa_trial_init(const Graph& g, Objective objective, const SaConfig& cfg,
                     std::uint64_t seed) {
  const double mean_up = trial_walk(g, objective, cfg, seed, nullptr);
  if (mean_up <= 0.0) return 1.0;
  return -mean_up / std::log(cfg.init_accept_target);
}

Partitioning sa_run(const Graph& g, Objective objective, const SaConfig& cfg,
                    double time_budget, std::uint64_t seed,
                    const InitGen& init_gen, SaStats* stats) {
  Rng rng = make_rng(seed);
  SaStats st;
  if (time_budget == 0.0 || g.n() == 0) {
    Partitioning p = init_gen(g, rng);
    if (stats) *stats = st;
    return p;
  }

  Stopwatch sw;
  sw.start();
  std::int64_t trial_props = 0;
  const double mean_up = trial_walk(g, objective, cfg, rng(), &trial_props);
  const double trial_seconds = sw.seconds();
  const double t0 =
      mean_up > 0.0 ? -mean_up / std::log(cfg.init_accept_target) : 1.0;
  if (!cfg.include_trial_in_budget) {
    sw.reset();
    sw.start();
  }
  st.t0 = t0;

  double ratio = cfg.cooling_ratio;
  if (cfg.long_run) {
    std::int64_t stages = cfg.long_run_stages;
    if (stages <= 0) {
      // stretch the schedule over the budget using the trial's measured rate
      const double rate = trial_seconds > 0
                              ? static_cast<double>(trial_props) / trial_seconds
                              : 1e6;
      const double total = rate * std::max(0.0, time_budget);
      const double per_stage =
          std::max(1.0, cfg.temp_length_factor * std::max(1, g.n()));
      stages = std::max<std::int64_t>(
          1, static_cast<std::int64_t>(total / per_stage));
    }
    if (t0 > 0.01)
      ratio = std::pow(0.01 / t0, 1.0 / static_cast<double>(stages));
    ratio = std::clamp(ratio, 1e-6, 0.999999);
  }
  st.ratio_used = ratio;

  const std::int64_t stage_props = std::max<std::int64_t>(
      1, static_cast<std::int64_t>(cfg.temp_length_factor * g.n()));
  auto out_of_time = [&] {
    return time_budget > 0 && sw.seconds() >= time_budget;
  };
  // the trial walk flips on every proposal, so its rate undershoots the
  // anneal loop's; an auto-stretched schedule is re-fit to the remaining
  // budget from the in-run rate as stages complete
  const bool restretch =
      cfg.long_run && cfg.long_run_stages <= 0 && time_budget > 0;

  Incumbent best{Partitioning(), Score{0, 0}};
  bool have_best = false;

  while (!out_of_time()) {
    Partitioning p = init_gen(g, rng);
    ++st.anneals;
    if (!have_best) {
      best = Incumbent{p, p.score()};
      have_best = true;
    } else {
      best.offer(objective, p);
    }

    // within an anneal the incumbent is the lowest-cost state seen
    Partitioning run_best = p;
    double run_best_cost = sa_cost(g, p, objective, cfg.balance_alpha);
    double T = t0;
    int consec_cold = 0;
    std::int64_t run_props = 0;
    bool stop = false;
    while (!stop) {
      std::int64_t accepted = 0;
      std::int64_t made = 0;
      for (std::int64_t i = 0; i < stage_props; ++i) {
        const int v = static_cast<int>(uniform_below(rng, g.n()));
        const double d =
            flip_delta(g, p, objective, cfg.balance_alpha, v);
        ++made;
        if (d <= 0 || uniform_double(rng) < std::exp(-d / T)) {
          p.flip(g, v);
          ++accepted;
          const double c = sa_cost(g, p, objective, cfg.balance_alpha);
          if (c < run_best_cost) {
            run_best_cost = c;
            run_best = p;
          }
        }
        if ((i & 1023) == 0 && out_of_time()) {
          stop = true;
          break;
        }
      }
      ++st.stages;
      st.proposals += made;
      st.acceptances += accepted;
      run_props += made;
      if (stop) break;
      if (static_cast<double>(accepted) <
          cfg.freeze_accept_threshold * static_cast<double>(stage_props)) {
        if (++consec_cold >= cfg.freeze_stages) break;
      } else {
        consec_cold = 0;
      }
      if (restretch && T > 0.01) {
        const double elapsed = sw.seconds();
        const double remaining = time_budget - elapsed;
        if (remaining > 0 && elapsed > 0) {
          const double rate = static_cast<double>(run_props) / elapsed;
          const double s_rem = std::max(
              1.0, rate * remaining / static_cast<double>(stage_props));
          ratio = std::clamp(std::pow(0.01 / T, 1.0 / s_rem), 1e-6, 0.999999);
        }
      }
      T *= ratio;
      if (T < cfg.temp_floor) break;
    }

    best.offer(objective, run_best);
    // a timed long run that freezes early re-enters with the remaining
    // budget; untimed long runs are a single anneal
    if (cfg.long_run && time_budget < 0) break;
    if (cfg.max_anneals > 0 && st.anneals >= cfg.max_anneals) break;
    if (time_budget < 0 && cfg.max_anneals == 0) break;  // single anneal
  }

  if (!have_best) {
    // the budget expired before the first anneal began
    best = Incumbent{init_gen(g, rng), Score{}};
  }
  st.loop_seconds = sw.seconds();
  if (stats) {
    stats->anneals += st.anneals;
    stats->stages += st.stages;
    stats->proposals += st.proposals;
    stats->acceptances += st.acceptances;
    stats->t0 = st.t0;
    stats->ratio_used = st.ratio_used;
    stats->loop_seconds += st.loop_seconds;
  }
  return best.p;
}

}  // namespace pocut
