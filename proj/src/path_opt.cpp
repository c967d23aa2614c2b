#include "pocut/path_opt.hpp"

#include <algorithm>
#include <stdexcept>

#include "pocut/gain_buckets.hpp"
#include "pocut/init.hpp"
#include "pocut/rng.hpp"
#include "pocut/timer.hpp"

namespace pocut {

std::pair<std::int64_t, bool> flip_cost_incr(const Graph& g,
                                             const Partitioning& p,
                                             const AltPath& path, int v,
                                             Objective objective) {
  if (path.in_path[v])
    throw std::invalid_argument("flip_cost_incr: vertex already in path");
  const Side sv = p.side(v);
  std::int64_t delta = 0;
  for (int w : g.neighbors(v)) {
    if (path.in_path[w]) {
      // edge (v,w) stops being external to the path: undo w's earlier
      // contribution for it; the edge itself keeps its cut state
      delta += (p.side(w) != sv) ? 1 : -1;
    } else {
      delta += (p.side(w) == sv) ? 1 : -1;
    }
  }
  const bool favorable =
      objective == Objective::MaxCut ? delta >= 0 : delta <= 0;
  return {delta, favorable};
}

AltPath develop_path(const Graph& g, const Partitioning& p, int start,
                     Objective objective) {
  AltPath path(g.n());
  path.push(p, start, flip_cost_incr(g, p, path, start, objective).first);
  for (;;) {
    int anchor;
    Side want;
    if (objective == Objective::MaxCut) {
      anchor = path.seq.back();
      want = other(p.side(anchor));
    } else if (path.length() == 1) {
      anchor = start;
      want = p.side(start);
    } else {
      anchor = path.seq[path.seq.size() - 2];
      want = p.side(anchor);
    }
    bool grew = false;
    for (int w : g.neighbors(anchor)) {
      if (path.in_path[w] || p.side(w) != want) continue;
      auto [delta, favorable] = flip_cost_incr(g, p, path, w, objective);
      if (!favorable) continue;
      path.push(p, w, delta);
      grew = true;
      break;
    }
    if (!grew) return path;
  }
}

namespace {

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

Partitioning po_optimize(const Graph& g, const Partitioning& p0,
                         Objective objective, const PoConfig& cfg,
                         std::uint64_t seed, PoStats* stats) {
  Rng rng = make_rng(seed);
  Stopwatch sw;
  sw.start();
  const bool maxcut = objective == Objective::MaxCut;
  PoStats st;

  Partitioning p = p0;
  Incumbent best{p0, p0.score()};

  int maxdeg = 0;
  for (int v = 0; v < g.n(); ++v) maxdeg = std::max(maxdeg, g.degree(v));
  GainBuckets buckets(g.n(), maxdeg);
  auto rebuild = [&] {
    buckets.clear();
    for (int v = 0; v < g.n(); ++v) buckets.insert(v, gain(g, p, v));
  };
  rebuild();

  std::vector<int> starts;
  const std::int64_t plateau_cap = std::max<std::int64_t>(1, cfg.plateau_cap);
  std::int64_t sideways = 0;     // accepted flips since the incumbent moved
  bool climb_improved = false;   // incumbent moved during the current climb
  int stale_climbs = 0;
  int consec_stale_restarts = 0;
  bool in_restart_episode = false;
  bool episode_improved = false;

  auto out_of_time = [&] {
    return cfg.time_budget > 0 && sw.seconds() >= cfg.time_budget;
  };

  while (g.n() > 0 && !out_of_time()) {
    ++st.iterations;
    buckets.best_k(maxcut, cfg.k_starts, starts);
    std::shuffle(starts.begin(), starts.end(), rng);
    bool accepted = false;
    for (int s : starts) {
      AltPath path = develop_path(g, p, s, objective);
      if (maxcut) {
        if (path.flip_cost < 0) continue;
      } else {
        if (path.flip_cost > 0) continue;
        const int new_left = p.size_left() - path.side_delta;
        const int new_right = p.size_right() + path.side_delta;
        if (new_left == 0 || new_right == 0) continue;
      }
      for (int v : path.seq) p.flip(g, v);
      for (int v : path.seq) {
        buckets.update(v, gain(g, p, v));
        for (int w : g.neighbors(v)) buckets.update(w, gain(g, p, w));
      }
      ++st.flips;
      st.path_len_sum += path.length();
      accepted = true;
      break;
    }

    if (accepted) {
      if (best.offer(objective, p)) {
        climb_improved = true;
        episode_improved = true;
        sideways = 0;
        continue;
      }
      if (++sideways < plateau_cap) continue;
    }

    // climb over: either no start yields a favorable path or the walk has
    // drifted plateau_cap flips past the incumbent
    sideways = 0;
    if (climb_improved) {
      climb_improved = false;
      stale_climbs = 0;
      continue;
    }
    if (++stale_climbs < cfg.stale_iters) continue;
    stale_climbs = 0;

    // episode over: score the restart streak, then draw a fresh start
    if (in_restart_episode) {
      consec_stale_restarts = episode_improved ? 0 : consec_stale_restarts + 1;
      if (consec_stale_restarts >= cfg.stale_restarts) break;
    }
    if (cfg.max_restarts > 0 && st.restarts >= cfg.max_restarts) break;
    p = construct_w(g, objective, rng());
    ++st.restarts;
    rebuild();
    in_restart_episode = true;
    episode_improved = best.offer(objective, p);
  }

  st.loop_seconds = sw.seconds();
  if (stats) {
    stats->iterations += st.iterations;
    stats->flips += st.flips;
    stats->restarts += st.restarts;
    stats->path_len_sum += st.path_len_sum;
    stats->loop_seconds += st.loop_seconds;
  }
  return best.p;
}

}  // namespace pocut
