#include "pocut/fm.hpp"

#include <algorithm>
#include <vector>

#include "pocut/gain_buckets.hpp"
#include "pocut/rng.hpp"
#include "pocut/timer.hpp"

namespace pocut {

bool fm_pass(const Graph& g, Partitioning& p, Objective objective) {
  const int n = g.n();
  if (n == 0) return false;
  const bool maxcut = objective == Objective::MaxCut;
  int maxdeg = 0;
  for (int v = 0; v < n; ++v) maxdeg = std::max(maxdeg, g.degree(v));
  GainBuckets buckets(n, maxdeg);
  for (int v = 0; v < n; ++v) buckets.insert(v, gain(g, p, v));

  const Score start = p.score();
  Score best = start;
  std::vector<int> moves;
  moves.reserve(static_cast<std::size_t>(n));
  std::size_t best_prefix = 0;

  for (int step = 0; step < n; ++step) {
    if (buckets.empty()) break;
    int v = -1;
    if (maxcut) {
      v = buckets.head(buckets.max_key());
    } else {
      // walk buckets upward; in the first bucket with a legal move pick the
      // one minimizing the exact resulting quotient, ties to the lower id
      for (int key = buckets.min_key(); key <= maxdeg && v < 0; ++key) {
        Score vq;
        for (int u = buckets.head(key); u >= 0; u = buckets.next(u)) {
          if (p.size_of(p.side(u)) == 1) continue;  // would empty a side
          const int nl = p.size_left() + (p.side(u) == Side::Left ? -1 : 1);
          const int nr = p.n() - nl;
          const Score cand{p.cut() + key,
                           static_cast<std::int64_t>(std::min(nl, nr))};
          if (v < 0 || better(objective, cand, vq) ||
              (cand == vq && u < v)) {
            v = u;
            vq = cand;
          }
        }
      }
      if (v < 0) break;  // every remaining move would empty a side
    }

    const Side old_side = p.side(v);
    p.flip(g, v);
    buckets.remove(v);
    for (int w : g.neighbors(v))
      if (buckets.contains(w))
        buckets.update(w, buckets.gain_of(w) + (p.side(w) == old_side ? -2 : 2));
    moves.push_back(v);
    const Score cur = p.score();
    if (better(objective, cur, best)) {
      best = cur;
      best_prefix = moves.size();
    }
  }

  for (std::size_t i = moves.size(); i > best_prefix; --i)
    p.flip(g, moves[i - 1]);
#ifndef NDEBUG
  p.check(g);
#endif
  return better(objective, best, start);
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

Partitioning fm_optimize(const Graph& g, const Partitioning& p0,
                         Objective objective, double time_budget,
                         std::uint64_t seed, const InitGen& init_gen,
                         std::int64_t max_restarts, FmStats* stats) {
  if (time_budget == 0.0) return p0;
  Rng rng = make_rng(seed);
  Stopwatch sw;
  sw.start();
  FmStats st;
  Partitioning p = p0;
  Incumbent best{p0, p0.score()};
  auto out_of_time = [&] {
    return time_budget > 0 && sw.seconds() >= time_budget;
  };

  for (;;) {
    for (;;) {
      if (out_of_time()) goto done;
      const bool improved = fm_pass(g, p, objective);
      ++st.passes;
      best.offer(objective, p);
      if (!improved) break;
    }
    if (out_of_time()) break;
    if (max_restarts > 0 && st.restarts >= max_restarts) break;
    if (time_budget < 0 && max_restarts == 0) break;  // single descent mode
    p = init_gen(g, rng);
    ++st.restarts;
    best.offer(objective, p);
  }
done:
  st.loop_seconds = sw.seconds();
  if (stats) {
    stats->passes += st.passes;
    stats->restarts += st.restarts;
    stats->loop_seconds += st.loop_seconds;
  }
  return best.p;
}

}  // namespace pocut
