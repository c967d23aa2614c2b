#include "pocut/init.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace pocut {

DiffState::DiffState(const Graph& g)
    : placed_(static_cast<std::size_t>(g.n()), 0),
      cnt_left_(static_cast<std::size_t>(g.n()), 0),
      cnt_right_(static_cast<std::size_t>(g.n()), 0),
      unplaced_(g.n()) {}

void DiffState::place(const Graph& g, int v, Side s) {
  placed_[v] = 1;
  --unplaced_;
  auto& cnt = (s == Side::Left) ? cnt_left_ : cnt_right_;
  for (int w : g.neighbors(v))
    if (!placed_[w]) ++cnt[w];
}

int select_diff(const Graph& g, const DiffState& state, DiffMode mode,
                DiffTiebreak tiebreak, Rng& rng) {
  int best = -1, best_delta = 0, best_deg = 0;
  std::uint64_t ties = 0;
  for (int v = 0; v < g.n(); ++v) {
    if (state.placed(v)) continue;
    const int d = state.delta(v);
    if (best >= 0) {
      const int cmp = (mode == DiffMode::MaxDiff) ? d - best_delta
                                                  : best_delta - d;
      if (cmp < 0) continue;
      if (cmp == 0) {
        if (tiebreak == DiffTiebreak::MaxDegreeThenRandom) {
          if (g.degree(v) < best_deg) continue;
          if (g.degree(v) == best_deg) {
            // reservoir pick keeps the selection uniform over the tie set
            if (uniform_below(rng, ++ties) != 0) continue;
            best = v;
            continue;
          }
        } else {
          if (uniform_below(rng, ++ties) != 0) continue;
          best = v;
          continue;
        }
      }
    }
    best = v;
    best_delta = d;
    best_deg = g.degree(v);
    ties = 1;
  }
  if (best < 0) throw std::logic_error("select_diff: no unplaced vertex");
  return best;
}

Partitioning init_random(const Graph& g, std::uint64_t seed) {
  Rng rng = make_rng(seed);
  std::vector<Side> side(static_cast<std::size_t>(g.n()));
  for (auto& s : side)
    s = uniform_below(rng, 2) == 0 ? Side::Left : Side::Right;
  return Partitioning(g, std::move(side));
}

Partitioning init_line(const Graph& g, std::uint64_t seed) {
  if (!g.has_coords())
    throw std::invalid_argument("init_line: graph has no coordinates");
  Rng rng = make_rng(seed);
  const double theta = uniform_double(rng) * std::numbers::pi;
  const double cx = std::cos(theta), cy = std::sin(theta);
  std::vector<int> order(static_cast<std::size_t>(g.n()));
  std::vector<double> proj(static_cast<std::size_t>(g.n()));
  for (int v = 0; v < g.n(); ++v) {
    order[v] = v;
    proj[v] = g.coords()[v].x * cx + g.coords()[v].y * cy;
  }
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return proj[a] != proj[b] ? proj[a] < proj[b] : a < b;
  });
  std::vector<Side> side(static_cast<std::size_t>(g.n()), Side::Right);
  for (int i = 0; i < g.n() / 2; ++i) side[order[i]] = Side::Left;
  return Partitioning(g, std::move(side));
}

namespace {

// signed-diff selection for minimization: the vertex most committed to one
// side among those with a placed neighbor (uniform over untouched vertices
// when none has one, which also seeds each component)
int select_committed(const Graph& g, const DiffState& st, Rng& rng) {
  int best = -1, best_delta = -1;
  std::uint64_t ties = 0;
  bool have_touched = false;
  for (int v = 0; v < g.n(); ++v) {
    if (st.placed(v)) continue;
    const int cl = st.cnt(v, Side::Left), cr = st.cnt(v, Side::Right);
    const bool touched = cl + cr > 0;
    if (touched && !have_touched) {
      have_touched = true;
      best = -1;
    }
    if (have_touched && !touched) continue;
    const int d = touched ? (cl > cr ? cl - cr : cr - cl) : 0;
    if (best >= 0) {
      if (d < best_delta) continue;
      if (d == best_delta) {
        if (uniform_below(rng, ++ties) != 0) continue;
        best = v;
        continue;
      }
    }
    best = v;
    best_delta = d;
    ties = 1;
  }
  if (best < 0) throw std::logic_error("select_committed: no unplaced vertex");
  return best;
}

}  // namespace

Partitioning construct_w(const Graph& g, Objective objective,
                         std::uint64_t seed) {
  Rng rng = make_rng(seed);
  DiffState st(g);
  std::vector<Side> side(static_cast<std::size_t>(g.n()), Side::Left);
  int size_l = 0, size_r = 0;
  const int cap = (g.n() + 1) / 2;
  for (int step = 0; step < g.n(); ++step) {
    int v;
    const bool maxcut = objective == Objective::MaxCut;
    if (maxcut)
      v = select_diff(g, st, DiffMode::MaxDiff, DiffTiebreak::Random, rng);
    else
      v = select_committed(g, st, rng);
    const int cl = st.cnt(v, Side::Left), cr = st.cnt(v, Side::Right);
    // placing LEFT cuts the cr edges to RIGHT neighbors, and vice versa
    Side s;
    if (maxcut) {
      if (cr != cl)
        s = cr > cl ? Side::Left : Side::Right;
      else
        s = uniform_below(rng, 2) == 0 ? Side::Left : Side::Right;
    } else {
      // cut-greedy with a half cap so the grown side stops at n/2
      if (size_l >= cap)
        s = Side::Right;
      else if (size_r >= cap)
        s = Side::Left;
      else if (cr != cl)
        s = cr < cl ? Side::Left : Side::Right;
      else if (size_l != size_r)
        s = size_l < size_r ? Side::Left : Side::Right;
      else
        s = uniform_below(rng, 2) == 0 ? Side::Left : Side::Right;
    }
    side[v] = s;
    ++(s == Side::Left ? size_l : size_r);
    st.place(g, v, s);
  }
  return Partitioning(g, std::move(side));
}

InitGen make_init_gen(const std::string& name, Objective objective) {
  if (name == "random")
    return [](const Graph& g, Rng& rng) { return init_random(g, rng()); };
  if (name == "line")
    return [](const Graph& g, Rng& rng) { return init_line(g, rng()); };
  if (name == "w")
    return [objective](const Graph& g, Rng& rng) {
      return construct_w(g, objective, rng());
    };
  throw std::invalid_argument("unknown init method: " + name +
                              " (expected random, line, or w)");
}

}  // namespace pocut
