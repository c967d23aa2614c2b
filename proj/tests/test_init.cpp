#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <vector>

#include "oracles.hpp"
#include "pocut/gen.hpp"
#include "pocut/init.hpp"

using namespace pocut;

TEST_CASE("init_random is deterministic and covers both sides") {
  Graph g = gen_random(100, 0.05, 3);
  Partitioning a = init_random(g, 12);
  Partitioning b = init_random(g, 12);
  for (int v = 0; v < g.n(); ++v) CHECK(a.side(v) == b.side(v));
  CHECK(a.size_left() > 0);
  CHECK(a.size_right() > 0);
  Partitioning c = init_random(g, 13);
  bool differs = false;
  for (int v = 0; v < g.n(); ++v) differs |= a.side(v) != c.side(v);
  CHECK(differs);
}

TEST_CASE("init_line needs coords and splits evenly") {
  Graph plain = gen_random(30, 0.1, 1);
  CHECK_THROWS_AS(init_line(plain, 5), std::invalid_argument);
  for (int n : {40, 41}) {
    Graph g = gen_geometric(n, 0.2, 2);
    Partitioning p = init_line(g, 5);
    CHECK(p.size_left() == n / 2);
    CHECK(p.size_right() == n - n / 2);
    Partitioning q = init_line(g, 5);
    for (int v = 0; v < n; ++v) CHECK(p.side(v) == q.side(v));
  }
}

TEST_CASE("line cuts a geometric graph far below random") {
  Graph g = gen_geometric(400, 0.08, 11);
  double line_sum = 0, rand_sum = 0;
  for (std::uint64_t s = 0; s < 10; ++s) {
    line_sum += static_cast<double>(init_line(g, s).cut());
    rand_sum += static_cast<double>(init_random(g, s).cut());
  }
  CHECK(line_sum < 0.5 * rand_sum);
}

TEST_CASE("diff state tracks placed neighbor counts incrementally") {
  Rng rng = make_rng(21);
  for (int rep = 0; rep < 10; ++rep) {
    Graph g = oracles::random_graph(rng, 120, 0.06);
    DiffState st(g);
    std::vector<int> order(static_cast<std::size_t>(g.n()));
    for (int v = 0; v < g.n(); ++v) order[static_cast<std::size_t>(v)] = v;
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<int> placed_side(static_cast<std::size_t>(g.n()), -1);
    for (int step = 0; step < g.n(); ++step) {
      const int v = order[static_cast<std::size_t>(step)];
      const Side s = bernoulli(rng, 0.5) ? Side::Right : Side::Left;
      st.place(g, v, s);
      placed_side[static_cast<std::size_t>(v)] = s == Side::Left ? 0 : 1;
      CHECK(st.placed(v));
      CHECK(st.unplaced_count() == g.n() - step - 1);
      for (int u = 0; u < g.n(); ++u) {
        if (placed_side[static_cast<std::size_t>(u)] >= 0) continue;
        int cl = 0, cr = 0;
        for (int w : g.neighbors(u)) {
          if (placed_side[static_cast<std::size_t>(w)] == 0) ++cl;
          if (placed_side[static_cast<std::size_t>(w)] == 1) ++cr;
        }
        CHECK(st.cnt(u, Side::Left) == cl);
        CHECK(st.cnt(u, Side::Right) == cr);
        CHECK(st.delta(u) == std::abs(cl - cr));
      }
    }
  }
}

TEST_CASE("select_diff picks extremes with the requested tiebreak") {
  // star plus pendant: vertex 0 adjacent to 1..4, vertex 5 adjacent to 4
  Graph g(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {4, 5}});
  DiffState st(g);
  Rng rng = make_rng(2);
  st.place(g, 1, Side::Left);
  st.place(g, 2, Side::Left);
  // deltas now: 0 -> 2, 3 -> 0, 4 -> 0, 5 -> 0
  CHECK(select_diff(g, st, DiffMode::MaxDiff, DiffTiebreak::Random, rng) == 0);
  // min-diff ties between 3, 4, 5; max degree prefers 4 (degree 2)
  CHECK(select_diff(g, st, DiffMode::MinDiff, DiffTiebreak::MaxDegreeThenRandom,
                    rng) == 4);
  Rng rng2 = make_rng(3);
  const int got =
      select_diff(g, st, DiffMode::MinDiff, DiffTiebreak::Random, rng2);
  CHECK((got == 3 || got == 4 || got == 5));
}

TEST_CASE("construct_w is deterministic and beats random starts on average") {
  Graph g = gen_random(200, 0.05, 9);
  Partitioning a = construct_w(g, Objective::MaxCut, 4);
  Partitioning b = construct_w(g, Objective::MaxCut, 4);
  for (int v = 0; v < g.n(); ++v) CHECK(a.side(v) == b.side(v));
  double w_sum = 0, r_sum = 0;
  for (std::uint64_t s = 0; s < 15; ++s) {
    w_sum += static_cast<double>(construct_w(g, Objective::MaxCut, s).cut());
    r_sum += static_cast<double>(init_random(g, s).cut());
  }
  CHECK(w_sum > r_sum);
}

TEST_CASE("construct_w maxcut cuts at least half the edges") {
  // each placement cuts at least as many new edges as it leaves uncut, and
  // every edge is charged exactly once, at its later endpoint
  for (std::uint64_t s = 0; s < 10; ++s) {
    Graph g = gen_random(80, 0.08, 14 + s);
    Partitioning p = construct_w(g, Objective::MaxCut, 77 + s);
    CHECK(2 * p.cut() >= g.m());
  }
}

TEST_CASE("quotient construct_w keeps both sides non-empty") {
  Graph g = gen_geometric(150, 0.12, 6);
  Partitioning p = construct_w(g, Objective::MinQuotientCut, 3);
  CHECK(p.score().min_side > 0);
}

TEST_CASE("make_init_gen dispatches by name") {
  Graph g = gen_geometric(60, 0.2, 8);
  Rng rng = make_rng(5);
  for (const char* name : {"random", "line", "w"}) {
    InitGen gen = make_init_gen(name, Objective::MaxCut);
    Partitioning p = gen(g, rng);
    CHECK(p.n() == g.n());
  }
  CHECK_THROWS_AS(make_init_gen("bogus", Objective::MaxCut),
                  std::invalid_argument);
}
