#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <set>
#include <sstream>

#include "pocut/gen.hpp"
#include "pocut/graph.hpp"

using namespace pocut;

namespace {

bool same_edges(const Graph& a, const Graph& b) {
  return a.n() == b.n() &&
         std::vector<std::pair<int, int>>(a.edges().begin(),
                                          a.edges().end()) ==
             std::vector<std::pair<int, int>>(b.edges().begin(),
                                              b.edges().end());
}

}  // namespace

TEST_CASE("random graphs are deterministic per seed") {
  Graph a = gen_random(120, 0.1, 42);
  Graph b = gen_random(120, 0.1, 42);
  Graph c = gen_random(120, 0.1, 43);
  CHECK(same_edges(a, b));
  CHECK(!same_edges(a, c));
}

TEST_CASE("random graph edge probability extremes and density") {
  CHECK(gen_random(80, 0.0, 1).m() == 0);
  CHECK(gen_random(80, 1.0, 1).m() == 80 * 79 / 2);
  // m ~ Binomial(n(n-1)/2, p): mean 1131.3, sd ~33; allow 6 sigma
  const Graph g = gen_random(150, 0.1011, 7);
  const double mean = 150.0 * 149.0 / 2.0 * 0.1011;
  CHECK(std::abs(g.m() - mean) < 6 * std::sqrt(mean * (1 - 0.1011)));
}

TEST_CASE("geometric graph matches its distance rule exactly") {
  const double d = 0.18;
  Graph g = gen_geometric(90, d, 5);
  REQUIRE(g.has_coords());
  std::set<std::pair<int, int>> edges(g.edges().begin(), g.edges().end());
  int expected = 0;
  for (int u = 0; u < g.n(); ++u) {
    const auto& cu = g.coords()[static_cast<std::size_t>(u)];
    CHECK(cu.x >= 0.0);
    CHECK(cu.x < 1.0);
    CHECK(cu.y >= 0.0);
    CHECK(cu.y < 1.0);
    for (int v = u + 1; v < g.n(); ++v) {
      const auto& cv = g.coords()[static_cast<std::size_t>(v)];
      const double dx = cu.x - cv.x, dy = cu.y - cv.y;
      const bool close = dx * dx + dy * dy < d * d;
      if (close) ++expected;
      CHECK(edges.count({u, v}) == (close ? 1u : 0u));
    }
  }
  CHECK(g.m() == expected);
}

TEST_CASE("regular graphs hit the requested degree") {
  for (auto [n, r] : {std::pair{20, 3}, {50, 4}, {9, 8}, {64, 7}}) {
    Graph g = gen_regular(n, r, 99);
    for (int v = 0; v < n; ++v) CHECK(g.degree(v) == r);
    CHECK(same_edges(g, gen_regular(n, r, 99)));
  }
  CHECK_THROWS_AS(gen_regular(11, 3, 1), std::invalid_argument);  // odd n*r
  CHECK_THROWS_AS(gen_regular(5, 5, 1), std::invalid_argument);   // r >= n
}

TEST_CASE("unbalanced random blocks") {
  // blocks [0, n/2) and [n/2, n)
  Graph cliques = gen_unbalanced_random(40, 1.0, 0.0, 3);
  for (const auto& [u, v] : cliques.edges()) CHECK((u < 20) == (v < 20));
  CHECK(cliques.m() == 2 * (20 * 19 / 2));
  Graph bip = gen_unbalanced_random(40, 0.0, 1.0, 3);
  for (const auto& [u, v] : bip.edges()) CHECK((u < 20) != (v < 20));
  CHECK(bip.m() == 20 * 20);
}

TEST_CASE("unbalanced regular degrees split within and across halves") {
  const int n = 40, k1 = 4, k2 = 3;
  Graph g = gen_unbalanced_regular(n, k1, k2, 17);
  for (int v = 0; v < n; ++v) {
    int within = 0, across = 0;
    for (int w : g.neighbors(v))
      ((v < n / 2) == (w < n / 2) ? within : across)++;
    CHECK(within == k1);
    CHECK(across == k2);
  }
  CHECK(same_edges(g, gen_unbalanced_regular(n, k1, k2, 17)));
  CHECK_THROWS_AS(gen_unbalanced_regular(41, 4, 3, 1), std::invalid_argument);
}

TEST_CASE("genspec round trips for every kind") {
  const char* lines[] = {
      "kind=random n=500 p=0.05 seed=42",
      "kind=geometric n=2500 d=0.035682 seed=7",
      "kind=regular n=100 r=4 seed=1",
      "kind=unbalanced_random n=200 p1=0.1 p2=0.02 seed=9",
      "kind=unbalanced_regular n=60 k1=5 k2=2 seed=3",
  };
  for (const char* line : lines) {
    const GenSpec s = parse_genspec(line);
    CHECK(format_genspec(s) == line);
  }
}

TEST_CASE("genspec parsing rejects malformed input") {
  CHECK_THROWS_AS(parse_genspec("n=10 p=0.5 seed=1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_genspec("kind=random n=10 p=0.5"),
                  std::invalid_argument);
  CHECK_THROWS_AS(parse_genspec("kind=random n=10 p=0.5 seed=1 bogus=2"),
                  std::invalid_argument);
  CHECK_THROWS_AS(parse_genspec("kind=random n=10 n=11 p=0.5 seed=1"),
                  std::invalid_argument);
  CHECK_THROWS_AS(parse_genspec("kind=tree n=10 seed=1"),
                  std::invalid_argument);
  CHECK_THROWS_AS(parse_genspec("kind=random n=ten p=0.5 seed=1"),
                  std::invalid_argument);
  CHECK_THROWS_AS(parse_genspec("kind=random n=10 seed=1"),
                  std::invalid_argument);  // p required
}

TEST_CASE("generate stamps the genspec and survives a file round trip") {
  const GenSpec spec = parse_genspec("kind=random n=30 p=0.2 seed=5");
  Graph g = generate(spec);
  CHECK(g.genspec() == format_genspec(spec));
  std::ostringstream out;
  save_graph(g, out);
  std::istringstream in(out.str());
  Graph h = load_graph(in);
  REQUIRE(h.genspec() == g.genspec());
  Graph again = generate(parse_genspec(h.genspec()));
  CHECK(same_edges(g, again));
}

TEST_CASE("generate dispatches geometric with coords") {
  Graph g = generate(parse_genspec("kind=geometric n=50 d=0.3 seed=2"));
  CHECK(g.has_coords());
  CHECK(same_edges(g, gen_geometric(50, 0.3, 2)));
}
