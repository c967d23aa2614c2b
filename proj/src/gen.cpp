#include "pocut/gen.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <unordered_set>
#include <utility>
#include <vector>

#include "pocut/numio.hpp"
#include "pocut/rng.hpp"

namespace pocut {

namespace {

constexpr int kRetryCap = 10000;

long long edge_key(int n, int u, int v) {
  if (u > v) std::swap(u, v);
  return static_cast<long long>(u) * n + v;
}

// One whole-graph sample of an r-regular simple graph on [0, n) by random
// stub pairing; returns false and leaves `edges` unusable on a dead end
// (remaining stubs admit no legal pair).
bool try_pair_stubs(int n, int r, Rng& rng,
                    std::vector<std::pair<int, int>>& edges) {
  std::vector<int> stubs;
  stubs.reserve(static_cast<std::size_t>(n) * r);
  for (int v = 0; v < n; ++v)
    for (int i = 0; i < r; ++i) stubs.push_back(v);
  std::unordered_set<long long> used;
  used.reserve(stubs.size());
  edges.clear();
  edges.reserve(stubs.size() / 2);

  auto take = [&](std::size_t i, std::size_t j) {
    edges.emplace_back(stubs[i], stubs[j]);
    used.insert(edge_key(n, stubs[i], stubs[j]));
    if (i < j) std::swap(i, j);
    stubs[i] = stubs.back();
    stubs.pop_back();
    stubs[j] = stubs.back();
    stubs.pop_back();
  };

  while (!stubs.empty()) {
    bool paired = false;
    for (int tries = 0; tries < 64; ++tries) {
      std::size_t i = uniform_below(rng, stubs.size());
      std::size_t j = uniform_below(rng, stubs.size());
      if (i == j || stubs[i] == stubs[j]) continue;
      if (used.count(edge_key(n, stubs[i], stubs[j]))) continue;
      take(i, j);
      paired = true;
      break;
    }
    if (paired) continue;
    // random picks keep colliding: enumerate what is still legal
    std::vector<std::pair<std::size_t, std::size_t>> legal;
    for (std::size_t i = 0; i < stubs.size(); ++i)
      for (std::size_t j = i + 1; j < stubs.size(); ++j)
        if (stubs[i] != stubs[j] &&
            !used.count(edge_key(n, stubs[i], stubs[j])))
          legal.emplace_back(i, j);
    if (legal.empty()) return false;
    auto [i, j] = legal[uniform_below(rng, legal.size())];
    take(i, j);
  }
  return true;
}

std::vector<std::pair<int, int>> sample_regular(int n, int r, Rng& rng) {
  std::vector<std::pair<int, int>> edges;
  for (int attempt = 0; attempt < kRetryCap; ++attempt)
    if (try_pair_stubs(n, r, rng, edges)) return edges;
  throw std::runtime_error("gen_regular: retry cap exceeded");
}

}  // namespace

const char* kind_name(GraphKind k) {
  switch (k) {
    case GraphKind::Random: return "random";
    case GraphKind::Geometric: return "geometric";
    case GraphKind::Regular: return "regular";
    case GraphKind::UnbalancedRandom: return "unbalanced_random";
    case GraphKind::UnbalancedRegular: return "unbalanced_regular";
  }
  return "?";
}

GraphKind parse_kind(const std::string& s) {
  if (s == "random") return GraphKind::Random;
  if (s == "geometric") return GraphKind::Geometric;
  if (s == "regular") return GraphKind::Regular;
  if (s == "unbalanced_random") return GraphKind::UnbalancedRandom;
  if (s == "unbalanced_regular") return GraphKind::UnbalancedRegular;
  throw std::invalid_argument("unknown graph kind: " + s);
}

std::string format_genspec(const GenSpec& s) {
  std::ostringstream os;
  os << "kind=" << kind_name(s.kind) << " n=" << s.n;
  switch (s.kind) {
    case GraphKind::Random: os << " p=" << fmt_double(s.p); break;
    case GraphKind::Geometric: os << " d=" << fmt_double(s.d); break;
    case GraphKind::Regular: os << " r=" << s.r; break;
    case GraphKind::UnbalancedRandom:
      os << " p1=" << fmt_double(s.p1) << " p2=" << fmt_double(s.p2);
      break;
    case GraphKind::UnbalancedRegular:
      os << " k1=" << s.k1 << " k2=" << s.k2;
      break;
  }
  os << " seed=" << s.seed;
  return os.str();
}

GenSpec parse_genspec(const std::string& line) {
  GenSpec spec;
  bool saw_kind = false, saw_n = false, saw_seed = false;
  std::unordered_set<std::string> saw;
  std::istringstream is(line);
  std::string tok;
  while (is >> tok) {
    auto eq = tok.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("genspec: expected key=value, got '" + tok + "'");
    std::string key = tok.substr(0, eq), val = tok.substr(eq + 1);
    if (!saw.insert(key).second)
      throw std::invalid_argument("genspec: duplicate key '" + key + "'");
    if (key == "kind") {
      spec.kind = parse_kind(val);
      saw_kind = true;
    } else if (key == "n") {
      spec.n = static_cast<int>(parse_int(val));
      saw_n = true;
    } else if (key == "seed") {
      spec.seed = parse_u64(val);
      saw_seed = true;
    } else if (key == "p") {
      spec.p = parse_double(val);
    } else if (key == "d") {
      spec.d = parse_double(val);
    } else if (key == "r") {
      spec.r = static_cast<int>(parse_int(val));
    } else if (key == "p1") {
      spec.p1 = parse_double(val);
    } else if (key == "p2") {
      spec.p2 = parse_double(val);
    } else if (key == "k1") {
      spec.k1 = static_cast<int>(parse_int(val));
    } else if (key == "k2") {
      spec.k2 = static_cast<int>(parse_int(val));
    } else {
      throw std::invalid_argument("genspec: unknown key '" + key + "'");
    }
  }
  if (!saw_kind || !saw_n || !saw_seed)
    throw std::invalid_argument("genspec: kind, n, and seed are required");
  auto require = [&](const char* key) {
    if (!saw.count(key))
      throw std::invalid_argument(std::string("genspec: kind ") +
                                  kind_name(spec.kind) + " requires " + key);
  };
  switch (spec.kind) {
    case GraphKind::Random: require("p"); break;
    case GraphKind::Geometric: require("d"); break;
    case GraphKind::Regular: require("r"); break;
    case GraphKind::UnbalancedRandom:
      require("p1");
      require("p2");
      break;
    case GraphKind::UnbalancedRegular:
      require("k1");
      require("k2");
      break;
  }
  return spec;
}

Graph gen_random(int n, double p, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("gen_random: n must be >= 1");
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("gen_random: p outside [0,1]");
  Rng rng = make_rng(seed);
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (bernoulli(rng, p)) edges.emplace_back(u, v);
  return Graph(n, std::move(edges));
}

Graph gen_geometric(int n, double d, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("gen_geometric: n must be >= 1");
  if (d <= 0.0) throw std::invalid_argument("gen_geometric: d must be > 0");
  Rng rng = make_rng(seed);
  std::vector<Coord> pts(static_cast<std::size_t>(n));
  for (auto& c : pts) {
    c.x = uniform_double(rng);
    c.y = uniform_double(rng);
  }
  const double d2 = d * d;
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      const double dx = pts[u].x - pts[v].x, dy = pts[u].y - pts[v].y;
      if (dx * dx + dy * dy < d2) edges.emplace_back(u, v);
    }
  return Graph(n, std::move(edges), std::move(pts));
}

Graph gen_regular(int n, int r, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("gen_regular: n must be >= 1");
  if (r < 0 || r >= n) throw std::invalid_argument("gen_regular: need 0 <= r < n");
  if ((static_cast<long long>(n) * r) % 2 != 0)
    throw std::invalid_argument("gen_regular: n*r must be even");
  Rng rng = make_rng(seed);
  return Graph(n, sample_regular(n, r, rng));
}

Graph gen_unbalanced_random(int n, double p1, double p2, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("gen_unbalanced_random: n must be >= 2");
  if (p1 < 0.0 || p1 > 1.0 || p2 < 0.0 || p2 > 1.0)
    throw std::invalid_argument("gen_unbalanced_random: probabilities outside [0,1]");
  const int half = n / 2;  // block A = [0, half), block B = [half, n)
  Rng rng = make_rng(seed);
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      const bool within = (u < half) == (v < half);
      if (bernoulli(rng, within ? p1 : p2)) edges.emplace_back(u, v);
    }
  return Graph(n, std::move(edges));
}

Graph gen_unbalanced_regular(int n, int k1, int k2, std::uint64_t seed) {
  if (n < 2 || n % 2 != 0)
    throw std::invalid_argument("gen_unbalanced_regular: n must be even and >= 2");
  const int half = n / 2;
  if (k1 < 0 || k1 >= half)
    throw std::invalid_argument("gen_unbalanced_regular: need 0 <= k1 < n/2");
  if (k2 < 0 || k2 > half)
    throw std::invalid_argument("gen_unbalanced_regular: need 0 <= k2 <= n/2");
  if ((static_cast<long long>(half) * k1) % 2 != 0)
    throw std::invalid_argument("gen_unbalanced_regular: (n/2)*k1 must be even");

  std::vector<std::pair<int, int>> edges;
  {
    Rng rng = make_rng(derive_seed(seed, 1));
    for (auto [u, v] : sample_regular(half, k1, rng)) edges.emplace_back(u, v);
  }
  {
    Rng rng = make_rng(derive_seed(seed, 2));
    for (auto [u, v] : sample_regular(half, k1, rng))
      edges.emplace_back(u + half, v + half);
  }

  // k2 cross perfect matchings; a matching that duplicates an earlier cross
  // edge is redrawn whole
  Rng rng = make_rng(derive_seed(seed, 3));
  std::unordered_set<long long> used;
  std::vector<int> perm(static_cast<std::size_t>(half));
  for (int t = 0; t < k2; ++t) {
    int attempt = 0;
    for (;; ++attempt) {
      if (attempt >= kRetryCap)
        throw std::runtime_error("gen_unbalanced_regular: retry cap exceeded");
      for (int i = 0; i < half; ++i) perm[i] = i;
      for (int i = half - 1; i > 0; --i)
        std::swap(perm[i], perm[uniform_below(rng, static_cast<std::uint64_t>(i) + 1)]);
      bool clash = false;
      for (int i = 0; i < half && !clash; ++i)
        clash = used.count(edge_key(n, i, half + perm[i])) != 0;
      if (clash) continue;
      for (int i = 0; i < half; ++i) {
        used.insert(edge_key(n, i, half + perm[i]));
        edges.emplace_back(i, half + perm[i]);
      }
      break;
    }
  }
  return Graph(n, std::move(edges));
}

Graph generate(const GenSpec& spec) {
  Graph g;
  switch (spec.kind) {
    case GraphKind::Random:
      g = gen_random(spec.n, spec.p, spec.seed);
      break;
    case GraphKind::Geometric:
      g = gen_geometric(spec.n, spec.d, spec.seed);
      break;
    case GraphKind::Regular:
      g = gen_regular(spec.n, spec.r, spec.seed);
      break;
    case GraphKind::UnbalancedRandom:
      g = gen_unbalanced_random(spec.n, spec.p1, spec.p2, spec.seed);
      break;
    case GraphKind::UnbalancedRegular:
      g = gen_unbalanced_regular(spec.n, spec.k1, spec.k2, spec.seed);
      break;
  }
  g.set_genspec(format_genspec(spec));
  return g;
}

}  // namespace pocut
