#include "pocut/graph.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace pocut {

Graph::Graph(int n, std::vector<std::pair<int, int>> edges,
             std::vector<Coord> coords)
    : n_(n), edges_(std::move(edges)), coords_(std::move(coords)) {
  if (n < 0) throw std::invalid_argument("graph: negative vertex count");
  if (!coords_.empty() && static_cast<int>(coords_.size()) != n)
    throw std::invalid_argument("graph: coords size != n");
  for (auto& [u, v] : edges_) {
    if (u == v) throw std::invalid_argument("graph: self-loop");
    if (u > v) std::swap(u, v);
    if (u < 0 || v >= n) throw std::invalid_argument("graph: vertex id out of range");
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
    throw std::invalid_argument("graph: duplicate edge");

  std::vector<int> deg(static_cast<std::size_t>(n), 0);
  for (auto [u, v] : edges_) {
    ++deg[u];
    ++deg[v];
  }
  offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
  for (int v = 0; v < n; ++v) offsets_[v + 1] = offsets_[v] + deg[v];
  nbrs_.resize(2 * edges_.size());
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (auto [u, v] : edges_) {
    nbrs_[fill[u]++] = v;
    nbrs_[fill[v]++] = u;
  }
  // edge list is sorted, so each adjacency slice comes out sorted already;
  // keep the guarantee explicit for the fill order of v-side entries
  for (int v = 0; v < n; ++v) {
    auto first = nbrs_.begin() + static_cast<std::ptrdiff_t>(offsets_[v]);
    auto last = nbrs_.begin() + static_cast<std::ptrdiff_t>(offsets_[v + 1]);
    if (!std::is_sorted(first, last)) std::sort(first, last);
  }
}

namespace {

[[noreturn]] void bad_line(int lineno, const std::string& what) {
  std::ostringstream os;
  os << "graph format: line " << lineno << ": " << what;
  throw std::runtime_error(os.str());
}

// Reads the next non-blank line, capturing a genspec comment if one appears.
bool next_line(std::istream& in, std::string& line, int& lineno,
               std::string* genspec) {
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    if (line[0] == '#') {
      const std::string tag = "# genspec ";
      if (genspec && line.rfind(tag, 0) == 0) *genspec = line.substr(tag.size());
      continue;
    }
    return true;
  }
  return false;
}

}  // namespace

Graph load_graph(std::istream& in) {
  std::string line;
  std::string genspec;
  int lineno = 0;

  if (!next_line(in, line, lineno, &genspec))
    throw std::runtime_error("graph format: empty input");
  std::istringstream head(line);
  char tag = 0;
  long long n = 0, m = 0;
  if (!(head >> tag >> n >> m) || tag != 'p')
    bad_line(lineno, "expected 'p <n> <m>'");
  if (n < 0 || m < 0) bad_line(lineno, "negative size");

  std::vector<Coord> coords;
  bool have_line = next_line(in, line, lineno, &genspec);
  if (have_line && line.rfind("geom", 0) == 0) {
    coords.resize(static_cast<std::size_t>(n));
    for (long long i = 0; i < n; ++i) {
      if (!next_line(in, line, lineno, &genspec))
        bad_line(lineno, "missing coordinate line");
      std::istringstream cs(line);
      char c = 0;
      if (!(cs >> c >> coords[i].x >> coords[i].y) || c != 'c')
        bad_line(lineno, "expected 'c <x> <y>'");
    }
    have_line = next_line(in, line, lineno, &genspec);
  }

  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    if (i > 0 || !have_line) {
      if (!next_line(in, line, lineno, &genspec))
        bad_line(lineno, "missing edge line");
    }
    std::istringstream es(line);
    char e = 0;
    int u = 0, v = 0;
    if (!(es >> e >> u >> v) || e != 'e') bad_line(lineno, "expected 'e <u> <v>'");
    edges.emplace_back(u, v);
    have_line = false;
  }
  if (m == 0 && have_line) bad_line(lineno, "unexpected trailing line");

  try {
    Graph g(static_cast<int>(n), std::move(edges), std::move(coords));
    g.set_genspec(genspec);
    return g;
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error(std::string("graph format: ") + e.what());
  }
}

Graph load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open graph file: " + path);
  return load_graph(in);
}

void save_graph(const Graph& g, std::ostream& out) {
  out << "# format v1\n";
  if (!g.genspec().empty()) out << "# genspec " << g.genspec() << "\n";
  out << "p " << g.n() << " " << g.m() << "\n";
  if (g.has_coords()) {
    out << "geom\n";
    char buf[64];
    auto fmt = [&buf](double x) {
      auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), x);
      return std::string(buf, end);
    };
    for (const auto& c : g.coords())
      out << "c " << fmt(c.x) << " " << fmt(c.y) << "\n";
  }
  for (auto [u, v] : g.edges()) out << "e " << u << " " << v << "\n";
}

void save_graph_file(const Graph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write graph file: " + path);
  save_graph(g, out);
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace pocut
