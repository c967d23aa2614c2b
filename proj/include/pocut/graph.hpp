#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace pocut {

struct Coord {
  double x = 0.0;
  double y = 0.0;
};

// Undirected simple graph, immutable after construction. Stores both a flat
// sorted (u < v) edge list and CSR adjacency: the edge list feeds recount
// oracles and serialization, the adjacency feeds inner loops.
class Graph {
 public:
  Graph() = default;

  // Edges may arrive in any order / orientation; they are normalized to
  // u < v and sorted. Throws std::invalid_argument on out-of-range ids,
  // self-loops, or duplicate edges. coords must be empty or size n.
  Graph(int n, std::vector<std::pair<int, int>> edges,
        std::vector<Coord> coords = {});

  int n() const { return n_; }
  std::int64_t m() const { return static_cast<std::int64_t>(edges_.size()); }

  std::span<const int> neighbors(int v) const {
    return {nbrs_.data() + offsets_[v],
            nbrs_.data() + offsets_[static_cast<std::size_t>(v) + 1]};
  }
  int degree(int v) const {
    return static_cast<int>(offsets_[static_cast<std::size_t>(v) + 1] -
                            offsets_[v]);
  }

  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  bool has_coords() const { return !coords_.empty(); }
  const std::vector<Coord>& coords() const { return coords_; }

  // Provenance line ("kind=random n=500 p=0.05 seed=42"), empty if unknown.
  // Carried through save/load so benchmark output can name instances.
  const std::string& genspec() const { return genspec_; }
  void set_genspec(std::string s) { genspec_ = std::move(s); }

 private:
  int n_ = 0;
  std::vector<std::size_t> offsets_;  // n+1 entries
  std::vector<int> nbrs_;             // 2m entries, sorted per vertex
  std::vector<std::pair<int, int>> edges_;
  std::vector<Coord> coords_;
  std::string genspec_;
};

// Text format:
//   # format v1
//   # genspec kind=... n=... seed=...     (optional)
//   p <n> <m>
//   geom                                   (optional; then n "c <x> <y>" lines)
//   e <u> <v>                              (m lines, 0-based, u < v)
// Loaders throw std::runtime_error naming the offending line.
Graph load_graph(std::istream& in);
Graph load_graph_file(const std::string& path);
void save_graph(const Graph& g, std::ostream& out);
void save_graph_file(const Graph& g, const std::string& path);

}  // namespace pocut
