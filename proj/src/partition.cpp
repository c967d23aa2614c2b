#include "pocut/partition.hpp"

#include <cassert>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>

namespace pocut {

Partitioning::Partitioning(const Graph& g, std::vector<Side> side)
    : side_(std::move(side)) {
  if (static_cast<int>(side_.size()) != g.n())
    throw std::invalid_argument("partitioning: size mismatch with graph");
  for (Side s : side_) (s == Side::Left ? size_left_ : size_right_)++;
  for (auto [u, v] : g.edges())
    if (side_[u] != side_[v]) ++cut_;
}

Partitioning Partitioning::all_on(const Graph& g, Side s) {
  return Partitioning(g, std::vector<Side>(static_cast<std::size_t>(g.n()), s));
}

void Partitioning::flip(const Graph& g, int v) {
  const Side s = side_[v];
  for (int w : g.neighbors(v)) cut_ += (side_[w] == s) ? 1 : -1;
  side_[v] = other(s);
  if (s == Side::Left) {
    --size_left_;
    ++size_right_;
  } else {
    ++size_left_;
    --size_right_;
  }
}

void Partitioning::check(const Graph& g) const {
  std::int64_t cut = 0;
  for (auto [u, v] : g.edges())
    if (side_[u] != side_[v]) ++cut;
  int left = 0;
  for (Side s : side_)
    if (s == Side::Left) ++left;
  if (cut != cut_ || left != size_left_ ||
      static_cast<int>(side_.size()) - left != size_right_)
    throw std::logic_error("partitioning caches diverged from recount");
}

std::int64_t cut_count(const Graph& g, const Partitioning& p) {
  if (p.n() != g.n())
    throw std::invalid_argument("cut_count: partitioning size mismatch");
  std::int64_t cut = 0;
  for (auto [u, v] : g.edges())
    if (p.side(u) != p.side(v)) ++cut;
  return cut;
}

double quotient_cost(const Graph& g, const Partitioning& p) {
  if (p.size_left() == 0 || p.size_right() == 0)
    throw std::invalid_argument("quotient_cost: empty side");
  return static_cast<double>(cut_count(g, p)) /
         std::min(p.size_left(), p.size_right());
}

std::pair<int, int> critical_counts(const Graph& g, const Partitioning& p,
                                    int v) {
  int same = 0, opp = 0;
  const Side s = p.side(v);
  for (int w : g.neighbors(v)) (p.side(w) == s ? same : opp)++;
  return {same, opp};
}

int gain(const Graph& g, const Partitioning& p, int v) {
  auto [same, opp] = critical_counts(g, p, v);
  return same - opp;
}

void apply_flip_flop(const Graph& g, Partitioning& p,
                     std::span<const int> vs) {
  std::vector<char> seen(static_cast<std::size_t>(g.n()), 0);
  for (int v : vs) {
    if (v < 0 || v >= g.n())
      throw std::invalid_argument("apply_flip_flop: vertex out of range");
    if (seen[v]) throw std::invalid_argument("apply_flip_flop: duplicate vertex");
    seen[v] = 1;
  }
  for (int v : vs) p.flip(g, v);
#ifndef NDEBUG
  p.check(g);
#endif
}

Partitioning load_partition(std::istream& in, const Graph& g) {
  std::vector<Side> side;
  side.reserve(static_cast<std::size_t>(g.n()));
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    if (line != "0" && line != "1")
      throw std::runtime_error("partition format: line " +
                               std::to_string(lineno) + ": expected 0 or 1");
    side.push_back(line == "0" ? Side::Left : Side::Right);
  }
  if (static_cast<int>(side.size()) != g.n())
    throw std::runtime_error("partition format: " +
                             std::to_string(side.size()) + " labels for " +
                             std::to_string(g.n()) + " vertices");
  return Partitioning(g, std::move(side));
}

Partitioning load_partition_file(const std::string& path, const Graph& g) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open partition file: " + path);
  return load_partition(in, g);
}

void save_partition(const Partitioning& p, std::ostream& out) {
  for (int v = 0; v < p.n(); ++v)
    out << (p.side(v) == Side::Left ? "0\n" : "1\n");
}

void save_partition_file(const Partitioning& p, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write partition file: " + path);
  save_partition(p, out);
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace pocut
