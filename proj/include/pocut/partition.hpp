#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pocut/graph.hpp"
#include "pocut/objective.hpp"

namespace pocut {

enum class Side : std::uint8_t { Left = 0, Right = 1 };

inline Side other(Side s) { return s == Side::Left ? Side::Right : Side::Left; }

// Two-way vertex assignment with cached side sizes and cut count. The caches
// are maintained incrementally (flip is O(deg v)); debug builds recheck them
// against a full recount after batch updates.
class Partitioning {
 public:
  Partitioning() = default;
  Partitioning(const Graph& g, std::vector<Side> side);
  static Partitioning all_on(const Graph& g, Side s);

  int n() const { return static_cast<int>(side_.size()); }
  Side side(int v) const { return side_[v]; }
  const std::vector<Side>& sides() const { return side_; }
  int size_left() const { return size_left_; }
  int size_right() const { return size_right_; }
  int size_of(Side s) const {
    return s == Side::Left ? size_left_ : size_right_;
  }
  std::int64_t cut() const { return cut_; }

  Score score() const {
    return {cut_, static_cast<std::int64_t>(
                      size_left_ < size_right_ ? size_left_ : size_right_)};
  }

  // Toggles v, updating caches from v's adjacency.
  void flip(const Graph& g, int v);

  // Full recount from the edge list; asserts against the caches in debug.
  void check(const Graph& g) const;

 private:
  std::vector<Side> side_;
  int size_left_ = 0;
  int size_right_ = 0;
  std::int64_t cut_ = 0;
};

// Brute-force edge scan, independent of the caches.
std::int64_t cut_count(const Graph& g, const Partitioning& p);

// cut / min(side sizes); throws std::invalid_argument if a side is empty.
double quotient_cost(const Graph& g, const Partitioning& p);

// (same-side, opposite-side) neighbor counts of v.
std::pair<int, int> critical_counts(const Graph& g, const Partitioning& p,
                                    int v);

// cg(v) = n(v) - n~(v): the change in cut count if v alone switches sides
// (positive means the cut grows).
int gain(const Graph& g, const Partitioning& p, int v);

// Toggles every vertex in vs. Throws std::invalid_argument on duplicates.
void apply_flip_flop(const Graph& g, Partitioning& p, std::span<const int> vs);

// Partition file: n lines, each 0 (left) or 1 (right); leading # comments ok.
Partitioning load_partition(std::istream& in, const Graph& g);
Partitioning load_partition_file(const std::string& path, const Graph& g);
void save_partition(const Partitioning& p, std::ostream& out);
void save_partition_file(const Partitioning& p, const std::string& path);

}  // namespace pocut
