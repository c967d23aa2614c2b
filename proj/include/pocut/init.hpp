#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "pocut/graph.hpp"
#include "pocut/objective.hpp"
#include "pocut/partition.hpp"
#include "pocut/rng.hpp"

namespace pocut {

enum class DiffMode { MaxDiff, MinDiff };
enum class DiffTiebreak { Random, MaxDegreeThenRandom };

// Per-vertex bookkeeping for constructive placement: how many already-placed
// neighbors each unplaced vertex has on each side. delta(v) = |left - right|
// drives max-diff / min-diff selection.
class DiffState {
 public:
  explicit DiffState(const Graph& g);

  bool placed(int v) const { return placed_[v] != 0; }
  int cnt(int v, Side s) const {
    return s == Side::Left ? cnt_left_[v] : cnt_right_[v];
  }
  int delta(int v) const {
    int d = cnt_left_[v] - cnt_right_[v];
    return d < 0 ? -d : d;
  }
  int unplaced_count() const { return unplaced_; }

  // Marks v placed on side s and updates its unplaced neighbors' counts.
  void place(const Graph& g, int v, Side s);

 private:
  std::vector<char> placed_;
  std::vector<int> cnt_left_, cnt_right_;
  int unplaced_ = 0;
};

// Uniform pick from the arg-extremum set of delta over unplaced vertices
// (MaxDiff: argmax, MinDiff: argmin), ties per the tiebreak policy.
// Throws std::logic_error if nothing is unplaced.
int select_diff(const Graph& g, const DiffState& state, DiffMode mode,
                DiffTiebreak tiebreak, Rng& rng);

// Each vertex LEFT/RIGHT with probability 1/2.
Partitioning init_random(const Graph& g, std::uint64_t seed);

// Projects coordinates onto a direction of uniformly random angle and puts
// the floor(n/2) smallest projections LEFT (ties by vertex id). Requires
// coords; throws std::invalid_argument without them.
Partitioning init_line(const Graph& g, std::uint64_t seed);

// Greedy constructive partitioning. MaxCut: select by max-diff with random
// tie-breaking and place to maximize newly cut edges (tie: random side).
// MinQuotientCut: select the vertex most committed to one side among those
// with a placed neighbor (untouched vertices seed components) and place to
// minimize newly cut edges, capping either side at n/2 so the grown region
// stops at half (tie: currently smaller side, then random).
Partitioning construct_w(const Graph& g, Objective objective,
                         std::uint64_t seed);

// Restart generator used by the optimizers; each call must consume rng.
using InitGen = std::function<Partitioning(const Graph&, Rng&)>;

// Named InitGens for CLI flags: "random", "line", "w". The w generator needs
// the objective to pick its diff mode.
InitGen make_init_gen(const std::string& name, Objective objective);

}  // namespace pocut
