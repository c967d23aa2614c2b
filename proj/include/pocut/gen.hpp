#pragma once

#include <cstdint>
#include <string>

#include "pocut/graph.hpp"

namespace pocut {

enum class GraphKind {
  Random,
  Geometric,
  Regular,
  UnbalancedRandom,
  UnbalancedRegular,
};

const char* kind_name(GraphKind k);
GraphKind parse_kind(const std::string& s);

// Everything needed to regenerate a graph. Serialized as the space-separated
// "kind=random n=500 p=0.05 seed=42" form used in file headers and suite
// files; only the fields the kind requires are emitted.
struct GenSpec {
  GraphKind kind = GraphKind::Random;
  int n = 0;
  double p = 0.0;   // Random: edge probability
  double d = 0.0;   // Geometric: distance threshold
  int r = 0;        // Regular: degree
  double p1 = 0.0;  // UnbalancedRandom: within-block probability
  double p2 = 0.0;  // UnbalancedRandom: cross-block probability
  int k1 = 0;       // UnbalancedRegular: within-half degree
  int k2 = 0;       // UnbalancedRegular: cross-half degree
  std::uint64_t seed = 0;
};

std::string format_genspec(const GenSpec& spec);
// Parses the format_genspec form; throws std::invalid_argument on unknown
// keys, missing required fields, or out-of-range values.
GenSpec parse_genspec(const std::string& line);

Graph gen_random(int n, double p, std::uint64_t seed);
Graph gen_geometric(int n, double d, std::uint64_t seed);
Graph gen_regular(int n, int r, std::uint64_t seed);
Graph gen_unbalanced_random(int n, double p1, double p2, std::uint64_t seed);
Graph gen_unbalanced_regular(int n, int k1, int k2, std::uint64_t seed);

// Dispatches on spec.kind and stamps the graph's genspec string.
Graph generate(const GenSpec& spec);

}  // namespace pocut
