#pragma once

#include <cstdint>
#include <limits>
#include <string>

namespace pocut {

enum class Objective { MaxCut, MinQuotientCut };

// Enough state to compare two partitionings under either objective without
// touching doubles: quotient comparisons cross-multiply exact integers.
struct Score {
  std::int64_t cut = 0;
  std::int64_t min_side = 0;  // min(|S|, |S~|); 0 marks an invalid quotient

  bool operator==(const Score&) const = default;
};

// Strict "a beats b". For MinQuotientCut a score with an empty side is never
// better than anything, and any valid score beats an invalid one.
inline bool better(Objective obj, const Score& a, const Score& b) {
  if (obj == Objective::MaxCut) return a.cut > b.cut;
  if (a.min_side == 0) return false;
  if (b.min_side == 0) return true;
  return a.cut * b.min_side < b.cut * a.min_side;
}

inline double objective_value(Objective obj, const Score& s) {
  if (obj == Objective::MaxCut) return static_cast<double>(s.cut);
  if (s.min_side == 0) return std::numeric_limits<double>::infinity();
  return static_cast<double>(s.cut) / static_cast<double>(s.min_side);
}

inline const char* objective_name(Objective obj) {
  return obj == Objective::MaxCut ? "maxcut" : "quotient";
}

// Accepts the CLI spellings; throws std::invalid_argument otherwise.
Objective parse_objective(const std::string& s);

}  // namespace pocut
