#include "pocut/objective.hpp"

#include <stdexcept>

namespace pocut {

Objective parse_objective(const std::string& s) {
  if (s == "maxcut") return Objective::MaxCut;
  if (s == "quotient") return Objective::MinQuotientCut;
  throw std::invalid_argument("unknown objective: " + s +
                              " (expected maxcut or quotient)");
}

}  // namespace pocut
