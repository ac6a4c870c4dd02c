#pragma once

#include <optional>
#include <vector>

#include "zonomtt/matrix.hpp"

namespace zonomtt {

/// Exact phase-1 simplex with Bland's rule: decides whether {x >= 0 : Ax = b}
/// is nonempty and returns a feasible point if so.
std::optional<std::vector<Rat>> lp_feasible_point(const RatMat& a,
                                                  const std::vector<Rat>& b);

inline bool lp_feasible(const RatMat& a, const std::vector<Rat>& b) {
  return lp_feasible_point(a, b).has_value();
}

}  // namespace zonomtt
