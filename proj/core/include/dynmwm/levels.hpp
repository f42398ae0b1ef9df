#pragma once

#include "dynmwm/graph.hpp"
#include "dynmwm/rounding.hpp"

namespace dynmwm {

/// alpha^(level + offset): the inclusive lower end of `level`'s weight range.
/// Every boundary comparison in the library goes through this function.
[[nodiscard]] Weight level_lower_bound(Level level, const RoundingConfig& cfg);

/// The unique level l with level_lower_bound(l) <= w < level_lower_bound(l+1).
/// Negative levels are allowed, so weights below 1 need no rescaling.
/// Throws GraphError for non-positive or non-finite weights.
[[nodiscard]] Level level_of(Weight w, const RoundingConfig& cfg);

}  // namespace dynmwm
