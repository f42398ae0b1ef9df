#include "dynmwm/levels.hpp"

#include <cmath>
#include <limits>

namespace dynmwm {

Weight level_lower_bound(Level level, const RoundingConfig& cfg) {
  return std::pow(cfg.alpha, static_cast<double>(level) + cfg.offset());
}

Level level_of(Weight w, const RoundingConfig& cfg) {
  validate_weight(w);
  const double candidate = std::floor(std::log(w) / std::log(cfg.alpha) - cfg.offset());
  constexpr double kMin = std::numeric_limits<Level>::min() / 2;
  constexpr double kMax = std::numeric_limits<Level>::max() / 2;
  if (!(candidate > kMin && candidate < kMax)) {
    throw GraphError(GraphErrc::kInvalidWeight, "weight lies outside the representable level range");
  }
  auto level = static_cast<Level>(candidate);
  // The log quotient can be off by one near a boundary; settle it with the
  // same exponentiation the invariant checks use.
  for (int i = 0; i < 4 && level_lower_bound(level, cfg) > w; ++i) --level;
  for (int i = 0; i < 4 && level_lower_bound(level + 1, cfg) <= w; ++i) ++level;
  return level;
}

}  // namespace dynmwm
