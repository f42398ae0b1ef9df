#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "dynmwm/graph.hpp"

namespace dynmwm {

enum class RoundingMode { kPlain, kRounded };

std::string_view to_string(RoundingMode mode);
std::optional<RoundingMode> parse_rounding_mode(std::string_view text);

/// Level-bucketing configuration. In rounded mode every level boundary is
/// shifted by a single offset r in (0,1]; r is either fixed by the caller or
/// drawn once from `seed` by resolve().
struct RoundingConfig {
  double alpha = 2.0;
  RoundingMode mode = RoundingMode::kPlain;
  std::optional<double> r;
  std::uint64_t seed = 0;

  /// Exponent offset of the level boundaries: 0 in plain mode, r otherwise.
  /// Requires a resolved config in rounded mode.
  [[nodiscard]] double offset() const;

  [[nodiscard]] bool rounded() const { return mode == RoundingMode::kRounded; }
};

/// Throws std::invalid_argument on alpha <= 1 or r outside (0,1].
void validate(const RoundingConfig& cfg);

/// Validates and, in rounded mode without a fixed r, draws r from the seed.
/// The returned config is immutable for the lifetime of an engine.
[[nodiscard]] RoundingConfig resolve(RoundingConfig cfg);

/// Uniform draw from (0,1] using a 64-bit Mersenne twister seeded with `seed`.
[[nodiscard]] double draw_offset(std::uint64_t seed);

/// alpha^(level_of(w)+r), the common weight every edge of w's level is
/// rounded down to. Throws std::logic_error in plain mode.
[[nodiscard]] Weight rounded_weight(Weight w, const RoundingConfig& cfg);

/// E_r[w_r(e)/w(e)] = (alpha-1)/(alpha ln alpha) for r uniform in (0,1].
[[nodiscard]] double expected_rounding_factor(double alpha);

/// Deterministic guarantee of the leveled engine: 2a/(a-1) + 2a.
[[nodiscard]] double plain_ratio(double alpha);

/// Expected guarantee under geometric rounding: 2a^2 ln a / (a-1)^2.
[[nodiscard]] double rounded_ratio(double alpha);

/// Per-state bound on rounded weights: sum_{M*} w_r <= (2a/(a-1)) sum_{M} w_r.
[[nodiscard]] double rounded_state_ratio(double alpha);

struct RatioOptimum {
  double alpha = 0.0;
  double ratio = 0.0;
};

/// Golden-section search of rounded_ratio over alpha in (1, 100].
[[nodiscard]] RatioOptimum optimize_rounded_ratio(double tolerance = 1e-6);

}  // namespace dynmwm
