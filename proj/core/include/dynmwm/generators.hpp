#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

#include "dynmwm/stream.hpp"

namespace dynmwm {

enum class StreamKind {
  kRandom,            // random inserts/deletes on a simple graph
  kSlidingWindow,     // every insert is deleted exactly `window` steps later
  kAdversarialLevels  // layered worst case for the charging argument
};

std::string_view to_string(StreamKind kind);
std::optional<StreamKind> parse_stream_kind(std::string_view text);

struct GeneratorParams {
  std::size_t n = 8;
  std::size_t steps = 200;
  double wmin = 1.0;
  double wmax = 100.0;
  double insert_prob = 0.6;  // random: chance of an insert while both are possible
  std::size_t window = 50;   // sliding-window
  double alpha = 2.0;        // adversarial-levels
  std::size_t depth = 5;     // adversarial-levels: number of levels below the top edge
  double margin = 1e-9;      // adversarial-levels: heavy edges weigh alpha^(j+1) * (1 - margin)
  std::uint64_t seed = 0;
};

/// Vertices used by the adversarial-levels layout at the given depth.
[[nodiscard]] constexpr std::size_t adversarial_vertex_count(std::size_t depth) {
  return 4 + 4 * depth;
}

/// Deterministic in (kind, params). Throws std::invalid_argument on
/// inconsistent parameters.
///
/// random: `steps` updates. Inserts pick a uniformly random absent pair with
/// weight uniform in [wmin, wmax]; deletes pick a uniformly random present
/// edge.
///
/// sliding-window: for s in [0, steps) insert a fresh edge, preceded (from
/// s = window on) by deleting the edge inserted at s - window; then drains
/// the remaining window, so every edge inserted at step s is deleted at
/// step s + window.
///
/// adversarial-levels: a top edge (0,1) of weight alpha^depth, two pendant
/// edges (0,2), (1,3) just under alpha^(depth+1), and for every lower level j
/// a pair of light edges (0,a_j), (1,b_j) of weight alpha^j whose far ends
/// carry heavy edges (a_j,c_j), (b_j,d_j) just under alpha^(j+1). The engine
/// keeps only the top edge while the optimum takes all heavy edges, so the
/// ratio approaches 2a/(a-1) + 2a as depth grows. Ends with a query.
[[nodiscard]] UpdateStream generate_stream(StreamKind kind, const GeneratorParams& params);

}  // namespace dynmwm
