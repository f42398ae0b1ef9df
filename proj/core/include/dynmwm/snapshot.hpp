#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "dynmwm/graph.hpp"
#include "dynmwm/rounding.hpp"

namespace dynmwm {

/// First invariant violation found by an audit, with a human-readable witness.
struct Violation {
  std::string invariant;
  std::string witness;
};

struct AuditReport {
  std::optional<Violation> violation;
  [[nodiscard]] bool ok() const { return !violation.has_value(); }
};

/// Read-only copy of an engine's graph, level matchings and output matching,
/// consumed by the exact oracle and the mapping audit.
struct EngineSnapshot {
  std::size_t vertex_count = 0;
  RoundingConfig config;
  std::vector<LeveledEdge> edges;     // E, sorted by key
  std::vector<LeveledEdge> h_edges;   // union of the level matchings, sorted
  std::vector<LeveledEdge> matching;  // M, sorted
};

}  // namespace dynmwm
