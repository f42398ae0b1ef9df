#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

namespace dynmwm {

using VertexId = std::uint32_t;
using Weight = double;
using Level = std::int32_t;

inline constexpr VertexId kNoVertex = static_cast<VertexId>(-1);

/// Unordered vertex pair, stored with lo < hi. This is the identity of an edge.
struct EdgeKey {
  VertexId lo = 0;
  VertexId hi = 0;

  EdgeKey() = default;
  EdgeKey(VertexId a, VertexId b) : lo(a < b ? a : b), hi(a < b ? b : a) {}

  [[nodiscard]] std::uint64_t packed() const {
    return (static_cast<std::uint64_t>(lo) << 32) | hi;
  }
  [[nodiscard]] bool touches(VertexId x) const { return lo == x || hi == x; }
  [[nodiscard]] bool adjacent(const EdgeKey& o) const {
    return touches(o.lo) || touches(o.hi);
  }
  [[nodiscard]] VertexId other(VertexId x) const { return x == lo ? hi : lo; }

  friend auto operator<=>(const EdgeKey&, const EdgeKey&) = default;
};

std::ostream& operator<<(std::ostream& os, const EdgeKey& e);

struct WeightedEdge {
  VertexId u = 0;
  VertexId v = 0;
  Weight w = 0.0;

  [[nodiscard]] EdgeKey key() const { return {u, v}; }
};

/// An edge together with the level it was bucketed into.
struct LeveledEdge {
  EdgeKey key;
  Weight w = 0.0;
  Level level = 0;

  friend bool operator==(const LeveledEdge&, const LeveledEdge&) = default;
};

enum class GraphErrc {
  kSelfLoop,
  kDuplicateEdge,
  kUnknownEdge,
  kInvalidWeight,
  kVertexOutOfRange,
};

const char* to_string(GraphErrc code);

/// Raised for every rejected update; the graph is left unchanged.
class GraphError : public std::invalid_argument {
 public:
  GraphError(GraphErrc code, const std::string& what)
      : std::invalid_argument(what), code_(code) {}
  [[nodiscard]] GraphErrc code() const { return code_; }

 private:
  GraphErrc code_;
};

/// Throws GraphError unless `w` is positive and finite.
void validate_weight(Weight w);

}  // namespace dynmwm

template <>
struct std::hash<dynmwm::EdgeKey> {
  std::size_t operator()(const dynmwm::EdgeKey& e) const noexcept {
    std::uint64_t x = e.packed();
    x ^= x >> 33;
    x *= 0xff51afd7ed558ccdULL;
    x ^= x >> 33;
    return static_cast<std::size_t>(x);
  }
};
