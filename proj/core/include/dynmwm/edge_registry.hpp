#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "dynmwm/graph.hpp"
#include "dynmwm/rounding.hpp"

namespace dynmwm {

/// One entry of a vertex's adjacency list.
struct LevelNeighbor {
  Level level = 0;
  VertexId vertex = 0;

  friend auto operator<=>(const LevelNeighbor&, const LevelNeighbor&) = default;
};

/// Authoritative edge set of the dynamic graph, bucketed by level. Each edge
/// lives in exactly one level; per-vertex adjacency is symmetric and sorted
/// by (level, neighbour id), so one level's neighbours form a contiguous,
/// id-ordered run.
class EdgeRegistry {
 public:
  struct Entry {
    Weight w = 0.0;
    Level level = 0;
  };

  /// `cfg` must already be resolved.
  EdgeRegistry(std::size_t vertex_count, const RoundingConfig& cfg);

  /// Records {u,v} and returns its level. The registry is unchanged on error.
  Level register_edge(VertexId u, VertexId v, Weight w);

  /// Removes {u,v}, returning its former weight and level.
  Entry unregister_edge(VertexId u, VertexId v);

  [[nodiscard]] std::optional<Entry> find(VertexId u, VertexId v) const;
  [[nodiscard]] bool contains(VertexId u, VertexId v) const { return find(u, v).has_value(); }

  [[nodiscard]] std::size_t vertex_count() const { return adjacency_.size(); }
  [[nodiscard]] std::size_t edge_count() const { return edges_.size(); }
  [[nodiscard]] const RoundingConfig& config() const { return cfg_; }

  /// Level-l neighbours of v in ascending id order.
  [[nodiscard]] std::span<const LevelNeighbor> neighbors(Level l, VertexId v) const;
  /// All neighbours of v, sorted by (level, id).
  [[nodiscard]] std::span<const LevelNeighbor> neighbors(VertexId v) const {
    return adjacency_.at(v);
  }

  [[nodiscard]] std::size_t level_size(Level l) const;

  /// Levels with at least one edge, ascending.
  [[nodiscard]] std::vector<Level> occupied_levels() const;
  [[nodiscard]] bool empty() const { return edges_.empty(); }
  [[nodiscard]] Level min_level() const { return level_sizes_.begin()->first; }
  [[nodiscard]] Level max_level() const { return level_sizes_.rbegin()->first; }

  /// All edges sorted by key.
  [[nodiscard]] std::vector<LeveledEdge> edges() const;
  [[nodiscard]] std::vector<LeveledEdge> edges_at(Level l) const;

  /// Visits every edge once, in unspecified order.
  template <typename Fn>
  void for_each_edge(Fn&& fn) const {
    for (const auto& [key, entry] : edges_) fn(LeveledEdge{key, entry.w, entry.level});
  }

  /// Structural self-check: level counts, adjacency symmetry, level ranges.
  /// Returns an empty string when consistent, otherwise a description.
  [[nodiscard]] std::string self_check() const;

 private:
  void check_vertex(VertexId v) const;

  RoundingConfig cfg_;
  std::unordered_map<EdgeKey, Entry> edges_;
  std::vector<std::vector<LevelNeighbor>> adjacency_;
  std::map<Level, std::size_t> level_sizes_;
};

}  // namespace dynmwm
