#pragma once

#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "dynmwm/edge_registry.hpp"
#include "dynmwm/graph.hpp"
#include "dynmwm/level_slots.hpp"

namespace dynmwm {

/// Edges that entered and left one level's maximal matching during a single
/// update. The hierarchy consumes removals first, then additions.
struct DeltaReport {
  std::vector<EdgeKey> added;
  std::vector<EdgeKey> removed;

  [[nodiscard]] bool empty() const { return added.empty() && removed.empty(); }
};

/// Maintains a maximal matching M_l of every level subgraph G_l under edge
/// updates. Callers update the registry first: an inserted edge is already
/// registered, a deleted edge already unregistered.
class LevelMatcher {
 public:
  virtual ~LevelMatcher() = default;

  virtual DeltaReport insert(const EdgeRegistry& graph, Level l, VertexId u, VertexId v) = 0;
  virtual DeltaReport erase(const EdgeRegistry& graph, Level l, VertexId u, VertexId v) = 0;

  /// True iff M_l is empty; by maximality this is also E_l being empty.
  [[nodiscard]] virtual bool empty(Level l) const = 0;
  [[nodiscard]] virtual std::optional<VertexId> mate(Level l, VertexId v) const = 0;
  [[nodiscard]] virtual bool contains(Level l, EdgeKey e) const = 0;
  /// M_l sorted by key.
  [[nodiscard]] virtual std::vector<EdgeKey> matching(Level l) const = 0;
  /// Levels with a non-empty matching, ascending.
  [[nodiscard]] virtual std::vector<Level> levels() const = 0;
  /// Every level matching at once, sorted by (level, key). Weights are left 0;
  /// the registry owns them.
  [[nodiscard]] virtual std::vector<LeveledEdge> all_matched() const = 0;
};

/// Deterministic baseline: greedy on insertion, and on deletion of a matched
/// edge each freed endpoint (ascending id) takes its lowest-id free level
/// neighbour. O(1) per insertion, O(deg) per deletion.
class SurrogateLevelMatcher final : public LevelMatcher {
 public:
  explicit SurrogateLevelMatcher(std::size_t vertex_count) : mates_(vertex_count) {}

  DeltaReport insert(const EdgeRegistry& graph, Level l, VertexId u, VertexId v) override;
  DeltaReport erase(const EdgeRegistry& graph, Level l, VertexId u, VertexId v) override;

  [[nodiscard]] bool empty(Level l) const override;
  [[nodiscard]] std::optional<VertexId> mate(Level l, VertexId v) const override;
  [[nodiscard]] bool contains(Level l, EdgeKey e) const override;
  [[nodiscard]] std::vector<EdgeKey> matching(Level l) const override;
  [[nodiscard]] std::vector<Level> levels() const override;
  [[nodiscard]] std::vector<LeveledEdge> all_matched() const override;

 private:
  void match(Level l, VertexId a, VertexId b);
  void unmatch(Level l, VertexId a, VertexId b);

  std::vector<LevelSlots> mates_;
  std::map<Level, std::size_t> matched_count_;
};

[[nodiscard]] std::unique_ptr<LevelMatcher> make_surrogate_matcher(std::size_t vertex_count);

}  // namespace dynmwm
