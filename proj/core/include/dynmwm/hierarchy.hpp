#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "dynmwm/edge_registry.hpp"
#include "dynmwm/graph.hpp"
#include "dynmwm/level_matcher.hpp"
#include "dynmwm/level_slots.hpp"
#include "dynmwm/rounding.hpp"
#include "dynmwm/snapshot.hpp"

namespace dynmwm {

enum class UpdateKind { kInsert, kDelete };

/// Instrumentation for one call of DynamicMatching::edge_update.
struct UpdateSummary {
  Level level = 0;
  std::size_t removed = 0;        // edges that left M_level
  std::size_t added = 0;          // edges that entered M_level
  std::size_t cascade_depth = 0;  // deepest HandleFree recursion, 0 if none ran
  std::size_t evictions = 0;      // M-edges displaced by a higher-level edge
};

struct HierarchyTestAccess;

/// Fully dynamic approximate maximum-weight matching.
///
/// Edges are bucketed into geometric weight levels. A LevelMatcher keeps a
/// maximal matching M_l per level; their union is the graph H, in which each
/// vertex has at most one edge per level. The output matching M is kept
/// inside H under the invariant that every H-edge is either in M or touches
/// an M-edge of strictly higher level. With base alpha this gives
/// w(M) >= w(M*) / (2a/(a-1) + 2a), i.e. 1/8 of optimal at alpha = 2.
class DynamicMatching {
 public:
  /// `cfg` is resolved here; in rounded mode r is drawn from cfg.seed unless
  /// fixed. A null matcher selects SurrogateLevelMatcher.
  DynamicMatching(std::size_t vertex_count, RoundingConfig cfg,
                  std::unique_ptr<LevelMatcher> matcher = nullptr);

  DynamicMatching(const DynamicMatching&) = delete;
  DynamicMatching& operator=(const DynamicMatching&) = delete;
  DynamicMatching(DynamicMatching&&) noexcept = default;
  DynamicMatching& operator=(DynamicMatching&&) noexcept = default;

  /// Throws GraphError on a rejected update; state is unchanged in that case.
  /// `w` is ignored for deletions.
  UpdateSummary edge_update(VertexId u, VertexId v, Weight w, UpdateKind kind);
  UpdateSummary insert_edge(VertexId u, VertexId v, Weight w) {
    return edge_update(u, v, w, UpdateKind::kInsert);
  }
  UpdateSummary delete_edge(VertexId u, VertexId v) {
    return edge_update(u, v, 0.0, UpdateKind::kDelete);
  }

  [[nodiscard]] std::size_t vertex_count() const { return mate_.size(); }
  [[nodiscard]] const RoundingConfig& config() const { return registry_.config(); }
  [[nodiscard]] const EdgeRegistry& graph() const { return registry_; }
  [[nodiscard]] const LevelMatcher& level_matcher() const { return *matcher_; }

  [[nodiscard]] bool is_free(VertexId v) const { return mate_.at(v) == kNoVertex; }
  [[nodiscard]] std::optional<VertexId> mate_of(VertexId v) const;
  /// Level of v's M-edge, if v is matched.
  [[nodiscard]] std::optional<Level> mate_level(VertexId v) const;
  /// The H-neighbour of v at level l, i.e. its partner in M_l.
  [[nodiscard]] std::optional<VertexId> h_neighbor(VertexId v, Level l) const;

  /// M sorted by key, with original weights.
  [[nodiscard]] std::vector<LeveledEdge> current_matching() const;
  [[nodiscard]] std::size_t matching_size() const { return matching_.size(); }
  [[nodiscard]] Weight matching_weight() const;
  /// Sum of alpha^(level+r) over M (rounded mode only).
  [[nodiscard]] Weight rounded_matching_weight() const;

  /// Union of the level matchings, sorted by key.
  [[nodiscard]] std::vector<LeveledEdge> h_edges() const;
  [[nodiscard]] std::vector<Level> occupied_levels() const { return registry_.occupied_levels(); }
  [[nodiscard]] std::optional<Level> max_level() const;
  [[nodiscard]] std::optional<Level> min_level() const;

  /// Recomputes a matching from scratch out of the current level matchings by
  /// taking levels top-down and dropping lower edges that touch taken ones.
  /// Does not touch the dynamic state.
  [[nodiscard]] std::vector<LeveledEdge> static_combine() const;

  /// Audits registry structure, per-level matching and maximality, H/N
  /// bookkeeping, M/Free/Mate consistency, the hierarchy invariant and the
  /// occupied-level index. Cost O(n + m).
  [[nodiscard]] AuditReport check_invariants() const;

  /// Whether no H-edge has both endpoints free in M.
  [[nodiscard]] bool maximal_in_h() const;

  [[nodiscard]] EngineSnapshot snapshot() const;

 private:
  friend struct HierarchyTestAccess;

  [[nodiscard]] Level edge_level(VertexId u, VertexId v) const;
  void add_to_matching(VertexId u, VertexId v);
  void del_from_matching(VertexId u, VertexId v);
  void handle_free(VertexId u, Level lev);
  void add_edge_h(EdgeKey e, Level l);
  void delete_edge_h(EdgeKey e, Level l);

  EdgeRegistry registry_;
  std::unique_ptr<LevelMatcher> matcher_;

  std::vector<VertexId> mate_;
  std::vector<Level> mate_level_;
  std::vector<LevelSlots> h_nbr_;  // N(v, l)
  std::map<EdgeKey, Level> matching_;

  std::size_t cascade_depth_ = 0;
  std::size_t evictions_ = 0;
};

}  // namespace dynmwm
