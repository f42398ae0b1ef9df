#include "dynmwm/edge_registry.hpp"

#include <algorithm>
#include <sstream>

#include "dynmwm/levels.hpp"

namespace dynmwm {

EdgeRegistry::EdgeRegistry(std::size_t vertex_count, const RoundingConfig& cfg)
    : cfg_(cfg), adjacency_(vertex_count) {
  validate(cfg_);
}

void EdgeRegistry::check_vertex(VertexId v) const {
  if (v >= adjacency_.size()) {
    std::ostringstream os;
    os << "vertex " << v << " out of range for n=" << adjacency_.size();
    throw GraphError(GraphErrc::kVertexOutOfRange, os.str());
  }
}

Level EdgeRegistry::register_edge(VertexId u, VertexId v, Weight w) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) {
    throw GraphError(GraphErrc::kSelfLoop, "self-loop on vertex " + std::to_string(u));
  }
  const EdgeKey key(u, v);
  if (edges_.contains(key)) {
    std::ostringstream os;
    os << "edge " << key << " already present";
    throw GraphError(GraphErrc::kDuplicateEdge, os.str());
  }
  const Level level = level_of(w, cfg_);
  edges_.emplace(key, Entry{w, level});
  for (auto [a, b] : {std::pair{u, v}, std::pair{v, u}}) {
    auto& list = adjacency_[a];
    const LevelNeighbor entry{level, b};
    list.insert(std::lower_bound(list.begin(), list.end(), entry), entry);
  }
  ++level_sizes_[level];
  return level;
}

EdgeRegistry::Entry EdgeRegistry::unregister_edge(VertexId u, VertexId v) {
  check_vertex(u);
  check_vertex(v);
  const auto it = edges_.find(EdgeKey(u, v));
  if (it == edges_.end()) {
    std::ostringstream os;
    os << "edge " << EdgeKey(u, v) << " not present";
    throw GraphError(GraphErrc::kUnknownEdge, os.str());
  }
  const Entry entry = it->second;
  edges_.erase(it);
  for (auto [a, b] : {std::pair{u, v}, std::pair{v, u}}) {
    auto& list = adjacency_[a];
    list.erase(std::lower_bound(list.begin(), list.end(), LevelNeighbor{entry.level, b}));
  }
  const auto size = level_sizes_.find(entry.level);
  if (--size->second == 0) level_sizes_.erase(size);
  return entry;
}

std::optional<EdgeRegistry::Entry> EdgeRegistry::find(VertexId u, VertexId v) const {
  const auto it = edges_.find(EdgeKey(u, v));
  if (it == edges_.end()) return std::nullopt;
  return it->second;
}

std::span<const LevelNeighbor> EdgeRegistry::neighbors(Level l, VertexId v) const {
  const auto& list = adjacency_.at(v);
  const auto lo = std::lower_bound(list.begin(), list.end(), LevelNeighbor{l, 0});
  const auto hi = std::lower_bound(lo, list.end(), LevelNeighbor{l + 1, 0});
  return {lo, hi};
}

std::size_t EdgeRegistry::level_size(Level l) const {
  const auto it = level_sizes_.find(l);
  return it == level_sizes_.end() ? 0 : it->second;
}

std::vector<Level> EdgeRegistry::occupied_levels() const {
  std::vector<Level> out;
  out.reserve(level_sizes_.size());
  for (const auto& [level, count] : level_sizes_) out.push_back(level);
  return out;
}

std::vector<LeveledEdge> EdgeRegistry::edges() const {
  std::vector<LeveledEdge> out;
  out.reserve(edges_.size());
  for (const auto& [key, entry] : edges_) out.push_back({key, entry.w, entry.level});
  std::sort(out.begin(), out.end(),
            [](const LeveledEdge& a, const LeveledEdge& b) { return a.key < b.key; });
  return out;
}

std::vector<LeveledEdge> EdgeRegistry::edges_at(Level l) const {
  std::vector<LeveledEdge> out;
  for (VertexId a = 0; a < adjacency_.size(); ++a) {
    for (const LevelNeighbor& nb : neighbors(l, a)) {
      if (a < nb.vertex) out.push_back({EdgeKey(a, nb.vertex), edges_.at(EdgeKey(a, nb.vertex)).w, l});
    }
  }
  return out;
}

std::string EdgeRegistry::self_check() const {
  std::ostringstream os;
  // Every adjacency entry must be a registered edge at the same level with a
  // mirrored entry; with 2m entries in total there is nothing else.
  std::map<Level, std::pair<Weight, Weight>> ranges;
  for (const auto& [level, count] : level_sizes_) {
    ranges.emplace(level, std::pair{level_lower_bound(level, cfg_), level_lower_bound(level + 1, cfg_)});
  }
  std::map<Level, std::size_t> counted;
  std::size_t entries = 0;
  for (VertexId a = 0; a < adjacency_.size(); ++a) {
    const auto& list = adjacency_[a];
    if (!std::is_sorted(list.begin(), list.end())) {
      os << "adjacency of " << a << " is not sorted";
      return os.str();
    }
    entries += list.size();
    for (const LevelNeighbor& nb : list) {
      if (nb.vertex < a) continue;
      const auto it = nb.vertex < adjacency_.size() ? edges_.find(EdgeKey(a, nb.vertex)) : edges_.end();
      if (it == edges_.end() || it->second.level != nb.level) {
        os << "adjacency entry " << EdgeKey(a, nb.vertex) << " at level " << nb.level
           << " is not a registered edge of that level";
        return os.str();
      }
      const auto range = ranges.find(nb.level);
      if (range == ranges.end() ||
          !(range->second.first <= it->second.w && it->second.w < range->second.second)) {
        os << "edge " << EdgeKey(a, nb.vertex) << " weight " << it->second.w << " outside level "
           << nb.level;
        return os.str();
      }
      const auto& back = adjacency_[nb.vertex];
      if (!std::binary_search(back.begin(), back.end(), LevelNeighbor{nb.level, a})) {
        os << "asymmetric adjacency " << a << "->" << nb.vertex << " at level " << nb.level;
        return os.str();
      }
      ++counted[nb.level];
    }
  }
  if (entries != 2 * edges_.size()) {
    os << "registry holds " << edges_.size() << " edges but " << entries << " adjacency entries";
    return os.str();
  }
  if (counted != level_sizes_) {
    os << "per-level edge counts out of date";
    return os.str();
  }
  return {};
}

}  // namespace dynmwm
