#include "dynmwm/level_matcher.hpp"

#include <algorithm>

namespace dynmwm {

void SurrogateLevelMatcher::match(Level l, VertexId a, VertexId b) {
  mates_[a].set(l, b);
  mates_[b].set(l, a);
  ++matched_count_[l];
}

void SurrogateLevelMatcher::unmatch(Level l, VertexId a, VertexId b) {
  mates_[a].clear(l);
  mates_[b].clear(l);
  const auto it = matched_count_.find(l);
  if (--it->second == 0) matched_count_.erase(it);
}

DeltaReport SurrogateLevelMatcher::insert(const EdgeRegistry&, Level l, VertexId u, VertexId v) {
  DeltaReport delta;
  if (mates_[u].get(l) == kNoVertex && mates_[v].get(l) == kNoVertex) {
    match(l, u, v);
    delta.added.emplace_back(u, v);
  }
  return delta;
}

DeltaReport SurrogateLevelMatcher::erase(const EdgeRegistry& graph, Level l, VertexId u,
                                         VertexId v) {
  DeltaReport delta;
  if (mates_[u].get(l) != v) return delta;
  unmatch(l, u, v);
  delta.removed.emplace_back(u, v);

  for (VertexId x : {std::min(u, v), std::max(u, v)}) {
    for (const LevelNeighbor& nb : graph.neighbors(l, x)) {
      if (mates_[nb.vertex].get(l) == kNoVertex) {
        match(l, x, nb.vertex);
        delta.added.emplace_back(x, nb.vertex);
        break;
      }
    }
  }
  return delta;
}

bool SurrogateLevelMatcher::empty(Level l) const { return !matched_count_.contains(l); }

std::optional<VertexId> SurrogateLevelMatcher::mate(Level l, VertexId v) const {
  const VertexId m = mates_.at(v).get(l);
  if (m == kNoVertex) return std::nullopt;
  return m;
}

bool SurrogateLevelMatcher::contains(Level l, EdgeKey e) const {
  return mates_.at(e.lo).get(l) == e.hi;
}

std::vector<EdgeKey> SurrogateLevelMatcher::matching(Level l) const {
  std::vector<EdgeKey> out;
  if (empty(l)) return out;
  for (VertexId a = 0; a < mates_.size(); ++a) {
    const VertexId b = mates_[a].get(l);
    if (b != kNoVertex && a < b) out.emplace_back(a, b);
  }
  return out;
}

std::vector<Level> SurrogateLevelMatcher::levels() const {
  std::vector<Level> out;
  out.reserve(matched_count_.size());
  for (const auto& [l, count] : matched_count_) out.push_back(l);
  return out;
}

std::vector<LeveledEdge> SurrogateLevelMatcher::all_matched() const {
  std::vector<LeveledEdge> out;
  for (VertexId a = 0; a < mates_.size(); ++a) {
    for (const auto& [l, b] : mates_[a].slots()) {
      if (a < b) out.push_back({EdgeKey(a, b), 0.0, l});
    }
  }
  std::sort(out.begin(), out.end(), [](const LeveledEdge& x, const LeveledEdge& y) {
    return x.level != y.level ? x.level < y.level : x.key < y.key;
  });
  return out;
}

std::unique_ptr<LevelMatcher> make_surrogate_matcher(std::size_t vertex_count) {
  return std::make_unique<SurrogateLevelMatcher>(vertex_count);
}

}  // namespace dynmwm
