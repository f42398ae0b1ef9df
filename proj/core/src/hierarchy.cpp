#include "dynmwm/hierarchy.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "dynmwm/levels.hpp"

#define DYNMWM_CHECK(cond, msg)                                            \
  do {                                                                     \
    if (!(cond)) throw std::logic_error(std::string("dynmwm: ") + (msg));  \
  } while (false)

namespace dynmwm {

DynamicMatching::DynamicMatching(std::size_t vertex_count, RoundingConfig cfg,
                                 std::unique_ptr<LevelMatcher> matcher)
    : registry_(vertex_count, resolve(std::move(cfg))),
      matcher_(matcher ? std::move(matcher) : make_surrogate_matcher(vertex_count)),
      mate_(vertex_count, kNoVertex),
      mate_level_(vertex_count, 0),
      h_nbr_(vertex_count) {}

std::optional<VertexId> DynamicMatching::mate_of(VertexId v) const {
  const VertexId m = mate_.at(v);
  if (m == kNoVertex) return std::nullopt;
  return m;
}

std::optional<Level> DynamicMatching::mate_level(VertexId v) const {
  if (is_free(v)) return std::nullopt;
  return mate_level_[v];
}

std::optional<VertexId> DynamicMatching::h_neighbor(VertexId v, Level l) const {
  const VertexId u = h_nbr_.at(v).get(l);
  if (u == kNoVertex) return std::nullopt;
  return u;
}

std::optional<Level> DynamicMatching::max_level() const {
  if (registry_.empty()) return std::nullopt;
  return registry_.max_level();
}

std::optional<Level> DynamicMatching::min_level() const {
  if (registry_.empty()) return std::nullopt;
  return registry_.min_level();
}

Level DynamicMatching::edge_level(VertexId u, VertexId v) const {
  const auto entry = registry_.find(u, v);
  DYNMWM_CHECK(entry.has_value(), "H-edge missing from registry");
  return entry->level;
}

void DynamicMatching::add_to_matching(VertexId u, VertexId v) {
  DYNMWM_CHECK(is_free(u) && is_free(v), "add_to_matching on a matched vertex");
  const Level l = edge_level(u, v);
  DYNMWM_CHECK(h_nbr_[u].get(l) == v, "add_to_matching on an edge outside H");
  mate_[u] = v;
  mate_[v] = u;
  mate_level_[u] = l;
  mate_level_[v] = l;
  matching_.emplace(EdgeKey(u, v), l);
}

void DynamicMatching::del_from_matching(VertexId u, VertexId v) {
  DYNMWM_CHECK(mate_[u] == v && mate_[v] == u, "del_from_matching on an edge outside M");
  mate_[u] = kNoVertex;
  mate_[v] = kNoVertex;
  matching_.erase(EdgeKey(u, v));
}

// Scans u's H-edges from `lev` downwards. A free partner is taken outright; a
// partner matched strictly below the scanned level is stolen and its ex-mate
// is rescanned from the level of the edge it lost. Each rescan starts strictly
// below the level of the edge that caused it, so the recursion depth is at
// most the number of occupied levels.
//
// u may have been rematched by an earlier cascade within the same update (the
// second endpoint of a deleted M-edge). Then only levels above u's current
// M-edge are scanned, and taking an edge there releases u's old mate, which
// is rescanned like any other displaced vertex.
void DynamicMatching::handle_free(VertexId start, Level lev) {
  struct Pending {
    VertexId vertex;
    Level from;
    std::size_t depth;
  };
  std::vector<Pending> stack{{start, lev, 1}};

  while (!stack.empty()) {
    const Pending task = stack.back();
    stack.pop_back();
    cascade_depth_ = std::max(cascade_depth_, task.depth);
    const VertexId u = task.vertex;

    const auto& slots = h_nbr_[u].slots();
    auto it = std::upper_bound(slots.begin(), slots.end(), task.from,
                               [](Level x, const LevelSlots::Slot& s) { return x < s.first; });
    while (it != slots.begin()) {
      --it;
      const Level l = it->first;
      const VertexId v = it->second;
      if (!is_free(u) && l <= mate_level_[u]) break;
      if (!is_free(v) && mate_level_[v] >= l) continue;

      const VertexId old_u = mate_[u];
      const Level old_u_level = mate_level_[u];
      const VertexId old_v = mate_[v];
      const Level old_v_level = mate_level_[v];
      if (old_u != kNoVertex) del_from_matching(u, old_u);
      if (old_v != kNoVertex) {
        del_from_matching(v, old_v);
        ++evictions_;
      }
      add_to_matching(u, v);
      // LIFO: v's ex-mate is processed first, then u's.
      if (old_u != kNoVertex) stack.push_back({old_u, old_u_level, task.depth + 1});
      if (old_v != kNoVertex) stack.push_back({old_v, old_v_level, task.depth + 1});
      break;
    }
  }
}

void DynamicMatching::add_edge_h(EdgeKey e, Level l) {
  const VertexId u = e.lo;
  const VertexId v = e.hi;
  h_nbr_[u].set(l, v);
  h_nbr_[v].set(l, u);

  const bool u_free = is_free(u);
  const bool v_free = is_free(v);
  if (u_free && v_free) {
    add_to_matching(u, v);
  } else if (u_free || v_free) {
    // The test is on the matched endpoint's M-edge; a free vertex has none.
    const VertexId matched = u_free ? v : u;
    if (mate_level_[matched] < l) {
      const VertexId ex = mate_[matched];
      const Level ex_level = mate_level_[matched];
      del_from_matching(matched, ex);
      ++evictions_;
      add_to_matching(u, v);
      handle_free(ex, ex_level);
    }
  } else if (mate_level_[u] < l && mate_level_[v] < l) {
    const VertexId u_ex = mate_[u];
    const VertexId v_ex = mate_[v];
    const Level u_ex_level = mate_level_[u];
    const Level v_ex_level = mate_level_[v];
    del_from_matching(u, u_ex);
    del_from_matching(v, v_ex);
    evictions_ += 2;
    add_to_matching(u, v);
    handle_free(u_ex, u_ex_level);
    handle_free(v_ex, v_ex_level);
  }
}

void DynamicMatching::delete_edge_h(EdgeKey e, Level l) {
  const VertexId u = e.lo;
  const VertexId v = e.hi;
  h_nbr_[u].clear(l);
  h_nbr_[v].clear(l);
  if (mate_[u] != v) return;
  del_from_matching(u, v);
  handle_free(u, l);
  handle_free(v, l);
}

UpdateSummary DynamicMatching::edge_update(VertexId u, VertexId v, Weight w, UpdateKind kind) {
  UpdateSummary summary;
  DeltaReport delta;
  if (kind == UpdateKind::kInsert) {
    summary.level = registry_.register_edge(u, v, w);
    delta = matcher_->insert(registry_, summary.level, u, v);
  } else {
    summary.level = registry_.unregister_edge(u, v).level;
    delta = matcher_->erase(registry_, summary.level, u, v);
  }

  cascade_depth_ = 0;
  evictions_ = 0;
  for (const EdgeKey& e : delta.removed) delete_edge_h(e, summary.level);
  for (const EdgeKey& e : delta.added) add_edge_h(e, summary.level);

  summary.removed = delta.removed.size();
  summary.added = delta.added.size();
  summary.cascade_depth = cascade_depth_;
  summary.evictions = evictions_;
  return summary;
}

std::vector<LeveledEdge> DynamicMatching::current_matching() const {
  std::vector<LeveledEdge> out;
  out.reserve(matching_.size());
  for (const auto& [key, level] : matching_) {
    out.push_back({key, registry_.find(key.lo, key.hi)->w, level});
  }
  return out;
}

Weight DynamicMatching::matching_weight() const {
  Weight total = 0.0;
  for (const auto& [key, level] : matching_) total += registry_.find(key.lo, key.hi)->w;
  return total;
}

Weight DynamicMatching::rounded_matching_weight() const {
  DYNMWM_CHECK(config().rounded(), "rounded weight requested in plain mode");
  Weight total = 0.0;
  for (const auto& [key, level] : matching_) total += level_lower_bound(level, config());
  return total;
}

std::vector<LeveledEdge> DynamicMatching::h_edges() const {
  std::vector<LeveledEdge> out = matcher_->all_matched();
  for (auto& e : out) e.w = registry_.find(e.key.lo, e.key.hi)->w;
  std::sort(out.begin(), out.end(),
            [](const LeveledEdge& a, const LeveledEdge& b) { return a.key < b.key; });
  return out;
}

std::vector<LeveledEdge> DynamicMatching::static_combine() const {
  std::map<Level, std::vector<EdgeKey>, std::greater<>> by_level;
  for (const auto& e : matcher_->all_matched()) by_level[e.level].push_back(e.key);

  std::vector<LeveledEdge> out;
  std::vector<bool> taken(vertex_count(), false);
  for (const auto& [l, edges] : by_level) {
    for (const EdgeKey& e : edges) {
      if (taken[e.lo] || taken[e.hi]) continue;
      taken[e.lo] = taken[e.hi] = true;
      out.push_back({e, registry_.find(e.lo, e.hi)->w, l});
    }
  }
  std::sort(out.begin(), out.end(),
            [](const LeveledEdge& a, const LeveledEdge& b) { return a.key < b.key; });
  return out;
}

bool DynamicMatching::maximal_in_h() const {
  for (VertexId v = 0; v < h_nbr_.size(); ++v) {
    if (!is_free(v)) continue;
    for (const auto& [l, u] : h_nbr_[v].slots()) {
      if (is_free(u)) return false;
    }
  }
  return true;
}

namespace {

AuditReport fail(std::string invariant, const std::ostringstream& witness) {
  return AuditReport{Violation{std::move(invariant), witness.str()}};
}

}  // namespace

AuditReport DynamicMatching::check_invariants() const {
  std::ostringstream w;

  if (std::string err = registry_.self_check(); !err.empty()) {
    w << err;
    return fail("registry", w);
  }

  // Occupied levels: M_l non-empty exactly where E_l is.
  const auto occupied = registry_.occupied_levels();
  if (occupied != matcher_->levels()) {
    w << "registry levels {";
    for (Level l : occupied) w << ' ' << l;
    w << " } vs matcher levels {";
    for (Level l : matcher_->levels()) w << ' ' << l;
    w << " }";
    return fail("occupied-levels", w);
  }
  if (!occupied.empty() && (*max_level() != occupied.back() || *min_level() != occupied.front())) {
    w << "Lmax/Lmin disagree with occupied levels";
    return fail("occupied-levels", w);
  }

  // Per-level matchings: a matching inside E_l.
  const auto h = matcher_->all_matched();
  for (const auto& [e, unused, l] : h) {
    const auto entry = registry_.find(e.lo, e.hi);
    if (!entry || entry->level != l) {
      w << "M_" << l << " edge " << e << " is not a level-" << l << " edge";
      return fail("level-matching-subset", w);
    }
    if (matcher_->mate(l, e.lo) != e.hi || matcher_->mate(l, e.hi) != e.lo) {
      w << "M_" << l << " edge " << e << " has inconsistent mates";
      return fail("level-matching", w);
    }
  }

  // Per-level maximality.
  for (VertexId a = 0; a < vertex_count(); ++a) {
    for (const LevelNeighbor& nb : registry_.neighbors(a)) {
      if (nb.vertex < a) continue;
      if (!matcher_->mate(nb.level, a) && !matcher_->mate(nb.level, nb.vertex)) {
        w << "edge " << EdgeKey(a, nb.vertex) << " at level " << nb.level
          << " has both endpoints free in M_" << nb.level;
        return fail("level-maximality", w);
      }
    }
  }

  // N(v,l) = u  <=>  (u,v) in M_l.
  std::size_t slots = 0;
  for (VertexId v = 0; v < h_nbr_.size(); ++v) {
    for (const auto& [l, u] : h_nbr_[v].slots()) {
      ++slots;
      if (matcher_->mate(l, v) != u) {
        w << "N(" << v << "," << l << ")=" << u << " but (" << v << "," << u << ") not in M_" << l;
        return fail("h-bookkeeping", w);
      }
    }
  }
  if (slots != 2 * h.size()) {
    w << "N holds " << slots << " entries for " << h.size() << " H-edges";
    return fail("h-bookkeeping", w);
  }

  // M is a matching inside H, consistent with Mate/Free. Mate symmetry plus
  // 2|M| mated vertices, each M-edge mating its endpoints, pins Free(v) to
  // "v is not an endpoint of M".
  std::size_t matched_vertices = 0;
  for (VertexId v = 0; v < mate_.size(); ++v) {
    const VertexId u = mate_[v];
    if (u == kNoVertex) continue;
    ++matched_vertices;
    if (u >= mate_.size() || mate_[u] != v) {
      w << "Mate(" << v << ")=" << u << " is not symmetric";
      return fail("mate-symmetry", w);
    }
  }
  if (matched_vertices != 2 * matching_.size()) {
    w << matched_vertices << " matched vertices for " << matching_.size() << " M-edges";
    return fail("free-consistency", w);
  }
  for (const auto& [e, l] : matching_) {
    if (mate_[e.lo] != e.hi) {
      w << "M-edge " << e << " endpoints not mated";
      return fail("matching", w);
    }
    if (mate_level_[e.lo] != l || mate_level_[e.hi] != l) {
      w << "M-edge " << e << " at level " << l << " but mate levels " << mate_level_[e.lo] << ", "
        << mate_level_[e.hi];
      return fail("mate-level", w);
    }
    if (h_nbr_[e.lo].get(l) != e.hi) {
      w << "M-edge " << e << " at level " << l << " is not in H";
      return fail("matching-in-h", w);
    }
  }

  // Every H-edge is in M or touches a strictly higher M-edge.
  for (VertexId v = 0; v < h_nbr_.size(); ++v) {
    for (const auto& [l, u] : h_nbr_[v].slots()) {
      if (u < v || mate_[v] == u) continue;
      const bool covered = (!is_free(v) && mate_level_[v] > l) || (!is_free(u) && mate_level_[u] > l);
      if (!covered) {
        w << "H-edge (" << v << "," << u << ") at level " << l << " is not in M; ";
        for (VertexId x : {v, u}) {
          if (is_free(x)) {
            w << x << " is free; ";
          } else {
            w << x << " matched to " << mate_[x] << " at level " << mate_level_[x] << "; ";
          }
        }
        return fail("hierarchy", w);
      }
    }
  }
  return {};
}

EngineSnapshot DynamicMatching::snapshot() const {
  EngineSnapshot snap;
  snap.vertex_count = vertex_count();
  snap.config = config();
  snap.edges = registry_.edges();
  snap.h_edges = h_edges();
  snap.matching = current_matching();
  return snap;
}

}  // namespace dynmwm
