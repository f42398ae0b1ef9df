#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <random>
#include <span>
#include <variant>
#include <vector>

#include "dynmwm/graph.hpp"
#include "dynmwm/hierarchy.hpp"
#include "dynmwm/stream.hpp"

namespace dynmwm {

// Reaches into DynamicMatching to corrupt state for audit tests.
struct HierarchyTestAccess {
  static std::vector<VertexId>& mate(DynamicMatching& d) { return d.mate_; }
  static std::vector<Level>& mate_level(DynamicMatching& d) { return d.mate_level_; }
  static std::vector<LevelSlots>& h_nbr(DynamicMatching& d) { return d.h_nbr_; }
  static std::map<EdgeKey, Level>& matching(DynamicMatching& d) { return d.matching_; }
  static void add_to_matching(DynamicMatching& d, VertexId u, VertexId v) {
    d.add_to_matching(u, v);
  }
  static void del_from_matching(DynamicMatching& d, VertexId u, VertexId v) {
    d.del_from_matching(u, v);
  }
  static void handle_free(DynamicMatching& d, VertexId u, Level l) { d.handle_free(u, l); }
};

}  // namespace dynmwm

namespace dynmwm::testing {

// Maximum weight matching by enumerating every matching exactly once: the
// lowest undecided vertex is either left unmatched or paired with one of its
// undecided neighbours. Independent of the subset DP in the library.
inline Weight enumerate_mwm(std::span<const LeveledEdge> edges) {
  std::vector<VertexId> ids;
  for (const auto& e : edges) {
    ids.push_back(e.key.lo);
    ids.push_back(e.key.hi);
  }
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  const auto index = [&](VertexId v) {
    return static_cast<std::size_t>(std::lower_bound(ids.begin(), ids.end(), v) - ids.begin());
  };
  const std::size_t k = ids.size();
  std::vector<std::vector<std::pair<std::size_t, Weight>>> adj(k);
  for (const auto& e : edges) {
    adj[index(e.key.lo)].push_back({index(e.key.hi), e.w});
    adj[index(e.key.hi)].push_back({index(e.key.lo), e.w});
  }

  std::vector<bool> done(k, false);
  Weight best = 0.0;
  std::function<void(std::size_t, Weight)> go = [&](std::size_t v, Weight acc) {
    while (v < k && done[v]) ++v;
    if (v == k) {
      best = std::max(best, acc);
      return;
    }
    done[v] = true;
    go(v + 1, acc);
    for (const auto& [u, w] : adj[v]) {
      if (done[u]) continue;
      done[u] = true;
      go(v + 1, acc + w);
      done[u] = false;
    }
    done[v] = false;
  };
  go(0, 0.0);
  return best;
}

// Each pair of [0,n) is an edge with probability p, weight uniform in [wmin, wmax].
inline std::vector<LeveledEdge> random_graph(std::mt19937_64& rng, std::size_t n, double p,
                                             double wmin, double wmax) {
  std::bernoulli_distribution keep(p);
  std::uniform_real_distribution<double> weight(wmin, wmax);
  std::vector<LeveledEdge> out;
  for (VertexId a = 0; a < n; ++a) {
    for (VertexId b = a + 1; b < n; ++b) {
      if (keep(rng)) out.push_back({EdgeKey(a, b), weight(rng), 0});
    }
  }
  return out;
}

// Applies one stream event; queries are ignored.
inline void apply(DynamicMatching& engine, const StreamEvent& ev) {
  if (const auto* ins = std::get_if<InsertEvent>(&ev)) {
    engine.insert_edge(ins->u, ins->v, ins->w);
  } else if (const auto* del = std::get_if<DeleteEvent>(&ev)) {
    engine.delete_edge(del->u, del->v);
  }
}

inline bool is_matching(std::span<const LeveledEdge> edges) {
  std::vector<VertexId> seen;
  for (const auto& e : edges) {
    seen.push_back(e.key.lo);
    seen.push_back(e.key.hi);
  }
  std::sort(seen.begin(), seen.end());
  return std::adjacent_find(seen.begin(), seen.end()) == seen.end();
}

}  // namespace dynmwm::testing
