#include "dynmwm/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <optional>
#include <sstream>
#include <unordered_map>

#include "dynmwm/levels.hpp"
#include "dynmwm/rounding.hpp"

namespace dynmwm {
namespace {

constexpr std::size_t kTableMaxVertices = 20;
constexpr double kTieTolerance = 1e-12;

// Best matching weight on every vertex subset, indexed by bitmask over the
// compacted vertex ids. Small instances get a full table; larger (sparse)
// ones are memoised on the subsets actually reached.
class SubsetSolver {
 public:
  SubsetSolver(std::size_t k, std::vector<std::uint32_t> adj, std::vector<double> w)
      : k_(k), adj_(std::move(adj)), w_(std::move(w)) {
    if (k_ <= kTableMaxVertices) {
      table_.assign(std::size_t{1} << k_, 0.0);
      for (std::uint32_t mask = 1; mask < table_.size(); ++mask) table_[mask] = expand(mask);
    }
  }

  double value(std::uint32_t mask) {
    if (mask == 0) return 0.0;
    if (!table_.empty()) return table_[mask];
    if (auto it = memo_.find(mask); it != memo_.end()) return it->second;
    const double best = expand(mask);
    memo_.emplace(mask, best);
    return best;
  }

  [[nodiscard]] double weight(unsigned a, unsigned b) const { return w_[a * k_ + b]; }
  [[nodiscard]] std::uint32_t adjacency(unsigned a) const { return adj_[a]; }

 private:
  double expand(std::uint32_t mask) {
    const unsigned low = std::countr_zero(mask);
    const std::uint32_t rest = mask & (mask - 1);
    double best = value(rest);
    for (std::uint32_t cand = adj_[low] & rest; cand != 0; cand &= cand - 1) {
      const unsigned j = std::countr_zero(cand);
      best = std::max(best, weight(low, j) + value(rest & ~(std::uint32_t{1} << j)));
    }
    return best;
  }

  std::size_t k_;
  std::vector<std::uint32_t> adj_;
  std::vector<double> w_;
  std::vector<double> table_;
  std::unordered_map<std::uint32_t, double> memo_;
};

bool close_enough(double a, double b) {
  return std::abs(a - b) <= kTieTolerance * std::max({1.0, std::abs(a), std::abs(b)});
}

}  // namespace

ExactMwmResult brute_force_mwm(std::span<const LeveledEdge> edges) {
  std::vector<VertexId> vertices;
  for (const auto& e : edges) {
    vertices.push_back(e.key.lo);
    vertices.push_back(e.key.hi);
  }
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  const std::size_t k = vertices.size();
  if (k > kOracleMaxVertices) {
    throw OracleSizeError("exact oracle supports at most " + std::to_string(kOracleMaxVertices) +
                          " non-isolated vertices, instance has " + std::to_string(k));
  }
  auto index = [&](VertexId v) {
    return static_cast<unsigned>(std::lower_bound(vertices.begin(), vertices.end(), v) -
                                 vertices.begin());
  };

  std::vector<std::uint32_t> adj(k, 0);
  std::vector<double> w(k * k, 0.0);
  std::vector<const LeveledEdge*> by_pair(k * k, nullptr);
  for (const auto& e : edges) {
    const unsigned a = index(e.key.lo);
    const unsigned b = index(e.key.hi);
    adj[a] |= std::uint32_t{1} << b;
    adj[b] |= std::uint32_t{1} << a;
    w[a * k + b] = w[b * k + a] = e.w;
    by_pair[a * k + b] = by_pair[b * k + a] = &e;
  }

  ExactMwmResult result;
  if (k == 0) return result;
  SubsetSolver solver(k, std::move(adj), std::move(w));

  // Walk vertices in ascending id: match the lowest remaining vertex to its
  // smallest optimal partner, leaving it unmatched only when that is strictly
  // required. This yields the lexicographically smallest optimal edge list.
  std::uint32_t mask = k == 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << k) - 1;
  while (mask != 0) {
    const double target = solver.value(mask);
    const unsigned low = std::countr_zero(mask);
    const std::uint32_t rest = mask & (mask - 1);
    std::optional<unsigned> partner;
    for (std::uint32_t cand = solver.adjacency(low) & rest; cand != 0; cand &= cand - 1) {
      const unsigned j = std::countr_zero(cand);
      if (close_enough(solver.weight(low, j) + solver.value(rest & ~(std::uint32_t{1} << j)),
                       target)) {
        partner = j;
        break;
      }
    }
    if (partner) {
      const LeveledEdge& e = *by_pair[low * k + *partner];
      result.matching.push_back(e);
      result.weight += e.w;
      mask = rest & ~(std::uint32_t{1} << *partner);
    } else {
      mask = rest;
    }
  }
  std::sort(result.matching.begin(), result.matching.end(),
            [](const LeveledEdge& a, const LeveledEdge& b) { return a.key < b.key; });
  return result;
}

ExactMwmResult brute_force_mwm(const EngineSnapshot& snap) { return brute_force_mwm(snap.edges); }

RatioReport ratio_report(const EngineSnapshot& snap, const ExactMwmResult& opt) {
  RatioReport report;
  const RoundingConfig& cfg = snap.config;
  for (const auto& e : snap.matching) report.matching_weight += e.w;
  report.optimum_weight = opt.weight;

  double num = report.optimum_weight;
  double den = report.matching_weight;
  if (cfg.rounded()) {
    for (const auto& e : snap.matching) report.rounded_matching_weight += level_lower_bound(e.level, cfg);
    for (const auto& e : opt.matching) report.rounded_optimum_weight += level_lower_bound(e.level, cfg);
    num = report.rounded_optimum_weight;
    den = report.rounded_matching_weight;
    report.bound = rounded_state_ratio(cfg.alpha);
  } else {
    report.bound = plain_ratio(cfg.alpha);
  }
  if (den > 0.0) {
    report.ratio = num / den;
  } else {
    report.ratio = num > 0.0 ? std::numeric_limits<double>::infinity() : 1.0;
  }
  report.pass = report.ratio <= report.bound;
  return report;
}

namespace {

struct MatchedInfo {
  EdgeKey key;
  Level level;
};

// Highest level first, then smallest key.
bool better_target(const LeveledEdge& a, const LeveledEdge& b) {
  if (a.level != b.level) return a.level > b.level;
  return a.key < b.key;
}

}  // namespace

MappingAudit audit_mapping(const EngineSnapshot& snap, const ExactMwmResult& opt) {
  MappingAudit audit;
  const double alpha = snap.config.alpha;

  std::map<EdgeKey, LeveledEdge> in_m;
  std::unordered_map<VertexId, LeveledEdge> m_at;  // vertex -> its M-edge
  for (const auto& e : snap.matching) {
    in_m.emplace(e.key, e);
    m_at.emplace(e.key.lo, e);
    m_at.emplace(e.key.hi, e);
  }
  std::map<EdgeKey, LeveledEdge> in_h;
  std::map<std::pair<VertexId, Level>, LeveledEdge> h_at;  // (vertex, level) -> H-edge
  for (const auto& e : snap.h_edges) {
    in_h.emplace(e.key, e);
    h_at.emplace(std::pair{e.key.lo, e.level}, e);
    h_at.emplace(std::pair{e.key.hi, e.level}, e);
  }

  // Best M-edge touching `e` with level strictly above `above`.
  auto higher_m_neighbor = [&](const EdgeKey& e, Level above) -> std::optional<LeveledEdge> {
    std::optional<LeveledEdge> best;
    for (VertexId x : {e.lo, e.hi}) {
      const auto it = m_at.find(x);
      if (it == m_at.end() || it->second.level <= above) continue;
      if (!best || better_target(it->second, *best)) best = it->second;
    }
    return best;
  };

  auto fail = [&](const std::string& invariant, const std::string& witness) {
    if (!audit.violation) audit.violation = Violation{invariant, witness};
  };

  for (const auto& star : opt.matching) {
    MappedEdge mapped{star, MappingKind::kSelf, star.key, EdgeKey{}, true};
    std::ostringstream w;
    if (in_h.contains(star.key)) {
      if (in_m.contains(star.key)) {
        mapped.kind = MappingKind::kSelf;
      } else {
        const auto target = higher_m_neighbor(star.key, star.level);
        if (!target) {
          w << "H-edge " << star.key << " of M* at level " << star.level
            << " has no adjacent higher M-edge";
          fail("mapping-total", w.str());
          continue;
        }
        mapped.kind = MappingKind::kHigherNeighbor;
        mapped.target = target->key;
      }
    } else {
      std::vector<LeveledEdge> partners;  // level matching edges touching e*
      for (VertexId x : {star.key.lo, star.key.hi}) {
        const auto it = h_at.find({x, star.level});
        if (it != h_at.end()) partners.push_back(it->second);
      }
      std::sort(partners.begin(), partners.end(),
                [](const LeveledEdge& a, const LeveledEdge& b) { return a.key < b.key; });
      if (partners.empty()) {
        w << "edge " << star.key << " at level " << star.level
          << " is uncovered by its level matching";
        fail("mapping-total", w.str());
        continue;
      }
      const auto matched = std::find_if(partners.begin(), partners.end(),
                                        [&](const LeveledEdge& p) { return in_m.contains(p.key); });
      if (matched != partners.end()) {
        mapped.kind = MappingKind::kLevelPartner;
        mapped.target = matched->key;
      } else {
        std::optional<LeveledEdge> target;
        for (const auto& p : partners) {
          if ((target = higher_m_neighbor(p.key, p.level))) {
            mapped.via = p.key;
            break;
          }
        }
        if (!target) {
          w << "edge " << star.key << " at level " << star.level
            << ": no level partner reaches a higher M-edge";
          fail("mapping-total", w.str());
          continue;
        }
        mapped.kind = MappingKind::kThroughH;
        mapped.target = target->key;
      }
    }
    mapped.direct = mapped.target == star.key || mapped.target.adjacent(star.key);
    audit.mapping.push_back(mapped);
  }

  struct Preimage {
    std::size_t direct = 0;
    double direct_weight = 0.0;
    double indirect_weight = 0.0;
    std::map<Level, std::size_t> indirect_per_level;
  };
  std::map<EdgeKey, Preimage> preimages;
  for (const auto& m : audit.mapping) {
    Preimage& p = preimages[m.target];
    if (m.direct) {
      ++p.direct;
      p.direct_weight += m.optimum_edge.w;
    } else {
      ++p.indirect_per_level[m.optimum_edge.level];
      p.indirect_weight += m.optimum_edge.w;
    }
  }

  for (const auto& [key, p] : preimages) {
    const LeveledEdge& e = in_m.at(key);
    std::ostringstream w;
    audit.max_direct = std::max(audit.max_direct, p.direct);
    if (p.direct > 2) {
      w << "M-edge " << key << " has " << p.direct << " directly mapped edges";
      fail("claim-direct-count", w.str());
    }
    for (const auto& [level, count] : p.indirect_per_level) {
      audit.max_indirect_per_level = std::max(audit.max_indirect_per_level, count);
      if (level >= e.level) {
        w << "M-edge " << key << " at level " << e.level << " has an indirect edge at level " << level;
        fail("claim-indirect-level", w.str());
      }
      if (count > 2) {
        w << "M-edge " << key << " has " << count << " indirect edges at level " << level;
        fail("claim-indirect-count", w.str());
      }
    }
    if (!(p.direct_weight < 2.0 * alpha * e.w)) {
      w << "M-edge " << key << " weight " << e.w << ": direct preimage weight " << p.direct_weight
        << " >= 2a w(e) = " << 2.0 * alpha * e.w;
      fail("direct-weight", w.str());
    }
    if (!(p.indirect_weight < 2.0 * alpha * e.w / (alpha - 1.0))) {
      w << "M-edge " << key << " weight " << e.w << ": indirect preimage weight "
        << p.indirect_weight << " >= 2a w(e)/(a-1) = " << 2.0 * alpha * e.w / (alpha - 1.0);
      fail("indirect-weight", w.str());
    }
  }
  return audit;
}

}  // namespace dynmwm
