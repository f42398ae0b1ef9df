#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <stdexcept>
#include <vector>

#include "dynmwm/graph.hpp"
#include "dynmwm/snapshot.hpp"

namespace dynmwm {

/// Largest number of non-isolated vertices the exact oracle accepts.
inline constexpr std::size_t kOracleMaxVertices = 24;

class OracleSizeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct ExactMwmResult {
  Weight weight = 0.0;
  std::vector<LeveledEdge> matching;  // sorted by key
};

/// Exact maximum-weight matching by dynamic programming over vertex subsets,
/// O(2^k * k) for k non-isolated vertices. Among optimal matchings the
/// lexicographically smallest sorted edge list is returned.
[[nodiscard]] ExactMwmResult brute_force_mwm(std::span<const LeveledEdge> edges);
[[nodiscard]] ExactMwmResult brute_force_mwm(const EngineSnapshot& snap);

/// Approximation check of one engine state against the exact optimum.
///
/// Plain mode: ratio = w(M*)/w(M), bound = 2a/(a-1) + 2a.
/// Rounded mode: both sides are re-weighted to alpha^(level+r) and
/// ratio = w_r(M*)/w_r(M), bound = 2a/(a-1).
/// An empty M against an empty M* has ratio 1.
struct RatioReport {
  double ratio = 1.0;
  double bound = 0.0;
  bool pass = true;
  Weight matching_weight = 0.0;  // original weights
  Weight optimum_weight = 0.0;
  Weight rounded_matching_weight = 0.0;  // rounded mode only
  Weight rounded_optimum_weight = 0.0;
};

[[nodiscard]] RatioReport ratio_report(const EngineSnapshot& snap, const ExactMwmResult& opt);

enum class MappingKind {
  kSelf = 1,          // e* in M
  kHigherNeighbor,    // e* in H \ M, charged to an adjacent higher M-edge
  kLevelPartner,      // e* not in H, its level-matching partner is in M
  kThroughH,          // e* not in H, charged through an H-edge to a higher M-edge
};

struct MappedEdge {
  LeveledEdge optimum_edge;
  MappingKind kind = MappingKind::kSelf;
  EdgeKey target;
  EdgeKey via;          // intermediate H-edge for kThroughH
  bool direct = true;   // optimum_edge is target or touches it
};

struct MappingAudit {
  std::vector<MappedEdge> mapping;
  std::optional<Violation> violation;
  std::size_t max_direct = 0;              // largest direct preimage of one M-edge
  std::size_t max_indirect_per_level = 0;  // largest indirect preimage on one level
  [[nodiscard]] bool ok() const { return !violation.has_value(); }
};

/// Builds the charging map from M* into M and checks: every M*-edge is
/// mapped; each M-edge receives at most two direct edges and at most two
/// indirect edges per strictly lower level; direct weight < 2a w(e); indirect
/// weight < 2a w(e)/(a-1).
///
/// Ties pick the candidate M-edge of highest level, then lowest key; an
/// unmatched optimum edge outside H prefers a level partner that is in M.
[[nodiscard]] MappingAudit audit_mapping(const EngineSnapshot& snap, const ExactMwmResult& opt);

}  // namespace dynmwm
