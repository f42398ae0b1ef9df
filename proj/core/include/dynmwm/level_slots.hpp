#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "dynmwm/graph.hpp"

namespace dynmwm {

/// Per-vertex map Level -> partner vertex, holding at most one partner per
/// level. Kept as a sorted vector: a vertex touches only O(log C) levels.
class LevelSlots {
 public:
  using Slot = std::pair<Level, VertexId>;

  [[nodiscard]] VertexId get(Level l) const {
    const auto it = lower(l);
    return it != slots_.end() && it->first == l ? it->second : kNoVertex;
  }

  void set(Level l, VertexId v) {
    auto it = lower(l);
    if (it != slots_.end() && it->first == l) {
      it->second = v;
    } else {
      slots_.insert(it, {l, v});
    }
  }

  void clear(Level l) {
    const auto it = lower(l);
    if (it != slots_.end() && it->first == l) slots_.erase(it);
  }

  [[nodiscard]] bool empty() const { return slots_.empty(); }
  [[nodiscard]] std::size_t size() const { return slots_.size(); }
  /// Ascending by level.
  [[nodiscard]] const std::vector<Slot>& slots() const { return slots_; }

 private:
  [[nodiscard]] std::vector<Slot>::const_iterator lower(Level l) const {
    return std::lower_bound(slots_.begin(), slots_.end(), l,
                            [](const Slot& s, Level x) { return s.first < x; });
  }
  std::vector<Slot>::iterator lower(Level l) {
    return std::lower_bound(slots_.begin(), slots_.end(), l,
                            [](const Slot& s, Level x) { return s.first < x; });
  }

  std::vector<Slot> slots_;
};

}  // namespace dynmwm
