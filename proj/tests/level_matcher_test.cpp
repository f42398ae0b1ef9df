#include <random>
#include <set>

#include <gtest/gtest.h>

#include "dynmwm/level_matcher.hpp"

namespace dynmwm {
namespace {

struct Fixture {
  explicit Fixture(std::size_t n) : graph(n, resolve({})), matcher(n) {}

  DeltaReport insert(VertexId u, VertexId v, Weight w = 1.0) {
    const Level l = graph.register_edge(u, v, w);
    return matcher.insert(graph, l, u, v);
  }
  DeltaReport erase(VertexId u, VertexId v) {
    const Level l = graph.unregister_edge(u, v).level;
    return matcher.erase(graph, l, u, v);
  }

  EdgeRegistry graph;
  SurrogateLevelMatcher matcher;
};

using Keys = std::vector<EdgeKey>;

TEST(SurrogateLevelMatcher, GreedyInsert) {
  Fixture f(4);
  auto d = f.insert(0, 1);
  EXPECT_EQ(d.added, Keys{EdgeKey(0, 1)});
  EXPECT_TRUE(d.removed.empty());
  d = f.insert(1, 2);
  EXPECT_TRUE(d.empty());
  EXPECT_EQ(f.matcher.mate(0, 1), 0u);
  EXPECT_FALSE(f.matcher.mate(0, 2).has_value());
  // Different level: independent of level 0.
  d = f.insert(1, 3, 4.0);
  EXPECT_EQ(d.added, Keys{EdgeKey(1, 3)});
  EXPECT_EQ(f.matcher.levels(), (std::vector<Level>{0, 2}));
}

TEST(SurrogateLevelMatcher, DeletionRepairsInIdOrder) {
  Fixture f(6);
  f.insert(1, 2);
  f.insert(1, 5);
  f.insert(1, 3);
  f.insert(2, 4);
  f.insert(2, 0);
  const auto d = f.erase(1, 2);
  EXPECT_EQ(d.removed, Keys{EdgeKey(1, 2)});
  // Endpoint 1 goes first and takes its lowest free neighbour 3; then 2 takes 0.
  EXPECT_EQ(d.added, (Keys{EdgeKey(1, 3), EdgeKey(0, 2)}));
  EXPECT_EQ(f.matcher.matching(0), (Keys{EdgeKey(0, 2), EdgeKey(1, 3)}));
}

TEST(SurrogateLevelMatcher, DeletingUnmatchedEdgeIsSilent) {
  Fixture f(3);
  f.insert(0, 1);
  f.insert(1, 2);
  EXPECT_TRUE(f.erase(1, 2).empty());
  EXPECT_TRUE(f.matcher.contains(0, EdgeKey(0, 1)));
  EXPECT_TRUE(f.erase(0, 1).removed.size() == 1);
  EXPECT_TRUE(f.matcher.empty(0));
  EXPECT_TRUE(f.matcher.levels().empty());
}

TEST(SurrogateLevelMatcher, RandomOperationsStayMaximal) {
  std::mt19937_64 rng(17);
  const std::size_t n = 16;
  Fixture f(n);
  std::set<EdgeKey> present;
  std::uniform_int_distribution<VertexId> vertex(0, n - 1);
  std::uniform_real_distribution<double> weight(1.0, 16.0);
  for (int step = 0; step < 4000; ++step) {
    const VertexId a = vertex(rng);
    const VertexId b = vertex(rng);
    if (a == b) continue;
    if (present.erase(EdgeKey(a, b))) {
      f.erase(a, b);
    } else {
      f.insert(a, b, weight(rng));
      present.insert(EdgeKey(a, b));
    }

    const auto all = f.matcher.all_matched();
    ASSERT_TRUE(std::is_sorted(all.begin(), all.end(), [](const auto& x, const auto& y) {
      return std::pair(x.level, x.key) < std::pair(y.level, y.key);
    }));
    for (const auto& e : all) {
      ASSERT_EQ(f.graph.find(e.key.lo, e.key.hi)->level, e.level);
      ASSERT_EQ(f.matcher.mate(e.level, e.key.lo), e.key.hi);
      ASSERT_EQ(f.matcher.mate(e.level, e.key.hi), e.key.lo);
    }
    for (const auto& e : f.graph.edges()) {
      ASSERT_TRUE(f.matcher.mate(e.level, e.key.lo) || f.matcher.mate(e.level, e.key.hi))
          << "step " << step << " edge " << e.key;
    }
    ASSERT_EQ(f.matcher.levels(), f.graph.occupied_levels());
  }
}

}  // namespace
}  // namespace dynmwm
