#include <random>
#include <set>

#include <gtest/gtest.h>

#include "dynmwm/edge_registry.hpp"

namespace dynmwm {
namespace {

GraphErrc code_of(auto&& fn) {
  try {
    fn();
  } catch (const GraphError& e) {
    return e.code();
  }
  ADD_FAILURE() << "no GraphError thrown";
  return GraphErrc::kInvalidWeight;
}

TEST(EdgeRegistry, RegisterFindUnregister) {
  EdgeRegistry g(4, resolve({}));
  EXPECT_EQ(g.register_edge(2, 1, 5.0), 2);
  ASSERT_TRUE(g.contains(1, 2));
  EXPECT_EQ(g.find(2, 1)->w, 5.0);
  EXPECT_EQ(g.edge_count(), 1u);
  const auto old = g.unregister_edge(1, 2);
  EXPECT_EQ(old.w, 5.0);
  EXPECT_EQ(old.level, 2);
  EXPECT_TRUE(g.empty());
  EXPECT_TRUE(g.occupied_levels().empty());
}

TEST(EdgeRegistry, RejectionsLeaveStateUnchanged) {
  EdgeRegistry g(4, resolve({}));
  g.register_edge(0, 1, 1.0);
  EXPECT_EQ(code_of([&] { g.register_edge(1, 0, 3.0); }), GraphErrc::kDuplicateEdge);
  EXPECT_EQ(code_of([&] { g.register_edge(2, 2, 3.0); }), GraphErrc::kSelfLoop);
  EXPECT_EQ(code_of([&] { g.register_edge(0, 4, 3.0); }), GraphErrc::kVertexOutOfRange);
  EXPECT_EQ(code_of([&] { g.register_edge(0, 2, 0.0); }), GraphErrc::kInvalidWeight);
  EXPECT_EQ(code_of([&] { g.unregister_edge(0, 2); }), GraphErrc::kUnknownEdge);
  EXPECT_EQ(code_of([&] { g.unregister_edge(0, 9); }), GraphErrc::kVertexOutOfRange);
  EXPECT_EQ(g.edge_count(), 1u);
  EXPECT_EQ(g.find(0, 1)->w, 1.0);
  EXPECT_EQ(g.self_check(), "");
}

TEST(EdgeRegistry, LevelNeighborsAreIdOrderedRuns) {
  EdgeRegistry g(8, resolve({}));
  g.register_edge(0, 5, 2.5);
  g.register_edge(0, 3, 3.0);
  g.register_edge(0, 7, 9.0);
  g.register_edge(0, 1, 2.0);
  g.register_edge(4, 0, 0.7);

  std::vector<VertexId> ids;
  for (const auto& nb : g.neighbors(1, 0)) ids.push_back(nb.vertex);
  EXPECT_EQ(ids, (std::vector<VertexId>{1, 3, 5}));
  EXPECT_EQ(g.neighbors(3, 0).size(), 1u);
  EXPECT_TRUE(g.neighbors(2, 0).empty());
  EXPECT_EQ(g.neighbors(0).size(), 5u);
  EXPECT_EQ(g.occupied_levels(), (std::vector<Level>{-1, 1, 3}));
  EXPECT_EQ(g.min_level(), -1);
  EXPECT_EQ(g.max_level(), 3);
  EXPECT_EQ(g.level_size(1), 3u);
  EXPECT_EQ(g.edges_at(3).size(), 1u);
}

TEST(EdgeRegistry, RandomOperationsMatchModel) {
  std::mt19937_64 rng(5);
  const std::size_t n = 30;
  EdgeRegistry g(n, resolve({.alpha = 1.7}));
  std::set<EdgeKey> model;
  std::uniform_int_distribution<VertexId> vertex(0, n - 1);
  std::uniform_real_distribution<double> weight(0.01, 1000.0);
  for (int step = 0; step < 5000; ++step) {
    const VertexId a = vertex(rng);
    const VertexId b = vertex(rng);
    if (a == b) continue;
    const EdgeKey e(a, b);
    if (model.contains(e)) {
      g.unregister_edge(a, b);
      model.erase(e);
    } else {
      g.register_edge(a, b, weight(rng));
      model.insert(e);
    }
    if (step % 250 == 0) ASSERT_EQ(g.self_check(), "") << "step " << step;
  }
  ASSERT_EQ(g.self_check(), "");
  std::set<EdgeKey> seen;
  for (const auto& e : g.edges()) seen.insert(e.key);
  EXPECT_EQ(seen, model);
  const auto all = g.edges();
  EXPECT_TRUE(std::is_sorted(all.begin(), all.end(),
                             [](const auto& x, const auto& y) { return x.key < y.key; }));
}

}  // namespace
}  // namespace dynmwm
