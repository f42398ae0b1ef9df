#include <map>
#include <set>

#include <gtest/gtest.h>

#include "dynmwm/edge_registry.hpp"
#include "dynmwm/generators.hpp"

namespace dynmwm {
namespace {

// Replays a stream on a registry; throws if any update is invalid.
std::size_t replay(const UpdateStream& s, std::size_t n) {
  EdgeRegistry g(n, resolve({}));
  for (const auto& ev : s.events) {
    if (const auto* ins = std::get_if<InsertEvent>(&ev)) g.register_edge(ins->u, ins->v, ins->w);
    if (const auto* del = std::get_if<DeleteEvent>(&ev)) g.unregister_edge(del->u, del->v);
  }
  return g.edge_count();
}

TEST(Generators, KindNames) {
  for (auto kind : {StreamKind::kRandom, StreamKind::kSlidingWindow, StreamKind::kAdversarialLevels}) {
    EXPECT_EQ(parse_stream_kind(to_string(kind)), kind);
  }
  EXPECT_FALSE(parse_stream_kind("bogus").has_value());
}

TEST(Generators, RandomIsValidAndDeterministic) {
  const GeneratorParams p{.n = 6, .steps = 500, .wmin = 2, .wmax = 9, .seed = 4};
  const auto s = generate_stream(StreamKind::kRandom, p);
  EXPECT_EQ(s, generate_stream(StreamKind::kRandom, p));
  EXPECT_EQ(s.update_count(), 500u);
  EXPECT_LE(s.vertex_bound(), 6u);
  EXPECT_NO_THROW(replay(s, 6));
  for (const auto& ev : s.events) {
    if (const auto* ins = std::get_if<InsertEvent>(&ev)) {
      EXPECT_GE(ins->w, 2.0);
      EXPECT_LE(ins->w, 9.0);
    }
  }
  auto q = p;
  q.seed = 5;
  EXPECT_NE(s, generate_stream(StreamKind::kRandom, q));
}

TEST(Generators, RandomSaturatesTinyGraph) {
  // n = 2 has a single pair, so inserts and deletes must alternate.
  const auto s = generate_stream(StreamKind::kRandom, {.n = 2, .steps = 10});
  for (std::size_t i = 0; i < s.events.size(); ++i) {
    EXPECT_EQ(std::holds_alternative<InsertEvent>(s.events[i]), i % 2 == 0);
  }
}

TEST(Generators, SlidingWindowLifetime) {
  const std::size_t window = 7;
  const auto s = generate_stream(StreamKind::kSlidingWindow,
                                 {.n = 12, .steps = 100, .window = window, .seed = 2});
  EXPECT_EQ(replay(s, 12), 0u);
  std::map<EdgeKey, std::size_t> born;
  std::size_t inserts = 0;
  for (const auto& ev : s.events) {
    if (const auto* ins = std::get_if<InsertEvent>(&ev)) {
      born[EdgeKey(ins->u, ins->v)] = inserts++;
    } else if (const auto* del = std::get_if<DeleteEvent>(&ev)) {
      const std::size_t age = inserts - born.at(EdgeKey(del->u, del->v));
      // During the drain no inserts happen, so only the steady phase is exact.
      if (inserts < 100) EXPECT_EQ(age, window);
    }
  }
  EXPECT_EQ(inserts, 100u);
}

TEST(Generators, AdversarialLayout) {
  const std::size_t depth = 3;
  const auto s = generate_stream(StreamKind::kAdversarialLevels, {.alpha = 3.0, .depth = depth});
  EXPECT_EQ(s.vertex_bound(), adversarial_vertex_count(depth));
  EXPECT_EQ(s.update_count(), 3 + 4 * depth);
  EXPECT_TRUE(std::holds_alternative<QueryEvent>(s.events.back()));
  EXPECT_EQ(std::get<InsertEvent>(s.events.front()).w, 27.0);
  EXPECT_NO_THROW(replay(s, adversarial_vertex_count(depth)));
}

TEST(Generators, RejectBadParameters) {
  EXPECT_THROW((void)generate_stream(StreamKind::kRandom, {.n = 1}), std::invalid_argument);
  EXPECT_THROW((void)generate_stream(StreamKind::kRandom, {.wmin = 5, .wmax = 1}),
               std::invalid_argument);
  EXPECT_THROW((void)generate_stream(StreamKind::kRandom, {.wmin = 0}), std::invalid_argument);
  EXPECT_THROW((void)generate_stream(StreamKind::kSlidingWindow, {.window = 0}),
               std::invalid_argument);
  EXPECT_THROW((void)generate_stream(StreamKind::kAdversarialLevels, {.alpha = 1.0}),
               std::invalid_argument);
}

}  // namespace
}  // namespace dynmwm
