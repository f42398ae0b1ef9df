#include <sstream>

#include <gtest/gtest.h>
#include <json.hpp>

#include "dynmwm/generators.hpp"
#include "dynmwm/runner.hpp"

namespace dynmwm {
namespace {

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

TEST(CascadeDepthLimit, Values) {
  EXPECT_EQ(cascade_depth_limit(2.0, 1.0, 1.0), 2u);
  EXPECT_EQ(cascade_depth_limit(2.0, 1.0, 100.0), 8u);
  EXPECT_EQ(cascade_depth_limit(2.0, 1.0, 1024.0), 12u);
  EXPECT_EQ(cascade_depth_limit(10.0, 1.0, 1e6), 8u);
}

TEST(Runner, TsvCheckpointsAndSummary) {
  const auto stream = parse_stream("+ 0 1 1\n+ 1 2 4\nq\n- 1 2\n");
  std::ostringstream out;
  const auto stats =
      run(stream, 3, {}, {.verify = true, .oracle = true, .out = &out});
  EXPECT_EQ(stats.status(), ExitStatus::kPass);
  ASSERT_EQ(stats.checkpoints.size(), 2u);
  EXPECT_EQ(stats.checkpoints[0].step, 2u);
  EXPECT_EQ(stats.checkpoints[0].weight, 4.0);
  EXPECT_EQ(*stats.checkpoints[0].optimum, 4.0);
  EXPECT_EQ(stats.checkpoints[1].weight, 1.0);
  EXPECT_EQ(stats.invariant_checks, 2u);
  EXPECT_EQ(stats.oracle_checks, 2u);

  const auto l = lines(out.str());
  ASSERT_EQ(l.size(), 4u);
  EXPECT_EQ(l[0], "step\tsize\tweight\toptimum\tratio\tbound\tcascade_max\tstatus");
  EXPECT_EQ(l[1], "2\t1\t4\t4\t1\t8\t1\tpass");
  EXPECT_EQ(l[2], "3\t1\t1\t1\t1\t8\t1\tpass");
  EXPECT_EQ(l[3],
            "# updates=3 checkpoints=2 max_cascade=1 invariant_checks=2 oracle_checks=2 "
            "status=pass");
}

TEST(Runner, StatsEveryAddsCheckpoints) {
  const auto stream = generate_stream(StreamKind::kRandom, {.n = 8, .steps = 100, .seed = 1});
  const auto stats = run(stream, 8, {}, {.stats_every = 30});
  ASSERT_EQ(stats.checkpoints.size(), 4u);
  EXPECT_EQ(stats.checkpoints[2].step, 90u);
  EXPECT_EQ(stats.checkpoints[3].step, 100u);
  EXPECT_FALSE(stats.checkpoints[0].optimum.has_value());
}

TEST(Runner, InputErrorStopsReplay) {
  const auto stream = parse_stream("+ 0 1 1\n+ 1 0 2\n+ 1 2 3\n");
  std::ostringstream out;
  const auto stats = run(stream, 3, {}, {.out = &out});
  EXPECT_EQ(stats.status(), ExitStatus::kInputError);
  EXPECT_EQ(stats.failure->event, 2u);
  EXPECT_EQ(stats.failure->check, "duplicate edge");
  EXPECT_EQ(stats.updates, 1u);
  EXPECT_NE(out.str().find("status=input-error"), std::string::npos);
}

TEST(Runner, BadConfigIsInputError) {
  const auto stats = run(parse_stream("q\n"), 2, {.alpha = 0.5}, {});
  EXPECT_EQ(stats.status(), ExitStatus::kInputError);
}

TEST(Runner, OracleDisabledAboveLimit) {
  std::ostringstream log;
  const auto stats = run(parse_stream("+ 0 30 1\n"), 31, {}, {.oracle = true, .log = &log});
  EXPECT_FALSE(stats.oracle_enabled);
  EXPECT_EQ(stats.oracle_checks, 0u);
  EXPECT_NE(log.str().find("oracle disabled"), std::string::npos);
  EXPECT_EQ(stats.status(), ExitStatus::kPass);
}

TEST(Runner, EmptyStream) {
  std::ostringstream out;
  const auto stats = run(UpdateStream{}, 0, {}, {.out = &out});
  EXPECT_TRUE(stats.checkpoints.empty());
  EXPECT_EQ(stats.status(), ExitStatus::kPass);
}

TEST(Runner, JsonRecordsParse) {
  const auto stream = generate_stream(StreamKind::kRandom, {.n = 6, .steps = 40, .seed = 9});
  std::ostringstream out;
  run(stream, 6, {}, {.verify = true, .oracle = true, .stats_every = 10,
                      .format = OutputFormat::kJson, .out = &out});
  const auto l = lines(out.str());
  ASSERT_EQ(l.size(), 5u);
  for (std::size_t i = 0; i < 4; ++i) {
    const auto j = nlohmann::json::parse(l[i]);
    EXPECT_EQ(j.at("step"), 10 * (i + 1));
    EXPECT_EQ(j.at("status"), "pass");
    EXPECT_TRUE(j.at("ratio").is_number());
    EXPECT_FALSE(j.contains("wall_s"));
  }
  const auto summary = nlohmann::json::parse(l.back()).at("summary");
  EXPECT_EQ(summary.at("updates"), 40);
  EXPECT_EQ(summary.at("status"), "pass");
}

TEST(Runner, ReplayIsByteIdentical) {
  const auto stream = generate_stream(StreamKind::kSlidingWindow, {.n = 10, .steps = 200, .window = 20, .seed = 3});
  const RoundingConfig cfg{.alpha = 3.512, .mode = RoundingMode::kRounded, .seed = 77};
  std::ostringstream a;
  std::ostringstream b;
  run(stream, 10, cfg, {.verify = true, .oracle = true, .stats_every = 25, .out = &a});
  run(stream, 10, cfg, {.verify = true, .oracle = true, .stats_every = 25, .out = &b});
  EXPECT_EQ(a.str(), b.str());
  EXPECT_NE(a.str().find("status=pass"), std::string::npos);
}

TEST(Runner, TimingAddsColumn) {
  std::ostringstream out;
  run(parse_stream("+ 0 1 1\n"), 2, {}, {.timing = true, .out = &out});
  EXPECT_EQ(lines(out.str())[0].substr(lines(out.str())[0].rfind('\t') + 1), "wall_s");
}

}  // namespace
}  // namespace dynmwm
