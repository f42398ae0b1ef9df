#include <sstream>

#include <gtest/gtest.h>

#include "dynmwm/stream.hpp"

namespace dynmwm {
namespace {

std::size_t error_line(std::string_view text) {
  try {
    (void)parse_stream(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  ADD_FAILURE() << "accepted: " << text;
  return 0;
}

TEST(Stream, ParsesAllEventKinds) {
  const auto s = parse_stream(
      "# header\n"
      "+ 0 1 2.5\n"
      "\n"
      "  + 3 2 1e-3\n"
      "- 1 0\n"
      "q\n");
  ASSERT_EQ(s.events.size(), 4u);
  EXPECT_EQ(std::get<InsertEvent>(s.events[0]), (InsertEvent{0, 1, 2.5}));
  EXPECT_EQ(std::get<InsertEvent>(s.events[1]), (InsertEvent{3, 2, 1e-3}));
  EXPECT_EQ(std::get<DeleteEvent>(s.events[2]), (DeleteEvent{1, 0}));
  EXPECT_TRUE(std::holds_alternative<QueryEvent>(s.events[3]));
  EXPECT_EQ(s.update_count(), 3u);
  EXPECT_EQ(s.vertex_bound(), 4u);
}

TEST(Stream, EmptyInput) {
  const auto s = parse_stream("# nothing\n\n");
  EXPECT_TRUE(s.events.empty());
  EXPECT_EQ(s.vertex_bound(), 0u);
  EXPECT_EQ(parse_stream("q\n").vertex_bound(), 0u);
}

TEST(Stream, ErrorsCarryLineNumbers) {
  EXPECT_EQ(error_line("+ 0 1 1\n* 1 2\n"), 2u);
  EXPECT_EQ(error_line("\n\n+ 0 1\n"), 3u);
  EXPECT_EQ(error_line("- 0\n"), 1u);
  EXPECT_EQ(error_line("+ -1 2 3\n"), 1u);
  EXPECT_EQ(error_line("+ 0 x 3\n"), 1u);
  EXPECT_EQ(error_line("+ 0 1 abc\n"), 1u);
  EXPECT_EQ(error_line("+ 0 1 1 9\n"), 1u);
  EXPECT_EQ(error_line("q 1\n"), 1u);
  EXPECT_EQ(error_line("+ 0 99999999999 1\n"), 1u);
}

TEST(Stream, ErrorMessageNamesTheProblem) {
  try {
    (void)parse_stream("+ 0 1\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("missing fields"), std::string::npos);
  }
}

TEST(Stream, WriteThenParseIsExact) {
  UpdateStream s;
  s.events.push_back(InsertEvent{0, 1, 0.1});
  s.events.push_back(InsertEvent{2, 1, 1.0 / 3.0});
  s.events.push_back(QueryEvent{});
  s.events.push_back(DeleteEvent{1, 0});
  s.events.push_back(InsertEvent{5, 4, 123456.789012345678});
  std::ostringstream out;
  write_stream(out, s);
  EXPECT_EQ(parse_stream(out.str()), s);
}

TEST(Stream, ReadFromIstream) {
  std::istringstream in("+ 0 1 4\nq\n");
  EXPECT_EQ(read_stream(in).events.size(), 2u);
  EXPECT_THROW((void)load_stream("/nonexistent/stream.txt"), std::runtime_error);
}

}  // namespace
}  // namespace dynmwm
