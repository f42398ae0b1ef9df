#pragma once

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "dynmwm/graph.hpp"

namespace dynmwm {

struct InsertEvent {
  VertexId u = 0;
  VertexId v = 0;
  Weight w = 0.0;
  friend bool operator==(const InsertEvent&, const InsertEvent&) = default;
};

struct DeleteEvent {
  VertexId u = 0;
  VertexId v = 0;
  friend bool operator==(const DeleteEvent&, const DeleteEvent&) = default;
};

struct QueryEvent {
  friend bool operator==(const QueryEvent&, const QueryEvent&) = default;
};

using StreamEvent = std::variant<InsertEvent, DeleteEvent, QueryEvent>;

/// Ordered list of graph updates and query checkpoints.
///
/// Text form, one event per line:
///   + <u> <v> <w>    insert edge {u,v} with weight w
///   - <u> <v>        delete edge {u,v}
///   q                checkpoint
/// Blank lines and lines starting with '#' are ignored.
struct UpdateStream {
  std::vector<StreamEvent> events;

  [[nodiscard]] std::size_t update_count() const;
  /// One past the largest vertex id mentioned, 0 for a stream without updates.
  [[nodiscard]] std::size_t vertex_bound() const;

  friend bool operator==(const UpdateStream&, const UpdateStream&) = default;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message);
  [[nodiscard]] std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

[[nodiscard]] UpdateStream parse_stream(std::string_view text);
[[nodiscard]] UpdateStream read_stream(std::istream& in);
[[nodiscard]] UpdateStream load_stream(const std::string& path);

/// Writes the text form; weights use 17 significant digits so parsing the
/// output reproduces the stream exactly.
void write_stream(std::ostream& out, const UpdateStream& stream);

}  // namespace dynmwm
