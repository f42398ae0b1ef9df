#include "dynmwm/stream.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace dynmwm {

ParseError::ParseError(std::size_t line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

std::size_t UpdateStream::update_count() const {
  return static_cast<std::size_t>(std::count_if(events.begin(), events.end(), [](const StreamEvent& e) {
    return !std::holds_alternative<QueryEvent>(e);
  }));
}

std::size_t UpdateStream::vertex_bound() const {
  std::size_t bound = 0;
  for (const auto& e : events) {
    if (const auto* ins = std::get_if<InsertEvent>(&e)) {
      bound = std::max<std::size_t>(bound, std::max(ins->u, ins->v) + std::size_t{1});
    } else if (const auto* del = std::get_if<DeleteEvent>(&e)) {
      bound = std::max<std::size_t>(bound, std::max(del->u, del->v) + std::size_t{1});
    }
  }
  return bound;
}

namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

VertexId parse_vertex(std::string_view field, std::size_t line) {
  VertexId v = 0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
  if (ec != std::errc{} || ptr != field.data() + field.size() || v == kNoVertex) {
    throw ParseError(line, "invalid vertex id '" + std::string(field) + "'");
  }
  return v;
}

Weight parse_weight(std::string_view field, std::size_t line) {
  double w = 0.0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), w);
  if (ec != std::errc{} || ptr != field.data() + field.size() || !std::isfinite(w)) {
    throw ParseError(line, "invalid weight '" + std::string(field) + "'");
  }
  return w;
}

}  // namespace

UpdateStream parse_stream(std::string_view text) {
  UpdateStream stream;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const std::size_t nl = text.find('\n');
    const std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);

    const auto fields = split_fields(line);
    if (fields.empty() || fields[0].front() == '#') continue;
    const std::string_view op = fields[0];
    if (op == "+") {
      if (fields.size() != 4) {
        throw ParseError(line_no, fields.size() < 4 ? "insert needs '+ <u> <v> <w>', missing fields"
                                                    : "insert has trailing fields");
      }
      stream.events.emplace_back(InsertEvent{parse_vertex(fields[1], line_no),
                                             parse_vertex(fields[2], line_no),
                                             parse_weight(fields[3], line_no)});
    } else if (op == "-") {
      if (fields.size() != 3) {
        throw ParseError(line_no, "delete needs '- <u> <v>'");
      }
      stream.events.emplace_back(
          DeleteEvent{parse_vertex(fields[1], line_no), parse_vertex(fields[2], line_no)});
    } else if (op == "q") {
      if (fields.size() != 1) throw ParseError(line_no, "query takes no arguments");
      stream.events.emplace_back(QueryEvent{});
    } else {
      throw ParseError(line_no, "unknown event '" + std::string(op) + "'");
    }
  }
  return stream;
}

UpdateStream read_stream(std::istream& in) {
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_stream(buf.str());
}

UpdateStream load_stream(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open stream file '" + path + "'");
  return read_stream(in);
}

void write_stream(std::ostream& out, const UpdateStream& stream) {
  char buf[64];
  for (const auto& e : stream.events) {
    if (const auto* ins = std::get_if<InsertEvent>(&e)) {
      std::snprintf(buf, sizeof buf, "%.17g", ins->w);
      out << "+ " << ins->u << ' ' << ins->v << ' ' << buf << '\n';
    } else if (const auto* del = std::get_if<DeleteEvent>(&e)) {
      out << "- " << del->u << ' ' << del->v << '\n';
    } else {
      out << "q\n";
    }
  }
}

}  // namespace dynmwm
