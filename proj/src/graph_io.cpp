#include "blbetti/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string_view>

namespace blbetti {

namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
    std::size_t end = pos;
    while (end < line.size() && line[end] != ' ' && line[end] != '\t') ++end;
    if (end > pos) fields.push_back(line.substr(pos, end - pos));
    pos = end;
  }
  return fields;
}

std::size_t parse_count(std::string_view field, std::size_t line_no) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size()) {
    throw GraphParseError("line " + std::to_string(line_no) + ": expected a non-negative integer, got '" +
                          std::string(field) + "'");
  }
  return value;
}

}  // namespace

MultiGraph parse_graph(std::istream& in, const ParseOptions& options) {
  std::string raw;
  std::size_t line_no = 0;
  bool have_header = false;
  std::size_t n = 0;
  std::size_t m = 0;
  std::vector<Edge> edges;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line(raw);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    const std::vector<std::string_view> fields = split_fields(line);
    if (fields.empty() || fields.front().front() == '#') continue;
    if (fields.size() != 2) {
      throw GraphParseError("line " + std::to_string(line_no) + ": expected two fields, got " +
                            std::to_string(fields.size()));
    }
    const std::size_t a = parse_count(fields[0], line_no);
    const std::size_t b = parse_count(fields[1], line_no);
    if (!have_header) {
      n = a;
      m = b;
      have_header = true;
      continue;
    }
    if (edges.size() == m) {
      throw GraphParseError("line " + std::to_string(line_no) + ": more than the declared " +
                            std::to_string(m) + " edges");
    }
    if (a >= n || b >= n) {
      throw GraphParseError("line " + std::to_string(line_no) + ": vertex out of range [0, " +
                            std::to_string(n) + ")");
    }
    if (a == b) throw GraphParseError("line " + std::to_string(line_no) + ": loop edge");
    edges.emplace_back(a, b);
  }
  if (!have_header) throw GraphParseError("missing 'n m' header");
  if (edges.size() != m) {
    throw GraphParseError("declared " + std::to_string(m) + " edges but found " +
                          std::to_string(edges.size()));
  }
  MultiGraph g(n, std::move(edges));
  if (!options.allow_parallel_edges && g.has_parallel_edges()) {
    throw GraphParseError("duplicate edge (pass --multigraph to allow parallel edges)");
  }
  return g;
}

MultiGraph parse_graph_string(const std::string& text, const ParseOptions& options) {
  std::istringstream in(text);
  return parse_graph(in, options);
}

MultiGraph read_graph_file(const std::string& path, const ParseOptions& options) {
  if (path == "-") return parse_graph(std::cin, options);
  std::ifstream in(path);
  if (!in) throw GraphParseError("cannot open '" + path + "'");
  return parse_graph(in, options);
}

void write_graph(std::ostream& out, std::size_t vertex_count, const std::vector<Edge>& edges) {
  out << vertex_count << ' ' << edges.size() << '\n';
  for (const Edge& e : edges) out << e.u << ' ' << e.v << '\n';
}

}  // namespace blbetti
