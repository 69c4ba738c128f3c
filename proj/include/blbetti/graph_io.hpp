// Plain-text graph files:
//
//   # comment lines and blank lines are ignored
//   n m
//   u v        (exactly m lines, 0-based endpoints)
#ifndef BLBETTI_GRAPH_IO_HPP_
#define BLBETTI_GRAPH_IO_HPP_

#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "blbetti/graph.hpp"

namespace blbetti {

class GraphParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ParseOptions {
  bool allow_parallel_edges = false;
};

// Throws GraphParseError with a line number on malformed input.
MultiGraph parse_graph(std::istream& in, const ParseOptions& options = {});
MultiGraph parse_graph_string(const std::string& text, const ParseOptions& options = {});
MultiGraph read_graph_file(const std::string& path, const ParseOptions& options = {});

// Header line then one "u v" line per edge, LF-terminated, in edge order.
void write_graph(std::ostream& out, std::size_t vertex_count, const std::vector<Edge>& edges);
inline void write_graph(std::ostream& out, const Graph& g) {
  write_graph(out, g.vertex_count(), g.edges());
}

}  // namespace blbetti

#endif  // BLBETTI_GRAPH_IO_HPP_
