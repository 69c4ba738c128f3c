// Simple graphs, multigraphs and the structural queries the Betti formulas
// consume. Vertices are 0-based.
#ifndef BLBETTI_GRAPH_HPP_
#define BLBETTI_GRAPH_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace blbetti {

using Vertex = std::size_t;

// Unordered pair, stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Loopless multigraph; parallel edges are kept as separate entries in
// insertion order.
class MultiGraph {
 public:
  MultiGraph() = default;
  // Throws std::invalid_argument on loops or out-of-range endpoints.
  MultiGraph(std::size_t vertex_count, std::vector<Edge> edges);

  std::size_t vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }

  std::size_t multiplicity(Edge e) const;
  bool has_parallel_edges() const;

  friend bool operator==(const MultiGraph&, const MultiGraph&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
};

// Simple graph. Edge order is the construction order; adjacency is sorted.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t vertex_count) : n_(vertex_count), adjacency_(vertex_count) {}
  // Throws std::invalid_argument on loops, duplicates or out-of-range
  // endpoints.
  Graph(std::size_t vertex_count, std::vector<Edge> edges);
  // Throws std::invalid_argument if the multigraph has parallel edges.
  explicit Graph(const MultiGraph& g) : Graph(g.vertex_count(), g.edges()) {}

  std::size_t vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(v); }
  std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }
  bool adjacent(Vertex a, Vertex b) const;

  MultiGraph as_multigraph() const { return MultiGraph(n_, edges_); }

  // Same vertex count and edge set, regardless of edge order.
  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.adjacency_ == b.adjacency_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
};

// Entry i counts the vertices of degree exactly i; length equals the vertex
// count of the graph it came from.
class DegreeVector {
 public:
  DegreeVector() = default;
  explicit DegreeVector(std::vector<std::uint64_t> counts) : counts_(std::move(counts)) {}

  std::size_t size() const { return counts_.size(); }
  std::uint64_t operator[](std::size_t i) const { return counts_[i]; }
  const std::vector<std::uint64_t>& counts() const { return counts_; }

  // Sum of entries; must equal size() for a realizable vector.
  std::uint64_t vertex_total() const;
  // sum_i i * d_i; equals twice the edge count.
  std::uint64_t degree_total() const;
  // Both handshake identities for a graph with the given edge count.
  bool consistent_with(std::uint64_t edge_count) const;
  // Largest i with d_i > 0; 0 for an empty vector.
  std::size_t max_degree() const;

  friend bool operator==(const DegreeVector&, const DegreeVector&) = default;

 private:
  std::vector<std::uint64_t> counts_;
};

DegreeVector degree_vector(const Graph& g);

// Erdos-Gallai test: some simple graph on size() vertices has exactly these
// degree counts.
bool is_graphical(const DegreeVector& d);

Graph complement(const Graph& g);

// Subgraph induced on `subset`, with subset[k] relabelled to k. Throws
// std::invalid_argument on out-of-range or repeated vertices.
Graph induced_subgraph(const Graph& g, std::span<const Vertex> subset);

std::size_t connected_components(const Graph& g);

// Maximum cardinality search ordering followed by a perfect-elimination
// check.
bool is_chordal(const Graph& g);

// Common small graphs used by tests, examples and the CLI.
namespace graphs {
Graph path(std::size_t n);
Graph cycle(std::size_t n);
Graph complete(std::size_t n);
Graph star(std::size_t leaves);
Graph edgeless(std::size_t n);
Graph disjoint_union(const Graph& a, const Graph& b);
}  // namespace graphs

}  // namespace blbetti

#endif  // BLBETTI_GRAPH_HPP_
