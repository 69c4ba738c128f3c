// Booth-Lueker graphs: a clique on the original vertices ("left") plus one
// vertex per edge ("right") joined to that edge's two endpoints.
#ifndef BLBETTI_BOOTH_LUEKER_HPP_
#define BLBETTI_BOOTH_LUEKER_HPP_

#include <cstddef>
#include <vector>

#include "blbetti/graph.hpp"

namespace blbetti {

// Left vertices are 0..n-1; right vertex n+k stands for source_edges()[k],
// so right vertices follow the input edge order.
class BLGraph {
 public:
  BLGraph(Graph graph, std::size_t left_size, std::vector<Edge> source_edges)
      : graph_(std::move(graph)), left_size_(left_size), source_edges_(std::move(source_edges)) {}

  const Graph& graph() const { return graph_; }
  std::size_t left_size() const { return left_size_; }
  std::size_t right_size() const { return source_edges_.size(); }
  const std::vector<Edge>& source_edges() const { return source_edges_; }
  Vertex right_vertex(std::size_t k) const { return left_size_ + k; }

 private:
  Graph graph_;
  std::size_t left_size_;
  std::vector<Edge> source_edges_;
};

BLGraph bl(const Graph& g);
// Parallel edges become distinct right vertices with identical neighbourhoods.
BLGraph bl(const MultiGraph& g);

// complement(bl(g)) built directly: left part independent, right part a
// clique, right vertex for uv adjacent to the n-2 left vertices other than
// u and v.
Graph bl_complement(const Graph& g);
Graph bl_complement(const MultiGraph& g);

// Clique on the left, independent right, every right vertex of degree 2
// on its source edge.
bool satisfies_bl_structure(const BLGraph& b);

// Multigraph on n vertices with m parallel edges between vertices 0 and 1.
// Throws std::invalid_argument for n < 2 with m > 0.
MultiGraph pineapple(std::size_t n, std::size_t m);

// Removes one copy of uv and adds uw. Throws std::invalid_argument when u, v,
// w are not distinct, out of range, or uv is not an edge.
MultiGraph move_edge(const MultiGraph& g, Vertex u, Vertex v, Vertex w);

// Edge moves taking g to the pineapple shape (all edges on {0,1}). Returns
// every intermediate multigraph, starting with g itself. Requires n >= 3
// whenever some edge is not already on {0,1}.
std::vector<MultiGraph> pineapple_reduction(const MultiGraph& g);

}  // namespace blbetti

#endif  // BLBETTI_BOOTH_LUEKER_HPP_
