#include "blbetti/booth_lueker.hpp"

#include <algorithm>
#include <stdexcept>

namespace blbetti {

namespace {

BLGraph build_bl(std::size_t n, const std::vector<Edge>& source) {
  std::vector<Edge> edges;
  edges.reserve(n * (n - (n > 0 ? 1 : 0)) / 2 + 2 * source.size());
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  for (std::size_t k = 0; k < source.size(); ++k) {
    edges.emplace_back(source[k].u, n + k);
    edges.emplace_back(source[k].v, n + k);
  }
  return BLGraph(Graph(n + source.size(), std::move(edges)), n, source);
}

Graph build_bl_complement(std::size_t n, const std::vector<Edge>& source) {
  const std::size_t m = source.size();
  std::vector<Edge> edges;
  for (std::size_t k = 0; k < m; ++k) {
    for (Vertex x = 0; x < n; ++x) {
      if (x != source[k].u && x != source[k].v) edges.emplace_back(x, n + k);
    }
  }
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b) edges.emplace_back(n + a, n + b);
  return Graph(n + m, std::move(edges));
}

}  // namespace

BLGraph bl(const Graph& g) { return build_bl(g.vertex_count(), g.edges()); }
BLGraph bl(const MultiGraph& g) { return build_bl(g.vertex_count(), g.edges()); }

Graph bl_complement(const Graph& g) { return build_bl_complement(g.vertex_count(), g.edges()); }
Graph bl_complement(const MultiGraph& g) {
  return build_bl_complement(g.vertex_count(), g.edges());
}

bool satisfies_bl_structure(const BLGraph& b) {
  const Graph& g = b.graph();
  const std::size_t n = b.left_size();
  if (g.vertex_count() != n + b.right_size()) return false;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (!g.adjacent(u, v)) return false;
  for (std::size_t k = 0; k < b.right_size(); ++k) {
    const Vertex r = b.right_vertex(k);
    const Edge& e = b.source_edges()[k];
    if (g.degree(r) != 2 || !g.adjacent(r, e.u) || !g.adjacent(r, e.v)) return false;
  }
  return true;
}

MultiGraph pineapple(std::size_t n, std::size_t m) {
  if (n < 2 && m > 0) throw std::invalid_argument("pineapple: need n >= 2 to place edges");
  return MultiGraph(n, std::vector<Edge>(m, Edge(0, 1)));
}

MultiGraph move_edge(const MultiGraph& g, Vertex u, Vertex v, Vertex w) {
  if (u == v || u == w || v == w) throw std::invalid_argument("move_edge: u, v, w must be distinct");
  const std::size_t n = g.vertex_count();
  if (u >= n || v >= n || w >= n) throw std::invalid_argument("move_edge: vertex out of range");
  std::vector<Edge> edges = g.edges();
  auto it = std::find(edges.begin(), edges.end(), Edge(u, v));
  if (it == edges.end()) throw std::invalid_argument("move_edge: edge uv not present");
  *it = Edge(u, w);
  return MultiGraph(n, std::move(edges));
}

std::vector<MultiGraph> pineapple_reduction(const MultiGraph& g) {
  std::vector<MultiGraph> trajectory{g};
  const Edge target(0, 1);
  for (std::size_t k = 0; k < g.edge_count(); ++k) {
    const Edge e = trajectory.back().edges()[k];
    if (e == target) continue;
    if (g.vertex_count() < 3) throw std::invalid_argument("pineapple_reduction: need n >= 3");
    // Bring vertex 0 onto the edge, then swing the other end to 1.
    Edge current = e;
    if (current.u != 0) {
      trajectory.push_back(move_edge(trajectory.back(), current.u, current.v, 0));
      current = Edge(current.u, 0);
    }
    if (current.v != 1) {
      trajectory.push_back(move_edge(trajectory.back(), 0, current.v, 1));
    }
  }
  return trajectory;
}

}  // namespace blbetti
