#include "blbetti/graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace blbetti {

namespace {

void check_edge(std::size_t n, const Edge& e) {
  if (e.u == e.v) throw std::invalid_argument("graph: loop at vertex " + std::to_string(e.u));
  if (e.v >= n) {
    throw std::invalid_argument("graph: endpoint " + std::to_string(e.v) +
                                " out of range for " + std::to_string(n) + " vertices");
  }
}

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

MultiGraph::MultiGraph(std::size_t vertex_count, std::vector<Edge> edges)
    : n_(vertex_count), edges_(std::move(edges)) {
  for (const Edge& e : edges_) check_edge(n_, e);
}

std::size_t MultiGraph::multiplicity(Edge e) const {
  return static_cast<std::size_t>(std::count(edges_.begin(), edges_.end(), e));
}

bool MultiGraph::has_parallel_edges() const {
  std::vector<Edge> sorted = edges_;
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end();
}

Graph::Graph(std::size_t vertex_count, std::vector<Edge> edges)
    : n_(vertex_count), edges_(std::move(edges)), adjacency_(vertex_count) {
  for (const Edge& e : edges_) {
    check_edge(n_, e);
    adjacency_[e.u].push_back(e.v);
    adjacency_[e.v].push_back(e.u);
  }
  for (auto& list : adjacency_) {
    std::sort(list.begin(), list.end());
    auto dup = std::adjacent_find(list.begin(), list.end());
    if (dup != list.end()) {
      throw std::invalid_argument("graph: duplicate edge at vertex " + std::to_string(*dup));
    }
  }
}

bool Graph::adjacent(Vertex a, Vertex b) const {
  const auto& list = adjacency_.at(a);
  return std::binary_search(list.begin(), list.end(), b);
}

std::uint64_t DegreeVector::vertex_total() const {
  return std::accumulate(counts_.begin(), counts_.end(), std::uint64_t{0});
}

std::uint64_t DegreeVector::degree_total() const {
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < counts_.size(); ++i) total += i * counts_[i];
  return total;
}

bool DegreeVector::consistent_with(std::uint64_t edge_count) const {
  return vertex_total() == counts_.size() && degree_total() == 2 * edge_count;
}

std::size_t DegreeVector::max_degree() const {
  for (std::size_t i = counts_.size(); i-- > 0;) {
    if (counts_[i] != 0) return i;
  }
  return 0;
}

DegreeVector degree_vector(const Graph& g) {
  std::vector<std::uint64_t> counts(g.vertex_count(), 0);
  for (Vertex v = 0; v < g.vertex_count(); ++v) ++counts[g.degree(v)];
  return DegreeVector(std::move(counts));
}

bool is_graphical(const DegreeVector& d) {
  const std::size_t n = d.size();
  if (d.vertex_total() != n || d.degree_total() % 2 != 0) return false;
  std::vector<std::uint64_t> degrees;
  degrees.reserve(n);
  for (std::size_t i = n; i-- > 0;) degrees.insert(degrees.end(), d[i], i);
  std::uint64_t prefix = 0;
  for (std::size_t k = 1; k <= n; ++k) {
    prefix += degrees[k - 1];
    std::uint64_t bound = k * (k - 1);
    for (std::size_t i = k; i < n; ++i) bound += std::min<std::uint64_t>(degrees[i], k);
    if (prefix > bound) return false;
  }
  return true;
}

Graph complement(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (!g.adjacent(u, v)) edges.emplace_back(u, v);
    }
  }
  return Graph(n, std::move(edges));
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> subset) {
  constexpr std::size_t kAbsent = static_cast<std::size_t>(-1);
  std::vector<std::size_t> label(g.vertex_count(), kAbsent);
  for (std::size_t k = 0; k < subset.size(); ++k) {
    const Vertex v = subset[k];
    if (v >= g.vertex_count()) {
      throw std::invalid_argument("induced_subgraph: vertex " + std::to_string(v) + " out of range");
    }
    if (label[v] != kAbsent) {
      throw std::invalid_argument("induced_subgraph: vertex " + std::to_string(v) + " repeated");
    }
    label[v] = k;
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (label[e.u] != kAbsent && label[e.v] != kAbsent) edges.emplace_back(label[e.u], label[e.v]);
  }
  return Graph(subset.size(), std::move(edges));
}

std::size_t connected_components(const Graph& g) {
  DisjointSets sets(g.vertex_count());
  std::size_t components = g.vertex_count();
  for (const Edge& e : g.edges()) {
    if (sets.unite(e.u, e.v)) --components;
  }
  return components;
}

bool is_chordal(const Graph& g) {
  const std::size_t n = g.vertex_count();
  // Maximum cardinality search: repeatedly visit the unvisited vertex with
  // the most visited neighbours. `order[v]` is the visit time of v.
  constexpr std::size_t kUnvisited = static_cast<std::size_t>(-1);
  std::vector<std::size_t> weight(n, 0);
  std::vector<std::size_t> order(n, kUnvisited);
  std::vector<Vertex> visit_sequence;
  visit_sequence.reserve(n);
  for (std::size_t step = 0; step < n; ++step) {
    Vertex best = kUnvisited;
    for (Vertex v = 0; v < n; ++v) {
      if (order[v] == kUnvisited && (best == kUnvisited || weight[v] > weight[best])) best = v;
    }
    order[best] = step;
    visit_sequence.push_back(best);
    for (Vertex w : g.neighbors(best)) {
      if (order[w] == kUnvisited) ++weight[w];
    }
  }
  // Reverse visit order is a perfect elimination ordering iff g is chordal:
  // the earlier neighbours of v, minus the latest of them (p), must all be
  // adjacent to p.
  for (Vertex v : visit_sequence) {
    Vertex parent = kUnvisited;
    for (Vertex w : g.neighbors(v)) {
      if (order[w] < order[v] && (parent == kUnvisited || order[w] > order[parent])) parent = w;
    }
    if (parent == kUnvisited) continue;
    for (Vertex w : g.neighbors(v)) {
      if (w != parent && order[w] < order[v] && !g.adjacent(parent, w)) return false;
    }
  }
  return true;
}

namespace graphs {

Graph path(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph(n, std::move(edges));
}

Graph cycle(std::size_t n) {
  if (n < 3) throw std::invalid_argument("cycle: need at least 3 vertices");
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return Graph(n, std::move(edges));
}

Graph complete(std::size_t n) { return complement(edgeless(n)); }

Graph star(std::size_t leaves) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
  return Graph(leaves + 1, std::move(edges));
}

Graph edgeless(std::size_t n) { return Graph(n); }

Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Edge> edges = a.edges();
  const std::size_t shift = a.vertex_count();
  for (const Edge& e : b.edges()) edges.emplace_back(e.u + shift, e.v + shift);
  return Graph(a.vertex_count() + b.vertex_count(), std::move(edges));
}

}  // namespace graphs

}  // namespace blbetti
