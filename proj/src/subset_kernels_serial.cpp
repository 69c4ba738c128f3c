#include <bit>
#include <stdexcept>

#include "blbetti/subset_kernels.hpp"

namespace blbetti {

int count_components(std::span<const VertexMask> adjacency, VertexMask subset) {
  int components = 0;
  VertexMask remaining = subset;
  while (remaining != 0) {
    VertexMask frontier = remaining & (~remaining + 1);
    remaining &= ~frontier;
    while (frontier != 0) {
      const int v = std::countr_zero(frontier);
      frontier &= frontier - 1;
      const VertexMask fresh = adjacency[v] & remaining;
      remaining &= ~fresh;
      frontier |= fresh;
    }
    ++components;
  }
  return components;
}

SubsetTally tally_components_serial(std::span<const VertexMask> adjacency) {
  const std::size_t n = adjacency.size();
  if (n > kMaxKernelVertices) throw std::length_error("tally_components: too many vertices");
  SubsetTally tally{std::vector<std::uint64_t>(n + 1, 0), std::vector<std::uint64_t>(n + 1, 0)};
  tally.subsets_visited[0] = 1;
  const VertexMask end = VertexMask{1} << n;
  for (VertexMask w = 1; w < end; ++w) {
    const int size = std::popcount(w);
    tally.excess_components[size] += static_cast<std::uint64_t>(count_components(adjacency, w) - 1);
    ++tally.subsets_visited[size];
  }
  return tally;
}

}  // namespace blbetti
