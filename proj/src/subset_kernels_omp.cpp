#include <omp.h>

#include <bit>
#include <cstdint>
#include <stdexcept>

#include "blbetti/subset_kernels.hpp"

namespace blbetti {

SubsetTally tally_components_parallel(std::span<const VertexMask> adjacency) {
  const std::size_t n = adjacency.size();
  if (n > kMaxKernelVertices) throw std::length_error("tally_components: too many vertices");
  SubsetTally tally{std::vector<std::uint64_t>(n + 1, 0), std::vector<std::uint64_t>(n + 1, 0)};
  tally.subsets_visited[0] = 1;
  const std::int64_t end = std::int64_t{1} << n;

  // Per-thread tallies merged under a lock; integer sums make the merge
  // order irrelevant, so the result matches the serial kernel bit for bit.
#pragma omp parallel default(none) shared(adjacency, tally, end, n)
  {
    std::vector<std::uint64_t> excess(n + 1, 0);
    std::vector<std::uint64_t> visited(n + 1, 0);
#pragma omp for schedule(static)
    for (std::int64_t i = 1; i < end; ++i) {
      const auto w = static_cast<VertexMask>(i);
      const int size = std::popcount(w);
      excess[size] += static_cast<std::uint64_t>(count_components(adjacency, w) - 1);
      ++visited[size];
    }
#pragma omp critical(blbetti_tally_merge)
    {
      for (std::size_t k = 0; k <= n; ++k) {
        tally.excess_components[k] += excess[k];
        tally.subsets_visited[k] += visited[k];
      }
    }
  }
  return tally;
}

}  // namespace blbetti
