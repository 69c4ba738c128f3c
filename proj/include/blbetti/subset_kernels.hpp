// Brute-force enumeration kernels behind the Betti oracle: for every vertex
// subset W of a graph given by adjacency bitmasks, count the connected
// components of the induced subgraph and tally by |W|.
//
// Two implementations: a serial reference and an OpenMP version that splits
// the subset range across threads. Both return identical tallies.
#ifndef BLBETTI_SUBSET_KERNELS_HPP_
#define BLBETTI_SUBSET_KERNELS_HPP_

#include <cstdint>
#include <span>
#include <vector>

namespace blbetti {

using VertexMask = std::uint64_t;

// Hard ceiling on the bitmask width the kernels accept.
inline constexpr std::size_t kMaxKernelVertices = 40;

enum class ExecutionMode { kSerial, kParallel };

// Indexed by subset size 0..N.
struct SubsetTally {
  // sum over |W| = k of (components(G[W]) - 1); entry 0 stays 0 since the
  // empty set is skipped there.
  std::vector<std::uint64_t> excess_components;
  // Number of subsets visited with |W| = k; sums to 2^N.
  std::vector<std::uint64_t> subsets_visited;

  friend bool operator==(const SubsetTally&, const SubsetTally&) = default;
};

// Components of the subgraph induced on `subset`.
int count_components(std::span<const VertexMask> adjacency, VertexMask subset);

SubsetTally tally_components_serial(std::span<const VertexMask> adjacency);
SubsetTally tally_components_parallel(std::span<const VertexMask> adjacency);

inline SubsetTally tally_components(std::span<const VertexMask> adjacency, ExecutionMode mode) {
  return mode == ExecutionMode::kSerial ? tally_components_serial(adjacency)
                                        : tally_components_parallel(adjacency);
}

}  // namespace blbetti

#endif  // BLBETTI_SUBSET_KERNELS_HPP_
