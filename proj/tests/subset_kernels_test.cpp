#include "blbetti/subset_kernels.hpp"

#include <gtest/gtest.h>

#include <numeric>
#include <random>

namespace blbetti {
namespace {

std::vector<VertexMask> random_masks(std::size_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<VertexMask> adj(n, 0);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (coin(rng)) {
        adj[u] |= VertexMask{1} << v;
        adj[v] |= VertexMask{1} << u;
      }
  return adj;
}

TEST(CountComponentsTest, Examples) {
  // Path 0-1-2 and isolated 3.
  const std::vector<VertexMask> adj{0b0010, 0b0101, 0b0010, 0};
  EXPECT_EQ(count_components(adj, 0b1111), 2);
  EXPECT_EQ(count_components(adj, 0b0101), 2);
  EXPECT_EQ(count_components(adj, 0b0111), 1);
  EXPECT_EQ(count_components(adj, 0), 0);
}

TEST(TallyTest, EdgelessGraph) {
  const std::vector<VertexMask> adj(4, 0);
  const SubsetTally t = tally_components_serial(adj);
  EXPECT_EQ(t.subsets_visited, (std::vector<std::uint64_t>{1, 4, 6, 4, 1}));
  // |W| - 1 excess components per subset.
  EXPECT_EQ(t.excess_components, (std::vector<std::uint64_t>{0, 0, 6, 8, 3}));
}

TEST(TallyTest, EmptyGraph) {
  const SubsetTally t = tally_components_serial({});
  EXPECT_EQ(t.subsets_visited, (std::vector<std::uint64_t>{1}));
}

TEST(TallyTest, SerialAndParallelAgree) {
  std::mt19937_64 rng(1234);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = rng() % 15;
    const auto adj = random_masks(n, 0.3, rng);
    const SubsetTally serial = tally_components_serial(adj);
    const SubsetTally parallel = tally_components_parallel(adj);
    ASSERT_EQ(serial, parallel);
    ASSERT_EQ(std::accumulate(serial.subsets_visited.begin(), serial.subsets_visited.end(), std::uint64_t{0}),
              std::uint64_t{1} << n);
    ASSERT_EQ(tally_components(adj, ExecutionMode::kSerial), serial);
  }
}

TEST(TallyTest, CompleteGraphHasNoExcess) {
  std::vector<VertexMask> adj(10);
  for (std::size_t v = 0; v < 10; ++v) adj[v] = ((VertexMask{1} << 10) - 1) & ~(VertexMask{1} << v);
  const SubsetTally t = tally_components_parallel(adj);
  for (std::uint64_t x : t.excess_components) EXPECT_EQ(x, 0u);
}

}  // namespace
}  // namespace blbetti
