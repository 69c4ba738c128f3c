#include "blbetti/invariant.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "test_support.hpp"

namespace blbetti {
namespace {

using testing::all_graphs;
using testing::theta_graph;
using testing::theta_omega;
using testing::q;
using testing::random_graph;
using testing::relabel;

TEST(SignatureTest, Examples) {
  const Signature theta = signature(theta_graph());
  EXPECT_EQ(theta.n, 7u);
  EXPECT_EQ(theta.m, 8u);
  EXPECT_EQ(theta.omega, theta_omega());

  const Signature edgeless = signature(graphs::edgeless(5));
  for (std::size_t j = 1; j <= edgeless.coeffs.size(); ++j)
    EXPECT_EQ(edgeless.coeffs.c(j), j == 4 ? q(1, 1) : q(0, 1));

  const Signature c4 = signature(graphs::cycle(4));
  EXPECT_EQ(c4.coeffs.c(4), q(1, 5));
  EXPECT_EQ(c4.coeffs.c(5), q(4, 5));
}

TEST(SignatureTest, InternallyConsistent) {
  std::mt19937_64 rng(5150);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = random_graph(1 + rng() % 10, 0.15 + 0.1 * static_cast<double>(rng() % 5), rng);
    const Signature s = signature(g);
    ASSERT_EQ(s.coeffs, coeffs_from_betti(s.omega));
    ASSERT_EQ(s.lambda, alhc_from_betti(s.omega));
  }
}

TEST(SignatureTest, InvariantUnderRelabeling) {
  std::mt19937_64 rng(606);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = random_graph(2 + rng() % 9, 0.4, rng);
    std::vector<Vertex> perm(g.vertex_count());
    std::iota(perm.begin(), perm.end(), Vertex{0});
    std::shuffle(perm.begin(), perm.end(), rng);
    ASSERT_EQ(signature(g), signature(relabel(g, perm)));
  }
}

TEST(CompareTest, Examples) {
  EXPECT_EQ(compare(graphs::path(4), graphs::star(3)), Verdict::kDistinguished);
  EXPECT_EQ(compare(theta_graph(), theta_graph()), Verdict::kIndistinguishableByBlBetti);
  EXPECT_EQ(compare(graphs::cycle(6), graphs::disjoint_union(graphs::cycle(3), graphs::cycle(3))),
            Verdict::kIndistinguishableByBlBetti);
  EXPECT_EQ(to_string(Verdict::kDistinguished), "DISTINGUISHED");
  EXPECT_EQ(to_string(Verdict::kIndistinguishableByBlBetti), "INDISTINGUISHABLE_BY_BL_BETTI");
}

TEST(CompareTest, DifferentVertexCountsAreDistinguished) {
  EXPECT_EQ(compare(graphs::edgeless(3), graphs::edgeless(4)), Verdict::kDistinguished);
}

TEST(CompareTest, TracksDegreeVectorsOnFourVertices) {
  const std::vector<Graph> graphs = all_graphs(4);
  std::vector<Signature> sigs;
  for (const Graph& g : graphs) sigs.push_back(signature(g));
  for (std::size_t a = 0; a < graphs.size(); ++a) {
    for (std::size_t b = 0; b < graphs.size(); ++b) {
      const bool same_degrees = degree_vector(graphs[a]) == degree_vector(graphs[b]);
      ASSERT_EQ(sigs[a] == sigs[b], same_degrees);
      ASSERT_EQ(compare(graphs[a], graphs[b]) == Verdict::kDistinguished, !same_degrees);
    }
  }
}

}  // namespace
}  // namespace blbetti
