#include "blbetti/betti.hpp"

#include <gtest/gtest.h>

#include <random>

#include "blbetti/booth_lueker.hpp"
#include "blbetti/errors.hpp"
#include "test_support.hpp"

namespace blbetti {
namespace {

using testing::all_graphs;
using testing::betti;
using testing::theta_graph;
using testing::theta_omega;
using testing::random_graph;
using testing::reference_betti;

TEST(BettiOracleTest, Examples) {
  EXPECT_EQ(betti_oracle(bl(theta_graph()).graph()), theta_omega());
  EXPECT_EQ(betti_oracle(graphs::complete(4)), betti({6, 8, 3}));
  EXPECT_EQ(betti_oracle(graphs::edgeless(5)), betti({0, 0, 0, 0}));
  EXPECT_EQ(betti_oracle(Graph(1, {})).size(), 0u);
}

TEST(BettiOracleTest, SerialAndParallelAgree) {
  const Graph h = bl(theta_graph()).graph();
  const OracleOptions serial{ExecutionMode::kSerial, 24};
  EXPECT_EQ(betti_oracle_tally(h, serial), betti_oracle_tally(h));
}

TEST(BettiOracleTest, VisitsEverySubset) {
  const SubsetTally t = betti_oracle_tally(bl(graphs::cycle(5)).graph());
  std::uint64_t total = 0;
  for (std::uint64_t x : t.subsets_visited) total += x;
  EXPECT_EQ(total, std::uint64_t{1} << 10);
}

TEST(BettiOracleTest, Errors) {
  // complement(C_4) is two disjoint edges: chordal. complement(C_5) = C_5 is not.
  EXPECT_NO_THROW(betti_oracle(graphs::cycle(4)));
  EXPECT_THROW(betti_oracle(graphs::cycle(5)), ApplicabilityError);
  EXPECT_THROW(betti_oracle(graphs::edgeless(25)), SizeLimitError);
  OracleOptions small;
  small.max_vertices = 6;
  EXPECT_THROW(betti_oracle(graphs::complete(7), small), SizeLimitError);
}

TEST(BettiOracleTest, AgreesWithReference) {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 40; ++trial) {
    const Graph g = random_graph(2 + rng() % 4, 0.5, rng);
    const Graph h = bl(g).graph();
    ASSERT_EQ(betti_oracle(h), reference_betti(h));
    ASSERT_EQ(betti_oracle(bl_complement(g)), reference_betti(bl_complement(g)));
  }
}

TEST(StatMatrixTest, Examples) {
  const IntMatrix a = stat_matrix_a(7, 8);
  EXPECT_EQ(a.rows(), 14u);
  EXPECT_EQ(a.cols(), 7u);
  for (std::size_t j = 0; j < 7; ++j) EXPECT_EQ(a(0, j), static_cast<long>(6 + j));
  EXPECT_EQ(a(5, 0), 1);
  EXPECT_EQ(a(6, 0), 0);
  EXPECT_EQ(a(11, 6), 1);
  EXPECT_EQ(a(12, 6), 0);
  EXPECT_EQ(stat_vector_v(7, 8), testing::ints({21, 35, 35, 21, 7, 1, 0, 0, 0, 0, 0, 0, 0, 0}));
  const IntMatrix small = stat_matrix_a(2, 1);
  EXPECT_EQ(small(0, 0), 1);
  EXPECT_EQ(small(0, 1), 2);
  EXPECT_EQ(small(1, 0), 0);
  EXPECT_EQ(small(1, 1), 1);
}

TEST(BettiBlClosedTest, Examples) {
  EXPECT_EQ(betti_bl_closed(DegreeVector({0, 0, 5, 2, 0, 0, 0}), 8), theta_omega());
  EXPECT_EQ(betti_bl_closed(DegreeVector({4, 0, 0, 0}), 0), betti({6, 8, 3}));
  EXPECT_EQ(betti_bl_closed(DegreeVector({0, 0, 4, 0}), 4), betti({14, 36, 39, 20, 4, 0, 0}));
  EXPECT_EQ(betti_bl_closed(DegreeVector({1}), 0).size(), 0u);
  EXPECT_THROW(betti_bl_closed(DegreeVector({0, 0, 4, 0}), 3), std::invalid_argument);
}

TEST(BettiBlClosedTest, MatchesOracleOnSmallGraphs) {
  for (std::size_t n = 1; n <= 5; ++n)
    for (const Graph& g : all_graphs(n))
      ASSERT_EQ(betti_bl_closed(degree_vector(g), g.edge_count()), betti_oracle(bl(g).graph()));
}

TEST(BettiBlCompClosedTest, Examples) {
  EXPECT_EQ(betti_blcomp_closed(4, 3), betti({9, 17, 12, 3, 0, 0}));
  EXPECT_EQ(betti_oracle(bl_complement(graphs::path(4))), betti({9, 17, 12, 3, 0, 0}));
  EXPECT_EQ(betti_blcomp_closed(5, 0), betti({0, 0, 0, 0}));
  EXPECT_EQ(betti_blcomp_closed(3, 5), betti({15, 40, 45, 24, 5, 0, 0}));
  // Single edge: complement is a star with n-2 leaves plus two isolated vertices.
  for (std::size_t n = 2; n <= 8; ++n) {
    const BettiVector omega = betti_blcomp_closed(n, 1);
    for (std::size_t j = 1; j <= omega.size(); ++j) {
      ASSERT_EQ(omega.beta(j), binomial(static_cast<std::int64_t>(n - 2), static_cast<std::int64_t>(j)));
    }
  }
}

TEST(BettiBlCompClosedTest, MatchesOracleOnSmallGraphs) {
  for (std::size_t n = 1; n <= 5; ++n)
    for (const Graph& g : all_graphs(n))
      ASSERT_EQ(betti_blcomp_closed(n, g.edge_count()), betti_oracle(bl_complement(g)));
}

TEST(RecoveryMatrixTest, InverseIsSignedCopy) {
  for (std::size_t n = 1; n <= 10; ++n) {
    for (std::size_t delta = 0; delta + 1 <= n; ++delta) {
      const IntMatrix b = recovery_matrix(n, delta);
      const IntMatrix inv = recovery_matrix_inverse(n, delta);
      ASSERT_TRUE((b * inv).is_identity());
      for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j)
          ASSERT_EQ(inv(i, j), ((i + j) % 2 == 0 ? b(i, j) : BigInt(-b(i, j))));
    }
  }
}

TEST(RecoverDegreeVectorTest, Examples) {
  EXPECT_EQ(recover_degree_vector(theta_omega(), 7), DegreeVector({0, 0, 5, 2, 0, 0, 0}));
  EXPECT_EQ(recover_degree_vector(betti({6, 8, 3}), 4), DegreeVector({4, 0, 0, 0}));
  EXPECT_EQ(recover_degree_vector(betti({14, 36, 39, 20, 4, 0, 0}), 4), DegreeVector({0, 0, 4, 0}));
  EXPECT_EQ(recover_degree_vector(BettiVector(), 1), DegreeVector({1}));
}

TEST(RecoverDegreeVectorTest, RejectsForeignVectors) {
  EXPECT_THROW(recover_degree_vector(betti({14, 36, 39, 21, 4, 0, 0}), 4), InconsistencyError);
  EXPECT_THROW(recover_degree_vector(betti({9, 17, 12, 3, 0, 0}), 4), InconsistencyError);
  EXPECT_THROW(recover_degree_vector(betti({7, 8, 3}), 4), InconsistencyError);
}

TEST(RecoverDegreeVectorTest, RoundTripsRandomGraphs) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 300; ++trial) {
    const Graph g = random_graph(1 + rng() % 14, 0.35, rng);
    const DegreeVector d = degree_vector(g);
    ASSERT_EQ(recover_degree_vector(betti_bl_closed(d, g.edge_count()), g.vertex_count()), d);
  }
}

}  // namespace
}  // namespace blbetti
