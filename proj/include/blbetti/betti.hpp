// Betti vectors of edge ideals with 2-linear resolution.
//
// The Betti vector of S/I_H is the second row (beta_{1,2}, ..., beta_{L,L+1})
// of its Betti table. Vectors here are 0-indexed: entry k holds
// beta_{k+1,k+2}.
#ifndef BLBETTI_BETTI_HPP_
#define BLBETTI_BETTI_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "blbetti/exact_math.hpp"
#include "blbetti/graph.hpp"
#include "blbetti/matrix.hpp"
#include "blbetti/subset_kernels.hpp"

namespace blbetti {

class BettiVector {
 public:
  BettiVector() = default;
  explicit BettiVector(std::vector<BigInt> entries) : entries_(std::move(entries)) {}

  std::size_t size() const { return entries_.size(); }
  const std::vector<BigInt>& entries() const { return entries_; }
  // 0-based: at(k) = beta_{k+1,k+2}.
  const BigInt& at(std::size_t k) const { return entries_.at(k); }
  // 1-based as in beta_{i,i+1}.
  const BigInt& beta(std::size_t i) const { return entries_.at(i - 1); }

  // Index (1-based) of the last nonzero entry, 0 when all entries vanish.
  std::size_t last_nonzero() const;

  friend bool operator==(const BettiVector&, const BettiVector&) = default;

 private:
  std::vector<BigInt> entries_;
};

std::string to_string(const BettiVector& v);

// Full Betti table: at(row, col) = beta_{col, col+row}. Entries are exact
// rationals so that partial Boij-Soderberg remainders stay representable.
class BettiTable {
 public:
  BettiTable() = default;
  BettiTable(std::size_t rows, std::size_t cols) : cells_(rows, cols) {}
  explicit BettiTable(RationalMatrix cells) : cells_(std::move(cells)) {}

  // Rows given top to bottom; all rows must have equal length.
  static BettiTable from_rows(const std::vector<std::vector<long>>& rows);
  // The table [1 0 ... 0; 0 w_1 ... w_L] of S/I for a 2-linear ideal.
  static BettiTable from_linear(const BettiVector& omega);

  std::size_t rows() const { return cells_.rows(); }
  std::size_t cols() const { return cells_.cols(); }
  ExactRational& at(std::size_t row, std::size_t col) { return cells_(row, col); }
  const ExactRational& at(std::size_t row, std::size_t col) const { return cells_(row, col); }
  bool is_zero() const;

  friend bool operator==(const BettiTable&, const BettiTable&) = default;

 private:
  RationalMatrix cells_;
};

struct OracleOptions {
  ExecutionMode mode = ExecutionMode::kParallel;
  std::size_t max_vertices = 24;
};

// Betti vector of S/I_H from the component count formula
//   beta_{i,i+1} = sum_{|W| = i+1} (components of complement(H)[W] - 1),
// by enumerating every vertex subset. Length |V(H)| - 1 (empty for |V| <= 1).
// Throws ApplicabilityError if complement(H) is not chordal and
// SizeLimitError beyond options.max_vertices.
BettiVector betti_oracle(const Graph& h, const OracleOptions& options = {});

// Same enumeration but returns the raw per-size tallies (for auditing).
SubsetTally betti_oracle_tally(const Graph& h, const OracleOptions& options = {});

// A of shape (n+m-1) x n with 1-based A_{ij} = C(j+n-2, i).
// Requires n >= 1.
IntMatrix stat_matrix_a(std::size_t n, std::size_t m);
// v of length n+m-1 with 1-based v_i = C(n, i+1).
std::vector<BigInt> stat_vector_v(std::size_t n, std::size_t m);

// Betti vector of BL(G) as A d - v, where d is the degree vector of G and m
// its edge count. Throws std::invalid_argument when (d, m) violate the
// handshake identities.
BettiVector betti_bl_closed(const DegreeVector& d, std::uint64_t m);

// Betti vector of complement(BL(G)) for any (multi)graph with n vertices
// and m edges: entry j = m C(m+n-3, j) - C(m, j+1), length n+m-1.
BettiVector betti_blcomp_closed(std::size_t n, std::size_t m);

// Square submatrix of A used for degree-vector recovery: rows n-1..n+delta-1
// and columns 1..delta+1 (1-based). Upper unitriangular.
IntMatrix recovery_matrix(std::size_t n, std::size_t delta);
// (-1)^{i+j} B_{ij}, the closed-form inverse of recovery_matrix.
IntMatrix recovery_matrix_inverse(std::size_t n, std::size_t delta);

// Recovers the degree vector of G from the Betti vector of BL(G).
// delta is read off as (last nonzero index) - (n-1); an edgeless G gives
// delta = 0 and B = [1]. Throws InconsistencyError if omega is not the Betti
// vector of BL(G) for any graph G on n vertices.
DegreeVector recover_degree_vector(const BettiVector& omega, std::size_t n);

}  // namespace blbetti

#endif  // BLBETTI_BETTI_HPP_
