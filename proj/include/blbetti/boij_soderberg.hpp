// Boij-Soderberg decompositions: pure Betti tables, the change of basis
// between Betti vectors and coefficients for 2-linear resolutions, closed
// forms for Booth-Lueker ideals, and greedy decomposition of general tables.
#ifndef BLBETTI_BOIJ_SODERBERG_HPP_
#define BLBETTI_BOIJ_SODERBERG_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "blbetti/betti.hpp"
#include "blbetti/exact_math.hpp"
#include "blbetti/graph.hpp"
#include "blbetti/matrix.hpp"

namespace blbetti {

// Strictly increasing non-negative integers (n_0, ..., n_s).
class DegreeSequence {
 public:
  DegreeSequence() = default;
  // Throws std::invalid_argument unless strictly increasing and >= 0.
  explicit DegreeSequence(std::vector<std::int64_t> degrees);

  const std::vector<std::int64_t>& degrees() const { return degrees_; }
  std::size_t length() const { return degrees_.size(); }
  std::int64_t operator[](std::size_t i) const { return degrees_[i]; }

  // The partial order on sequences: (n_0..n_s) >= (m_0..m_t) iff s <= t and
  // n_i >= m_i for i <= s.
  bool dominates(const DegreeSequence& other) const;

  friend bool operator==(const DegreeSequence&, const DegreeSequence&) = default;

 private:
  std::vector<std::int64_t> degrees_;
};

std::string to_string(const DegreeSequence& seq);

// pi(n): a single nonzero entry per column, at (row n_i - i, column i), with
// value prod_{k != 0, i} |(n_k - n_0) / (n_k - n_i)|. The column-0 entry is 1.
class PureTable {
 public:
  explicit PureTable(DegreeSequence sequence);

  const DegreeSequence& sequence() const { return sequence_; }
  // Entry in homological degree i (at internal degree n_i).
  const ExactRational& value(std::size_t i) const { return values_.at(i); }
  std::size_t row_of(std::size_t i) const {
    return static_cast<std::size_t>(sequence_[i]) - i;
  }
  // Smallest table shape holding every entry.
  std::size_t min_rows() const;
  std::size_t min_cols() const { return sequence_.length(); }

  // Throws std::out_of_range if an entry falls outside the shape.
  BettiTable to_table(std::size_t rows, std::size_t cols) const;

 private:
  DegreeSequence sequence_;
  std::vector<ExactRational> values_;
};

PureTable pure_table(const DegreeSequence& seq);

// Second row of pi(0,2,3,...,s+1) without its leading zero, padded to
// `length`: entry i (1-based) is i C(s+1, i+1). Requires s >= 1 and
// length >= s.
std::vector<BigInt> pure_linear_vector(std::size_t s, std::size_t length);

// L x L matrix with 1-based entries j C(i+1, j+1); row s is pi_s truncated.
IntMatrix omega_matrix(std::size_t size);
// Its inverse, entries (-1)^{i-j} (1/i) C(i+1, j+1).
RationalMatrix omega_inverse(std::size_t size);

// c_1..c_L, 0-indexed storage: at(k) = c_{k+1}.
class CoefficientVector {
 public:
  CoefficientVector() = default;
  explicit CoefficientVector(std::vector<ExactRational> values) : values_(std::move(values)) {}
  explicit CoefficientVector(std::size_t length) : values_(length, ExactRational(0)) {}

  std::size_t size() const { return values_.size(); }
  const std::vector<ExactRational>& values() const { return values_; }
  const ExactRational& at(std::size_t k) const { return values_.at(k); }
  // 1-based: c(j) = c_j.
  const ExactRational& c(std::size_t j) const { return values_.at(j - 1); }
  ExactRational& c(std::size_t j) { return values_.at(j - 1); }

  // Recomposition sum_s c_s pi_s, truncated to size().
  std::vector<ExactRational> recompose() const;

  friend bool operator==(const CoefficientVector&, const CoefficientVector&) = default;

 private:
  std::vector<ExactRational> values_;
};

// c = omega * Omega^{-1}. Throws InconsistencyError if any c_s < 0.
CoefficientVector coeffs_from_betti(const BettiVector& omega);

enum class HypothesisPolicy {
  kStrict,   // m >= n, exactly as the closed form is stated
  kRelaxed,  // m >= n - 1, the smallest m for which all nonzero c_j fit
};

// Closed form for BL(G) from the degree vector:
//   c_{n-1} = d_0 / n,
//   c_j = d_{j-n+1} / j + (d_{j-n+2} + ... + d_{n-1}) / (j(j+1)),  n <= j <= 2n-2,
// zero elsewhere, length n+m-1. Throws ApplicabilityError when m is below
// what `policy` allows and std::invalid_argument for inconsistent (d, m).
CoefficientVector coeffs_bl_closed(const DegreeVector& d, std::uint64_t m,
                                   HypothesisPolicy policy = HypothesisPolicy::kStrict);

// The same formula evaluated with no hypothesis check; entries whose index
// exceeds n+m-1 are dropped.
CoefficientVector coeffs_bl_formula(const DegreeVector& d, std::uint64_t m);

// Closed form for complement(BL(G)) with n vertices and m edges:
//   c_i = m / (i(i+1)) for m <= i <= m+n-4,  c_{m+n-3} = m / (m+n-3).
// Requires n >= 3 and m >= 1; throws ApplicabilityError otherwise.
CoefficientVector coeffs_blcomp_closed(std::size_t n, std::size_t m);

struct DecompositionTerm {
  DegreeSequence sequence;
  ExactRational coefficient;

  friend bool operator==(const DecompositionTerm&, const DecompositionTerm&) = default;
};

using Decomposition = std::vector<DecompositionTerm>;

// Greedy peeling: read the degree sequence from the topmost nonzero entry of
// each column, subtract the largest multiple of its pure table that keeps
// the table non-negative, repeat. Throws InconsistencyError when the table
// has negative entries or the greedy chain gets stuck.
Decomposition decompose_table(const BettiTable& table);

// sum c pi(seq) at the given shape.
BettiTable recompose(const Decomposition& decomposition, std::size_t rows, std::size_t cols);

}  // namespace blbetti

#endif  // BLBETTI_BOIJ_SODERBERG_HPP_
