// Anti-lecture-hall compositions attached to 2-linear ideals:
// t >= l_1/1 >= l_2/2 >= ... >= l_L/L >= 0.
#ifndef BLBETTI_ALHC_HPP_
#define BLBETTI_ALHC_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "blbetti/betti.hpp"
#include "blbetti/exact_math.hpp"
#include "blbetti/graph.hpp"
#include "blbetti/matrix.hpp"

namespace blbetti {

// 0-indexed storage: at(k) = lambda_{k+1}.
class Alhc {
 public:
  Alhc() = default;
  explicit Alhc(std::vector<BigInt> parts) : parts_(std::move(parts)) {}

  std::size_t size() const { return parts_.size(); }
  const std::vector<BigInt>& parts() const { return parts_; }
  const BigInt& at(std::size_t k) const { return parts_.at(k); }
  const BigInt& lambda(std::size_t j) const { return parts_.at(j - 1); }

  friend bool operator==(const Alhc&, const Alhc&) = default;

 private:
  std::vector<BigInt> parts_;
};

std::string to_string(const Alhc& lambda);

// Checks the chain of inequalities by cross-multiplication.
bool is_alhc(std::span<const BigInt> parts, const BigInt& bound);

// L x L with 1-based entries C(i-1, j-1).
IntMatrix psi_matrix(std::size_t size);
// (-1)^{i+j} C(i-1, j-1).
IntMatrix psi_inverse(std::size_t size);

// lambda = omega * Psi^{-1}. Throws InconsistencyError unless the result is
// an anti-lecture-hall composition bounded by 1.
Alhc alhc_from_betti(const BettiVector& omega);

// Closed form for BL(G): lambda_j = j for j < n,
// lambda_j = d_{j-n+1} + ... + d_{n-1} for n <= j <= 2n-2, 0 after;
// length n+m-1. In particular lambda_n = n - d_0. Throws
// ApplicabilityError when m < n-1.
Alhc alhc_bl_closed(const DegreeVector& d, std::uint64_t m);

// Closed form for complement(BL(G)): lambda_j = j for j <= m,
// m for m < j <= m+n-3, 0 after; length n+m-1. Throws ApplicabilityError
// when m >= 1 and n < 3.
Alhc alhc_blcomp_closed(std::size_t n, std::size_t m);

}  // namespace blbetti

#endif  // BLBETTI_ALHC_HPP_
