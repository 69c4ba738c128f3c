// Exhaustive closed-form-versus-oracle checks over all labelled simple graphs
// on up to K vertices; backs the `verify` CLI subcommand.
#ifndef BLBETTI_VERIFICATION_HPP_
#define BLBETTI_VERIFICATION_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "blbetti/graph.hpp"

namespace blbetti {

inline constexpr std::size_t kMaxVerifyVertices = 6;

struct CheckResult {
  std::string name;
  std::uint64_t cases = 0;
  std::uint64_t failures = 0;
  std::string first_failure;  // empty when failures == 0
};

struct VerificationReport {
  std::size_t max_n = 0;
  std::vector<CheckResult> checks;

  bool passed() const;
};

// Labelled simple graph on n vertices whose edge set is given by the bits
// of `mask` over the pairs (0,1), (0,2), ..., (n-2,n-1).
Graph graph_from_mask(std::size_t n, std::uint64_t mask);

// Throws std::invalid_argument for max_n outside 1..kMaxVerifyVertices.
VerificationReport run_verification(std::size_t max_n);

}  // namespace blbetti

#endif  // BLBETTI_VERIFICATION_HPP_
