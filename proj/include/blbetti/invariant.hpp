// Booth-Lueker Betti signatures as graph invariants.
#ifndef BLBETTI_INVARIANT_HPP_
#define BLBETTI_INVARIANT_HPP_

#include <cstddef>
#include <string_view>

#include "blbetti/alhc.hpp"
#include "blbetti/betti.hpp"
#include "blbetti/boij_soderberg.hpp"
#include "blbetti/graph.hpp"

namespace blbetti {

struct Signature {
  std::size_t n = 0;
  std::size_t m = 0;
  BettiVector omega;
  CoefficientVector coeffs;
  Alhc lambda;

  friend bool operator==(const Signature&, const Signature&) = default;
};

// Betti vector, Boij-Soderberg coefficients and anti-lecture-hall composition
// of BL(g). Closed forms are used where their hypotheses hold (m >= n-1),
// the matrix methods otherwise. Requires at least one vertex.
Signature signature(const Graph& g);

enum class Verdict { kDistinguished, kIndistinguishableByBlBetti };

std::string_view to_string(Verdict verdict);

// Distinguished iff the signatures differ. Because the Betti vector of BL(G)
// determines and is determined by the degree vector, this must agree with
// comparing degree vectors; a disagreement throws std::logic_error.
Verdict compare(const Graph& g, const Graph& h);

}  // namespace blbetti

#endif  // BLBETTI_INVARIANT_HPP_
