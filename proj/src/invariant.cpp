#include "blbetti/invariant.hpp"

#include <stdexcept>

namespace blbetti {

Signature signature(const Graph& g) {
  if (g.vertex_count() == 0) throw std::invalid_argument("signature: graph has no vertices");
  Signature sig;
  sig.n = g.vertex_count();
  sig.m = g.edge_count();
  const DegreeVector d = degree_vector(g);
  sig.omega = betti_bl_closed(d, sig.m);
  if (sig.m + 1 >= sig.n) {
    sig.coeffs = coeffs_bl_closed(d, sig.m, HypothesisPolicy::kRelaxed);
    sig.lambda = alhc_bl_closed(d, sig.m);
  } else {
    sig.coeffs = coeffs_from_betti(sig.omega);
    sig.lambda = alhc_from_betti(sig.omega);
  }
  return sig;
}

std::string_view to_string(Verdict verdict) {
  return verdict == Verdict::kDistinguished ? "DISTINGUISHED" : "INDISTINGUISHABLE_BY_BL_BETTI";
}

Verdict compare(const Graph& g, const Graph& h) {
  const bool signatures_differ = !(signature(g) == signature(h));
  const bool degrees_differ = !(degree_vector(g) == degree_vector(h));
  if (signatures_differ != degrees_differ) {
    throw std::logic_error("compare: signature and degree-vector comparisons disagree");
  }
  return signatures_differ ? Verdict::kDistinguished : Verdict::kIndistinguishableByBlBetti;
}

}  // namespace blbetti
