#include "blbetti/verification.hpp"

#include <map>
#include <stdexcept>

#include "blbetti/alhc.hpp"
#include "blbetti/betti.hpp"
#include "blbetti/boij_soderberg.hpp"
#include "blbetti/booth_lueker.hpp"

namespace blbetti {

bool VerificationReport::passed() const {
  for (const CheckResult& c : checks) {
    if (c.failures != 0) return false;
  }
  return true;
}

Graph graph_from_mask(std::size_t n, std::uint64_t mask) {
  std::vector<Edge> edges;
  std::size_t bit = 0;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v, ++bit) {
      if ((mask >> bit) & 1U) edges.emplace_back(u, v);
    }
  }
  return Graph(n, std::move(edges));
}

namespace {

std::string describe(const Graph& g) {
  std::string s = "n=" + std::to_string(g.vertex_count()) + " edges={";
  for (std::size_t k = 0; k < g.edge_count(); ++k) {
    const Edge& e = g.edges()[k];
    s += (k ? "," : "") + std::to_string(e.u) + "-" + std::to_string(e.v);
  }
  return s + "}";
}

std::string describe(const DegreeVector& d) {
  std::string s = "(";
  for (std::size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + std::to_string(d[i]);
  return s + ")";
}

struct PerGraphCounts {
  std::uint64_t bl_failures = 0;
  std::uint64_t comp_failures = 0;
  std::uint64_t chordal_failures = 0;
  // Smallest failing mask per check, for a deterministic report.
  std::uint64_t bl_first = UINT64_MAX;
  std::uint64_t comp_first = UINT64_MAX;
  std::uint64_t chordal_first = UINT64_MAX;
};

void record(CheckResult& check, bool ok, const std::string& what) {
  ++check.cases;
  if (ok) return;
  if (check.failures++ == 0) check.first_failure = what;
}

}  // namespace

VerificationReport run_verification(std::size_t max_n) {
  if (max_n < 1 || max_n > kMaxVerifyVertices) {
    throw std::invalid_argument("verify: --max-n must be between 1 and " +
                                std::to_string(kMaxVerifyVertices));
  }
  VerificationReport report;
  report.max_n = max_n;
  CheckResult bl_betti{"bl_betti_closed_vs_oracle"};
  CheckResult comp_betti{"blcomp_betti_closed_vs_oracle"};
  CheckResult chordal{"bl_and_complement_chordal"};
  CheckResult bl_coeffs{"bl_coeffs_closed_vs_matrix"};
  CheckResult bl_alhc{"bl_alhc_closed_vs_matrix"};
  CheckResult comp_coeffs{"blcomp_coeffs_closed_vs_matrix"};
  CheckResult comp_alhc{"blcomp_alhc_closed_vs_matrix"};
  CheckResult recovery{"degree_vector_recovery"};

  const OracleOptions serial{ExecutionMode::kSerial, 24};
  for (std::size_t n = 1; n <= max_n; ++n) {
    const std::size_t pairs = n * (n - 1) / 2;
    const auto total = static_cast<std::int64_t>(std::uint64_t{1} << pairs);
    PerGraphCounts counts;

    // Graph cases fan out across threads; each worker runs the serial
    // oracle and failures are merged by smallest mask.
#pragma omp parallel default(none) shared(counts, total, n, serial)
    {
      PerGraphCounts local;
#pragma omp for schedule(dynamic, 16)
      for (std::int64_t i = 0; i < total; ++i) {
        const auto mask = static_cast<std::uint64_t>(i);
        const Graph g = graph_from_mask(n, mask);
        const std::size_t m = g.edge_count();
        const BLGraph b = bl(g);
        const Graph comp = bl_complement(g);
        if (!(betti_bl_closed(degree_vector(g), m) == betti_oracle(b.graph(), serial))) {
          ++local.bl_failures;
          local.bl_first = std::min(local.bl_first, mask);
        }
        if (!(betti_blcomp_closed(n, m) == betti_oracle(comp, serial))) {
          ++local.comp_failures;
          local.comp_first = std::min(local.comp_first, mask);
        }
        if (!is_chordal(b.graph()) || !is_chordal(comp) || !(complement(b.graph()) == comp)) {
          ++local.chordal_failures;
          local.chordal_first = std::min(local.chordal_first, mask);
        }
      }
#pragma omp critical(blbetti_verify_merge)
      {
        counts.bl_failures += local.bl_failures;
        counts.comp_failures += local.comp_failures;
        counts.chordal_failures += local.chordal_failures;
        counts.bl_first = std::min(counts.bl_first, local.bl_first);
        counts.comp_first = std::min(counts.comp_first, local.comp_first);
        counts.chordal_first = std::min(counts.chordal_first, local.chordal_first);
      }
    }
    const auto merge = [&](CheckResult& check, std::uint64_t failures, std::uint64_t first) {
      check.cases += static_cast<std::uint64_t>(total);
      if (failures != 0 && check.failures == 0) check.first_failure = describe(graph_from_mask(n, first));
      check.failures += failures;
    };
    merge(bl_betti, counts.bl_failures, counts.bl_first);
    merge(comp_betti, counts.comp_failures, counts.comp_first);
    merge(chordal, counts.chordal_failures, counts.chordal_first);

    // The remaining checks depend on the graph only through its degree
    // vector (BL side) or through (n, m) (complement side).
    std::map<std::vector<std::uint64_t>, std::size_t> degree_vectors;
    for (std::int64_t i = 0; i < total; ++i) {
      const Graph g = graph_from_mask(n, static_cast<std::uint64_t>(i));
      degree_vectors.emplace(degree_vector(g).counts(), g.edge_count());
    }
    for (const auto& [counts_vec, m] : degree_vectors) {
      const DegreeVector d(counts_vec);
      const BettiVector omega = betti_bl_closed(d, m);
      const std::string label = "d=" + describe(d);
      if (m >= n) record(bl_coeffs, coeffs_bl_closed(d, m) == coeffs_from_betti(omega), label);
      if (m + 1 >= n) record(bl_alhc, alhc_bl_closed(d, m) == alhc_from_betti(omega), label);
      record(recovery, recover_degree_vector(omega, n) == d, label);
    }
    for (std::size_t m = 0; m <= pairs; ++m) {
      const std::string label = "n=" + std::to_string(n) + " m=" + std::to_string(m);
      const BettiVector omega = betti_blcomp_closed(n, m);
      if (n >= 3 && m >= 1) record(comp_coeffs, coeffs_blcomp_closed(n, m) == coeffs_from_betti(omega), label);
      if (n >= 3 || m == 0) record(comp_alhc, alhc_blcomp_closed(n, m) == alhc_from_betti(omega), label);
    }
  }
  report.checks = {bl_betti, comp_betti, chordal, bl_coeffs, bl_alhc, comp_coeffs, comp_alhc, recovery};
  return report;
}

}  // namespace blbetti
