#include "blbetti/betti.hpp"

#include <sstream>
#include <stdexcept>

#include "blbetti/errors.hpp"

namespace blbetti {

std::size_t BettiVector::last_nonzero() const {
  for (std::size_t k = entries_.size(); k-- > 0;) {
    if (entries_[k] != 0) return k + 1;
  }
  return 0;
}

std::string to_string(const BettiVector& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t k = 0; k < v.size(); ++k) os << (k ? "," : "") << v.at(k).get_str();
  os << ')';
  return os.str();
}

BettiTable BettiTable::from_rows(const std::vector<std::vector<long>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  BettiTable t(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("BettiTable: ragged rows");
    for (std::size_t c = 0; c < cols; ++c) t.at(r, c) = ExactRational(rows[r][c]);
  }
  return t;
}

BettiTable BettiTable::from_linear(const BettiVector& omega) {
  BettiTable t(2, omega.size() + 1);
  t.at(0, 0) = ExactRational(1);
  for (std::size_t k = 0; k < omega.size(); ++k) t.at(1, k + 1) = ExactRational(omega.at(k));
  return t;
}

bool BettiTable::is_zero() const {
  for (std::size_t r = 0; r < rows(); ++r)
    for (std::size_t c = 0; c < cols(); ++c)
      if (!at(r, c).is_zero()) return false;
  return true;
}

namespace {

// Adjacency bitmasks of complement(h).
std::vector<VertexMask> complement_masks(const Graph& h) {
  const std::size_t n = h.vertex_count();
  const VertexMask all = (n == 64) ? ~VertexMask{0} : ((VertexMask{1} << n) - 1);
  std::vector<VertexMask> masks(n, 0);
  for (Vertex v = 0; v < n; ++v) {
    VertexMask own = 0;
    for (Vertex w : h.neighbors(v)) own |= VertexMask{1} << w;
    masks[v] = all & ~own & ~(VertexMask{1} << v);
  }
  return masks;
}

}  // namespace

SubsetTally betti_oracle_tally(const Graph& h, const OracleOptions& options) {
  const std::size_t n = h.vertex_count();
  if (n > options.max_vertices || n > kMaxKernelVertices) {
    throw SizeLimitError("betti_oracle: " + std::to_string(n) +
                         " vertices exceeds the enumeration cap of " +
                         std::to_string(std::min(options.max_vertices, kMaxKernelVertices)));
  }
  if (!is_chordal(complement(h))) {
    throw ApplicabilityError(
        "betti_oracle: complement is not chordal, so the edge ideal has no 2-linear resolution");
  }
  const std::vector<VertexMask> masks = complement_masks(h);
  return tally_components(masks, options.mode);
}

BettiVector betti_oracle(const Graph& h, const OracleOptions& options) {
  const SubsetTally tally = betti_oracle_tally(h, options);
  const std::size_t n = h.vertex_count();
  std::vector<BigInt> entries;
  // beta_{i,i+1} collects subsets of size i+1, for i = 1..n-1.
  for (std::size_t i = 1; i + 1 <= n; ++i) {
    entries.emplace_back(static_cast<unsigned long>(tally.excess_components[i + 1]));
  }
  return BettiVector(std::move(entries));
}

IntMatrix stat_matrix_a(std::size_t n, std::size_t m) {
  if (n == 0) throw std::invalid_argument("stat_matrix_a: n must be >= 1");
  const std::size_t rows = n + m - 1;
  IntMatrix a(rows, n);
  for (std::size_t i = 1; i <= rows; ++i)
    for (std::size_t j = 1; j <= n; ++j)
      a(i - 1, j - 1) = binomial(static_cast<std::int64_t>(j + n - 2), static_cast<std::int64_t>(i));
  return a;
}

std::vector<BigInt> stat_vector_v(std::size_t n, std::size_t m) {
  if (n == 0) throw std::invalid_argument("stat_vector_v: n must be >= 1");
  std::vector<BigInt> v;
  for (std::size_t i = 1; i <= n + m - 1; ++i) {
    v.push_back(binomial(static_cast<std::int64_t>(n), static_cast<std::int64_t>(i + 1)));
  }
  return v;
}

BettiVector betti_bl_closed(const DegreeVector& d, std::uint64_t m) {
  const std::size_t n = d.size();
  if (n == 0) throw std::invalid_argument("betti_bl_closed: empty degree vector");
  if (!d.consistent_with(m)) {
    throw std::invalid_argument("betti_bl_closed: degree vector inconsistent with " +
                                std::to_string(m) + " edges");
  }
  const IntMatrix a = stat_matrix_a(n, m);
  std::vector<BigInt> counts;
  counts.reserve(n);
  for (std::uint64_t c : d.counts()) counts.emplace_back(static_cast<unsigned long>(c));
  std::vector<BigInt> omega = multiply<BigInt>(a, counts);
  const std::vector<BigInt> v = stat_vector_v(n, m);
  for (std::size_t k = 0; k < omega.size(); ++k) omega[k] -= v[k];
  return BettiVector(std::move(omega));
}

BettiVector betti_blcomp_closed(std::size_t n, std::size_t m) {
  if (n == 0) throw std::invalid_argument("betti_blcomp_closed: n must be >= 1");
  if (m > 0 && n < 2) throw std::invalid_argument("betti_blcomp_closed: edges need n >= 2");
  const std::size_t length = n + m - 1;
  std::vector<BigInt> entries(length, 0);
  if (m == 0) return BettiVector(std::move(entries));
  const auto mm = static_cast<std::int64_t>(m);
  const auto top = static_cast<std::int64_t>(m + n - 3);
  for (std::size_t j = 1; j <= length; ++j) {
    const auto jj = static_cast<std::int64_t>(j);
    entries[j - 1] = BigInt(static_cast<unsigned long>(m)) * binomial(top, jj) - binomial(mm, jj + 1);
  }
  return BettiVector(std::move(entries));
}

IntMatrix recovery_matrix(std::size_t n, std::size_t delta) {
  if (n == 0) throw std::invalid_argument("recovery_matrix: n must be >= 1");
  IntMatrix b(delta + 1, delta + 1);
  for (std::size_t r = 0; r <= delta; ++r)
    for (std::size_t c = 0; c <= delta; ++c)
      b(r, c) = binomial(static_cast<std::int64_t>(c + n - 1), static_cast<std::int64_t>(r + n - 1));
  return b;
}

IntMatrix recovery_matrix_inverse(std::size_t n, std::size_t delta) {
  IntMatrix inverse = recovery_matrix(n, delta);
  for (std::size_t r = 0; r <= delta; ++r)
    for (std::size_t c = 0; c <= delta; ++c)
      if ((r + c) % 2 == 1) inverse(r, c) = -inverse(r, c);
  return inverse;
}

namespace {

bool equal_up_to_trailing_zeros(const BettiVector& a, const BettiVector& b) {
  const std::size_t len = std::max(a.size(), b.size());
  for (std::size_t k = 0; k < len; ++k) {
    const BigInt x = k < a.size() ? a.at(k) : BigInt(0);
    const BigInt y = k < b.size() ? b.at(k) : BigInt(0);
    if (x != y) return false;
  }
  return true;
}

}  // namespace

DegreeVector recover_degree_vector(const BettiVector& omega, std::size_t n) {
  if (n == 0) throw std::invalid_argument("recover_degree_vector: n must be >= 1");
  const std::size_t last = omega.last_nonzero();
  if (n == 1) {
    if (last != 0) throw InconsistencyError("recover_degree_vector: nonzero Betti vector for n = 1");
    return DegreeVector({1});
  }
  if (omega.size() < n - 1 || last < n - 1) {
    throw InconsistencyError("recover_degree_vector: Betti vector " + to_string(omega) +
                             " ends before position n-1 = " + std::to_string(n - 1));
  }
  const std::size_t delta = last - (n - 1);
  if (delta > n - 1) {
    throw InconsistencyError("recover_degree_vector: implied maximum degree " +
                             std::to_string(delta) + " exceeds n-1");
  }

  const IntMatrix b = recovery_matrix(n, delta);
  const IntMatrix b_inverse = recovery_matrix_inverse(n, delta);
  if (!(b * b_inverse).is_identity()) {
    throw std::logic_error("recover_degree_vector: signed inverse of B failed to invert B");
  }

  std::vector<BigInt> rhs(delta + 1);
  for (std::size_t r = 0; r <= delta; ++r) rhs[r] = omega.beta(n - 1 + r);
  rhs[0] += 1;
  const std::vector<BigInt> head = multiply<BigInt>(b_inverse, rhs);

  std::vector<std::uint64_t> counts(n, 0);
  for (std::size_t k = 0; k <= delta; ++k) {
    if (head[k] < 0 || !head[k].fits_ulong_p()) {
      throw InconsistencyError("recover_degree_vector: negative degree count at degree " +
                               std::to_string(k));
    }
    counts[k] = head[k].get_ui();
  }
  DegreeVector d(std::move(counts));
  if (!is_graphical(d)) {
    throw InconsistencyError("recover_degree_vector: recovered counts are not graphical");
  }
  const std::uint64_t m = d.degree_total() / 2;
  if (!equal_up_to_trailing_zeros(betti_bl_closed(d, m), omega)) {
    throw InconsistencyError("recover_degree_vector: " + to_string(omega) +
                             " is not the Betti vector of any Booth-Lueker graph");
  }
  return d;
}

}  // namespace blbetti
