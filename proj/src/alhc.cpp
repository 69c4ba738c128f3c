#include "blbetti/alhc.hpp"

#include <sstream>
#include <stdexcept>

#include "blbetti/errors.hpp"

namespace blbetti {

std::string to_string(const Alhc& lambda) {
  std::ostringstream os;
  os << '(';
  for (std::size_t k = 0; k < lambda.size(); ++k) os << (k ? "," : "") << lambda.at(k).get_str();
  os << ')';
  return os.str();
}

bool is_alhc(std::span<const BigInt> parts, const BigInt& bound) {
  if (parts.empty()) return true;
  if (parts[0] > bound) return false;
  for (std::size_t k = 0; k + 1 < parts.size(); ++k) {
    // parts[k]/(k+1) >= parts[k+1]/(k+2)
    const unsigned long here = k + 1;
    const unsigned long next = k + 2;
    if (parts[k] * next < parts[k + 1] * here) return false;
  }
  return parts.back() >= 0;
}

IntMatrix psi_matrix(std::size_t size) {
  IntMatrix psi(size, size);
  for (std::size_t r = 0; r < size; ++r)
    for (std::size_t c = 0; c <= r; ++c)
      psi(r, c) = binomial(static_cast<std::int64_t>(r), static_cast<std::int64_t>(c));
  return psi;
}

IntMatrix psi_inverse(std::size_t size) {
  IntMatrix inverse = psi_matrix(size);
  for (std::size_t r = 0; r < size; ++r)
    for (std::size_t c = 0; c <= r; ++c)
      if ((r + c) % 2 == 1) inverse(r, c) = -inverse(r, c);
  return inverse;
}

Alhc alhc_from_betti(const BettiVector& omega) {
  std::vector<BigInt> parts = multiply<BigInt>(std::span<const BigInt>(omega.entries()),
                                               psi_inverse(omega.size()));
  if (!is_alhc(parts, BigInt(1))) {
    throw InconsistencyError("alhc_from_betti: " + to_string(Alhc(parts)) +
                             " is not an anti-lecture-hall composition; not a 2-linear Betti vector");
  }
  return Alhc(std::move(parts));
}

Alhc alhc_bl_closed(const DegreeVector& d, std::uint64_t m) {
  const std::size_t n = d.size();
  if (n == 0) throw std::invalid_argument("alhc_bl_closed: empty degree vector");
  if (m + 1 < n) {
    throw ApplicabilityError("alhc_bl_closed: the closed form needs m >= n-1 (got n = " +
                             std::to_string(n) + ", m = " + std::to_string(m) +
                             "); use alhc_from_betti instead");
  }
  if (!d.consistent_with(m)) {
    throw std::invalid_argument("alhc_bl_closed: degree vector inconsistent with " +
                                std::to_string(m) + " edges");
  }
  const std::size_t length = n + m - 1;
  std::vector<BigInt> parts(length, 0);
  for (std::size_t j = 1; j < n && j <= length; ++j) parts[j - 1] = static_cast<unsigned long>(j);
  // lambda_n = n - d_0, so isolated vertices pull it below n.
  for (std::size_t j = n; j <= 2 * n - 2 && j <= length; ++j) {
    BigInt tail = 0;
    for (std::size_t i = j - n + 1; i <= n - 1; ++i) tail += static_cast<unsigned long>(d[i]);
    parts[j - 1] = tail;
  }
  return Alhc(std::move(parts));
}

Alhc alhc_blcomp_closed(std::size_t n, std::size_t m) {
  if (n == 0) throw std::invalid_argument("alhc_blcomp_closed: n must be >= 1");
  if (m > 0 && n < 3) {
    throw ApplicabilityError("alhc_blcomp_closed: the closed form needs n >= 3 when m >= 1 (got n = " +
                             std::to_string(n) + "); use alhc_from_betti instead");
  }
  const std::size_t length = n + m - 1;
  std::vector<BigInt> parts(length, 0);
  for (std::size_t j = 1; j <= length; ++j) {
    if (j <= m) {
      parts[j - 1] = static_cast<unsigned long>(j);
    } else if (j + 3 <= m + n) {
      parts[j - 1] = static_cast<unsigned long>(m);
    }
  }
  return Alhc(std::move(parts));
}

}  // namespace blbetti
