#include "blbetti/boij_soderberg.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "blbetti/errors.hpp"

namespace blbetti {

DegreeSequence::DegreeSequence(std::vector<std::int64_t> degrees) : degrees_(std::move(degrees)) {
  if (degrees_.empty()) throw std::invalid_argument("DegreeSequence: empty");
  if (degrees_.front() < 0) throw std::invalid_argument("DegreeSequence: negative entry");
  for (std::size_t i = 1; i < degrees_.size(); ++i) {
    if (degrees_[i] <= degrees_[i - 1]) {
      throw std::invalid_argument("DegreeSequence: not strictly increasing");
    }
  }
}

bool DegreeSequence::dominates(const DegreeSequence& other) const {
  if (length() > other.length()) return false;
  for (std::size_t i = 0; i < length(); ++i) {
    if (degrees_[i] < other.degrees_[i]) return false;
  }
  return true;
}

std::string to_string(const DegreeSequence& seq) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < seq.length(); ++i) os << (i ? "," : "") << seq[i];
  os << ')';
  return os.str();
}

PureTable::PureTable(DegreeSequence sequence) : sequence_(std::move(sequence)) {
  const std::size_t len = sequence_.length();
  values_.reserve(len);
  for (std::size_t i = 0; i < len; ++i) {
    ExactRational value(1);
    for (std::size_t k = 1; k < len; ++k) {
      if (k == i) continue;
      BigInt num = sequence_[k] - sequence_[0];
      BigInt den = sequence_[k] - sequence_[i];
      value *= ExactRational(abs(num), abs(den));
    }
    values_.push_back(value);
  }
}

std::size_t PureTable::min_rows() const {
  std::size_t rows = 0;
  for (std::size_t i = 0; i < sequence_.length(); ++i) rows = std::max(rows, row_of(i) + 1);
  return rows;
}

BettiTable PureTable::to_table(std::size_t rows, std::size_t cols) const {
  if (rows < min_rows() || cols < min_cols()) {
    throw std::out_of_range("PureTable: " + to_string(sequence_) + " does not fit the shape");
  }
  BettiTable t(rows, cols);
  for (std::size_t i = 0; i < sequence_.length(); ++i) t.at(row_of(i), i) = values_[i];
  return t;
}

PureTable pure_table(const DegreeSequence& seq) { return PureTable(seq); }

std::vector<BigInt> pure_linear_vector(std::size_t s, std::size_t length) {
  if (s < 1) throw std::invalid_argument("pure_linear_vector: s must be >= 1");
  if (length < s) throw std::invalid_argument("pure_linear_vector: length shorter than s");
  std::vector<BigInt> out(length, 0);
  for (std::size_t i = 1; i <= s; ++i) {
    out[i - 1] = BigInt(static_cast<unsigned long>(i)) *
                 binomial(static_cast<std::int64_t>(s + 1), static_cast<std::int64_t>(i + 1));
  }
  return out;
}

IntMatrix omega_matrix(std::size_t size) {
  IntMatrix omega(size, size);
  for (std::size_t i = 1; i <= size; ++i)
    for (std::size_t j = 1; j <= i; ++j)
      omega(i - 1, j - 1) = BigInt(static_cast<unsigned long>(j)) *
                            binomial(static_cast<std::int64_t>(i + 1), static_cast<std::int64_t>(j + 1));
  return omega;
}

RationalMatrix omega_inverse(std::size_t size) {
  RationalMatrix inverse(size, size);
  for (std::size_t i = 1; i <= size; ++i) {
    for (std::size_t j = 1; j <= i; ++j) {
      BigInt num = binomial(static_cast<std::int64_t>(i + 1), static_cast<std::int64_t>(j + 1));
      if ((i - j) % 2 == 1) num = -num;
      inverse(i - 1, j - 1) = ExactRational(num, BigInt(static_cast<unsigned long>(i)));
    }
  }
  return inverse;
}

std::vector<ExactRational> CoefficientVector::recompose() const {
  const std::size_t length = values_.size();
  std::vector<ExactRational> out(length, ExactRational(0));
  for (std::size_t s = 1; s <= length; ++s) {
    if (c(s).is_zero()) continue;
    const std::vector<BigInt> pi = pure_linear_vector(s, length);
    for (std::size_t k = 0; k < s; ++k) out[k] += c(s) * ExactRational(pi[k]);
  }
  return out;
}

CoefficientVector coeffs_from_betti(const BettiVector& omega) {
  const std::size_t length = omega.size();
  std::vector<ExactRational> row;
  row.reserve(length);
  for (const BigInt& x : omega.entries()) row.emplace_back(x);
  std::vector<ExactRational> c = multiply<ExactRational>(row, omega_inverse(length));
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k].sign() < 0) {
      throw InconsistencyError("coeffs_from_betti: c_" + std::to_string(k + 1) + " = " +
                               c[k].to_string() + " < 0; not a valid 2-linear Betti vector");
    }
  }
  return CoefficientVector(std::move(c));
}

CoefficientVector coeffs_bl_formula(const DegreeVector& d, std::uint64_t m) {
  const std::size_t n = d.size();
  if (n == 0) throw std::invalid_argument("coeffs_bl_formula: empty degree vector");
  if (!d.consistent_with(m)) {
    throw std::invalid_argument("coeffs_bl_formula: degree vector inconsistent with " +
                                std::to_string(m) + " edges");
  }
  const std::size_t length = n + m - 1;
  CoefficientVector c(length);
  if (n >= 2 && n - 1 <= length) {
    c.c(n - 1) = ExactRational(BigInt(static_cast<unsigned long>(d[0])),
                               BigInt(static_cast<unsigned long>(n)));
  }
  for (std::size_t j = n; j <= 2 * n - 2 && j <= length; ++j) {
    BigInt tail = 0;
    for (std::size_t i = j - n + 2; i <= n - 1; ++i) tail += static_cast<unsigned long>(d[i]);
    const BigInt jj = static_cast<unsigned long>(j);
    c.c(j) = ExactRational(BigInt(static_cast<unsigned long>(d[j - n + 1])), jj) +
             ExactRational(tail, jj * (jj + 1));
  }
  return c;
}

CoefficientVector coeffs_bl_closed(const DegreeVector& d, std::uint64_t m, HypothesisPolicy policy) {
  const std::size_t n = d.size();
  const bool strict = policy == HypothesisPolicy::kStrict;
  if (strict ? m < n : m + 1 < n) {
    throw ApplicabilityError("coeffs_bl_closed: the closed form needs m >= " +
                             std::string(strict ? "n" : "n-1") + " (got n = " + std::to_string(n) +
                             ", m = " + std::to_string(m) + "); use coeffs_from_betti instead");
  }
  return coeffs_bl_formula(d, m);
}

CoefficientVector coeffs_blcomp_closed(std::size_t n, std::size_t m) {
  if (n < 3 || m < 1) {
    throw ApplicabilityError("coeffs_blcomp_closed: the closed form needs n >= 3 and m >= 1 (got n = " +
                             std::to_string(n) + ", m = " + std::to_string(m) +
                             "); use coeffs_from_betti instead");
  }
  const std::size_t length = n + m - 1;
  const std::size_t top = m + n - 3;
  const BigInt edges = static_cast<unsigned long>(m);
  CoefficientVector c(length);
  for (std::size_t i = m; i + 4 <= m + n; ++i) {
    const BigInt ii = static_cast<unsigned long>(i);
    c.c(i) = ExactRational(edges, ii * (ii + 1));
  }
  c.c(top) = ExactRational(edges, BigInt(static_cast<unsigned long>(top)));
  return c;
}

Decomposition decompose_table(const BettiTable& table) {
  for (std::size_t r = 0; r < table.rows(); ++r)
    for (std::size_t col = 0; col < table.cols(); ++col)
      if (table.at(r, col).sign() < 0) throw InconsistencyError("decompose_table: negative entry");

  BettiTable remainder = table;
  Decomposition result;
  while (!remainder.is_zero()) {
    std::size_t last_col = 0;
    for (std::size_t col = 0; col < remainder.cols(); ++col)
      for (std::size_t r = 0; r < remainder.rows(); ++r)
        if (!remainder.at(r, col).is_zero()) last_col = col;

    std::vector<std::int64_t> degrees;
    std::vector<std::size_t> top_rows;
    for (std::size_t col = 0; col <= last_col; ++col) {
      std::size_t r = 0;
      while (r < remainder.rows() && remainder.at(r, col).is_zero()) ++r;
      if (r == remainder.rows()) {
        throw InconsistencyError("decompose_table: table not decomposable by greedy chain (column " +
                                 std::to_string(col) + " is empty)");
      }
      top_rows.push_back(r);
      degrees.push_back(static_cast<std::int64_t>(r + col));
    }
    for (std::size_t i = 1; i < degrees.size(); ++i) {
      if (degrees[i] <= degrees[i - 1]) {
        throw InconsistencyError(
            "decompose_table: table not decomposable by greedy chain (degrees not increasing)");
      }
    }
    DegreeSequence seq(std::move(degrees));
    if (!result.empty() && !(seq.dominates(result.back().sequence) && !(seq == result.back().sequence))) {
      throw InconsistencyError("decompose_table: table not decomposable by greedy chain (order violated)");
    }

    const PureTable pi(seq);
    ExactRational coefficient = remainder.at(top_rows[0], 0) / pi.value(0);
    for (std::size_t i = 1; i < seq.length(); ++i) {
      coefficient = std::min(coefficient, remainder.at(top_rows[i], i) / pi.value(i));
    }
    for (std::size_t i = 0; i < seq.length(); ++i) {
      remainder.at(top_rows[i], i) -= coefficient * pi.value(i);
    }
    result.push_back({std::move(seq), coefficient});
  }
  return result;
}

BettiTable recompose(const Decomposition& decomposition, std::size_t rows, std::size_t cols) {
  BettiTable out(rows, cols);
  for (const DecompositionTerm& term : decomposition) {
    const PureTable pi(term.sequence);
    if (rows < pi.min_rows() || cols < pi.min_cols()) {
      throw std::out_of_range("recompose: " + to_string(term.sequence) + " does not fit the shape");
    }
    for (std::size_t i = 0; i < term.sequence.length(); ++i) {
      out.at(pi.row_of(i), i) += term.coefficient * pi.value(i);
    }
  }
  return out;
}

}  // namespace blbetti
