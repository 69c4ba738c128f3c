#include "blbetti/exact_math.hpp"

#include <stdexcept>

namespace blbetti {

ExactRational::ExactRational(const BigInt& numerator, const BigInt& denominator) {
  if (denominator == 0) throw std::domain_error("ExactRational: zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

ExactRational& ExactRational::operator/=(const ExactRational& o) {
  if (o.is_zero()) throw std::domain_error("ExactRational: division by zero");
  value_ /= o.value_;
  return *this;
}

std::string ExactRational::to_string() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

BigInt binomial(std::int64_t a, std::int64_t b) {
  if (a < 0) throw std::invalid_argument("binomial: negative upper argument");
  if (b < 0 || b > a) return 0;
  BigInt result;
  mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(a),
               static_cast<unsigned long>(b));
  return result;
}

bool vandermonde_check(std::int64_t r, std::int64_t s, std::int64_t n) {
  if (r < 0 || s < 0) throw std::invalid_argument("vandermonde_check: negative r or s");
  BigInt lhs = 0;
  for (std::int64_t k = 0; k <= r; ++k) lhs += binomial(r, k) * binomial(s, n - k);
  return lhs == binomial(r + s, n);
}

std::optional<std::size_t> BinomialBasisPolynomial::degree() const {
  for (std::size_t j = coefficients_.size(); j-- > 0;) {
    if (coefficients_[j] != 0) return j;
  }
  return std::nullopt;
}

namespace {

// C(x + j, j) = (x+1)(x+2)...(x+j) / j!, valid for every integer x.
BigInt shifted_binomial(std::int64_t x, std::size_t j) {
  BigInt numerator = 1;
  BigInt factorial = 1;
  for (std::size_t k = 1; k <= j; ++k) {
    numerator *= BigInt(static_cast<long>(x)) + static_cast<long>(k);
    factorial *= static_cast<unsigned long>(k);
  }
  BigInt result = numerator / factorial;
  return result;
}

}  // namespace

BigInt BinomialBasisPolynomial::evaluate(std::int64_t x) const {
  BigInt total = 0;
  for (std::size_t j = 0; j < coefficients_.size(); ++j) {
    if (coefficients_[j] == 0) continue;
    total += coefficients_[j] * shifted_binomial(x, j);
  }
  return total;
}

BigInt alternating_sum(const BinomialBasisPolynomial& p, std::int64_t n) {
  if (n < 1) throw std::invalid_argument("alternating_sum: N must be >= 1");
  BigInt total = 0;
  for (std::int64_t i = 0; i <= n; ++i) {
    BigInt term = binomial(n, i) * p.evaluate(i);
    if (i % 2 == 0) {
      total += term;
    } else {
      total -= term;
    }
  }
  return total;
}

}  // namespace blbetti
