// Exact integer and rational arithmetic plus the binomial identities the
// Betti-number formulas are built on. Big integers come from GMP.
#ifndef BLBETTI_EXACT_MATH_HPP_
#define BLBETTI_EXACT_MATH_HPP_

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace blbetti {

using BigInt = mpz_class;

// A fraction kept in lowest terms with a positive denominator, so two
// ExactRationals are equal iff their numerators and denominators are.
class ExactRational {
 public:
  ExactRational() = default;
  ExactRational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  ExactRational(const BigInt& value) : value_(value) {}  // NOLINT
  // Throws std::domain_error on a zero denominator.
  ExactRational(const BigInt& numerator, const BigInt& denominator);

  BigInt numerator() const { return value_.get_num(); }
  BigInt denominator() const { return value_.get_den(); }
  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return value_.get_den() == 1; }

  // "p/q", or just "p" when the denominator is 1.
  std::string to_string() const;

  ExactRational& operator+=(const ExactRational& o) { value_ += o.value_; return *this; }
  ExactRational& operator-=(const ExactRational& o) { value_ -= o.value_; return *this; }
  ExactRational& operator*=(const ExactRational& o) { value_ *= o.value_; return *this; }
  // Throws std::domain_error when dividing by zero.
  ExactRational& operator/=(const ExactRational& o);

  friend ExactRational operator+(ExactRational a, const ExactRational& b) { return a += b; }
  friend ExactRational operator-(ExactRational a, const ExactRational& b) { return a -= b; }
  friend ExactRational operator*(ExactRational a, const ExactRational& b) { return a *= b; }
  friend ExactRational operator/(ExactRational a, const ExactRational& b) { return a /= b; }
  friend ExactRational operator-(const ExactRational& a) {
    ExactRational r;
    r.value_ = -a.value_;
    return r;
  }

  friend bool operator==(const ExactRational& a, const ExactRational& b) {
    return a.value_ == b.value_;
  }
  friend bool operator<(const ExactRational& a, const ExactRational& b) { return a.value_ < b.value_; }
  friend bool operator<=(const ExactRational& a, const ExactRational& b) { return a.value_ <= b.value_; }
  friend bool operator>(const ExactRational& a, const ExactRational& b) { return a.value_ > b.value_; }
  friend bool operator>=(const ExactRational& a, const ExactRational& b) { return a.value_ >= b.value_; }

  friend std::ostream& operator<<(std::ostream& os, const ExactRational& r) {
    return os << r.to_string();
  }

 private:
  mpq_class value_{0};
};

// C(a, b) with the convention C(a, b) = 0 for b < 0 or b > a.
// Negative a throws std::invalid_argument.
BigInt binomial(std::int64_t a, std::int64_t b);

// (-1)^k as a small integer.
inline int parity_sign(std::int64_t k) { return (k % 2 == 0) ? 1 : -1; }

// Checks sum_k C(r,k) C(s,n-k) == C(r+s,n) by direct summation.
bool vandermonde_check(std::int64_t r, std::int64_t s, std::int64_t n);

// P(x) = sum_j a_j * C(x + j, j), an integer-valued polynomial written in
// the binomial basis.
class BinomialBasisPolynomial {
 public:
  BinomialBasisPolynomial() = default;
  explicit BinomialBasisPolynomial(std::vector<BigInt> coefficients)
      : coefficients_(std::move(coefficients)) {}

  const std::vector<BigInt>& coefficients() const { return coefficients_; }

  // Largest j with a_j != 0; nullopt for the zero polynomial.
  std::optional<std::size_t> degree() const;

  // Exact value at any integer x (negative x uses the polynomial extension
  // of C(x + j, j)).
  BigInt evaluate(std::int64_t x) const;

 private:
  std::vector<BigInt> coefficients_;
};

// sum_{i=0}^{N} (-1)^i C(N,i) P(i). Vanishes whenever deg P < N.
// Throws std::invalid_argument for N < 1.
BigInt alternating_sum(const BinomialBasisPolynomial& p, std::int64_t n);

inline std::string to_string(const BigInt& v) { return v.get_str(); }

}  // namespace blbetti

#endif  // BLBETTI_EXACT_MATH_HPP_
