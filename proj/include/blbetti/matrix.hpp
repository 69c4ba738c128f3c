// Dense row-major matrix over an exact ring (BigInt or ExactRational).
#ifndef BLBETTI_MATRIX_HPP_
#define BLBETTI_MATRIX_HPP_

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "blbetti/exact_math.hpp"

namespace blbetti {

template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

  static Matrix identity(std::size_t size) {
    Matrix m(size, size);
    for (std::size_t i = 0; i < size; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("Matrix: shape mismatch in product");
    Matrix out(a.rows_, b.cols_);
    for (std::size_t r = 0; r < a.rows_; ++r) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& left = a(r, k);
        if (left == 0) continue;
        for (std::size_t c = 0; c < b.cols_; ++c) {
          if (b(k, c) == 0) continue;
          out(r, c) += left * b(k, c);
        }
      }
    }
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  bool is_identity() const { return *this == identity(rows_) && rows_ == cols_; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<BigInt>;
using RationalMatrix = Matrix<ExactRational>;

inline RationalMatrix to_rational(const IntMatrix& m) {
  RationalMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = ExactRational(m(r, c));
  return out;
}

// Column product M * x.
template <typename T>
std::vector<T> multiply(const Matrix<T>& m, std::span<const T> x) {
  if (m.cols() != x.size()) throw std::invalid_argument("Matrix: shape mismatch in M*x");
  std::vector<T> out(m.rows(), T(0));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out[r] += m(r, c) * x[c];
  return out;
}

// Row product x * M.
template <typename T>
std::vector<T> multiply(std::span<const T> x, const Matrix<T>& m) {
  if (m.rows() != x.size()) throw std::invalid_argument("Matrix: shape mismatch in x*M");
  std::vector<T> out(m.cols(), T(0));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (x[r] == 0) continue;
    for (std::size_t c = 0; c < m.cols(); ++c) out[c] += x[r] * m(r, c);
  }
  return out;
}

}  // namespace blbetti

#endif  // BLBETTI_MATRIX_HPP_
