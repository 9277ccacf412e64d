#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "juggle/errors.hpp"

namespace juggle {

/// Small dense row-major matrix. Only what the counting code needs:
/// products, identity and integer powers.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T(0))
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  Matrix(std::initializer_list<std::initializer_list<T>> init)
      : rows_(init.size()), cols_(init.size() ? init.begin()->size() : 0) {
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw ParameterError("ragged matrix initializer");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix result(n, n);
    for (std::size_t i = 0; i < n; ++i) result(i, i) = T(1);
    return result;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  friend Matrix operator*(const Matrix& lhs, const Matrix& rhs) {
    if (lhs.cols_ != rhs.rows_) throw ParameterError("matrix dimension mismatch");
    Matrix result(lhs.rows_, rhs.cols_);
    for (std::size_t i = 0; i < lhs.rows_; ++i) {
      for (std::size_t k = 0; k < lhs.cols_; ++k) {
        const T& a = lhs(i, k);
        if (a == 0) continue;
        for (std::size_t j = 0; j < rhs.cols_; ++j) result(i, j) += a * rhs(k, j);
      }
    }
    return result;
  }

  friend std::vector<T> operator*(const Matrix& lhs, const std::vector<T>& v) {
    if (lhs.cols_ != v.size()) throw ParameterError("matrix/vector dimension mismatch");
    std::vector<T> result(lhs.rows_, T(0));
    for (std::size_t i = 0; i < lhs.rows_; ++i)
      for (std::size_t j = 0; j < lhs.cols_; ++j) result[i] += lhs(i, j) * v[j];
    return result;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

/// Matrix power by repeated squaring.
template <class T>
Matrix<T> power(Matrix<T> base, unsigned long long exponent) {
  if (!base.square()) throw ParameterError("power of a non-square matrix");
  Matrix<T> result = Matrix<T>::identity(base.rows());
  while (exponent > 0) {
    if (exponent & 1ULL) result = result * base;
    exponent >>= 1;
    if (exponent > 0) base = base * base;
  }
  return result;
}

}  // namespace juggle
