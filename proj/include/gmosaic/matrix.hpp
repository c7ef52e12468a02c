#pragma once

#include <cstddef>
#include <istream>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "gmosaic/count.hpp"
#include "gmosaic/errors.hpp"

namespace gmosaic {

/// Dense square row-major matrix of counts. Indices are 0-based.
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}

  static Matrix identity(std::size_t dim) {
    Matrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t dim() const { return dim_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * dim_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * dim_ + j]; }

  std::span<T> row(std::size_t i) { return {data_.data() + i * dim_, dim_}; }
  std::span<const T> row(std::size_t i) const { return {data_.data() + i * dim_, dim_}; }

  /// The dim/2 quarter at block position (qi, qj), qi and qj in {0, 1}.
  Matrix quadrant(int qi, int qj) const {
    const std::size_t h = dim_ / 2;
    Matrix q(h);
    for (std::size_t i = 0; i < h; ++i) {
      for (std::size_t j = 0; j < h; ++j) q(i, j) = (*this)(qi * h + i, qj * h + j);
    }
    return q;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<T> data_;
};

template <typename T>
Matrix<T> operator+(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.dim() != b.dim()) throw DomainError("matrix sum of mismatched dimensions");
  Matrix<T> c(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) c(i, j) = a(i, j) + b(i, j);
  }
  return c;
}

template <typename T>
Matrix<T> operator*(const T& s, const Matrix<T>& a) {
  Matrix<T> c(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) c(i, j) = s * a(i, j);
  }
  return c;
}

template <typename T>
Count entry_sum(const Matrix<T>& a) {
  Count s = 0;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (const T& v : a.row(i)) s += to_count(v);
  }
  return s;
}

template <typename T>
Matrix<Count> to_count_matrix(const Matrix<T>& a) {
  Matrix<Count> c(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) c(i, j) = to_count(a(i, j));
  }
  return c;
}

/// Dump format: "<dim>" then dim lines of dim space-separated decimals.
template <typename T>
void write_matrix_dump(std::ostream& out, const Matrix<T>& a) {
  out << a.dim() << '\n';
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) {
      if (j) out << ' ';
      out << to_decimal(a(i, j));
    }
    out << '\n';
  }
}

Matrix<Count> read_matrix_dump(std::istream& in);

}  // namespace gmosaic
