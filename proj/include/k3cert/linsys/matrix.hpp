#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "k3cert/errors.hpp"
#include "k3cert/exactalg/scalar.hpp"

namespace k3cert {

using Vector = std::vector<Scalar>;

/// Dense row-major matrix over Scalar.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar(1);
    return m;
  }

  /// Stacks equal-length vectors as rows; cols must be given for an empty list.
  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != cols) throw DegreeMismatch("Matrix::from_rows: ragged rows");
      for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Scalar> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  Vector row_vector(std::size_t r) const { return {row(r).begin(), row(r).end()}; }
  Vector column(std::size_t c) const {
    Vector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
  }

  bool is_zero() const {
    for (const auto& x : data_) {
      if (!x.is_zero()) return false;
    }
    return true;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    }
    return t;
  }

  Vector apply(std::span<const Scalar> x) const {
    if (x.size() != cols_) throw DegreeMismatch("Matrix::apply: dimension mismatch");
    Vector y(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
      Scalar acc(0);
      for (std::size_t c = 0; c < cols_; ++c) {
        if (!(*this)(r, c).is_zero() && !x[c].is_zero()) acc += (*this)(r, c) * x[c];
      }
      y[r] = acc;
    }
    return y;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DegreeMismatch("Matrix product: dimension mismatch");
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Scalar& aik = a(i, k);
        if (aik.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          if (!b(k, j).is_zero()) out(i, j) += aik * b(k, j);
        }
      }
    }
    return out;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

inline bool is_zero_vector(std::span<const Scalar> v) {
  for (const auto& x : v) {
    if (!x.is_zero()) return false;
  }
  return true;
}

}  // namespace k3cert
