#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "k3cert/exactalg/scalar.hpp"
#include "k3cert/linsys/matrix.hpp"

namespace k3cert {

/// Row echelon form produced by fraction-free elimination.
struct IntegerEchelon {
  std::vector<std::vector<Integer>> rows;  // nonzero rows only, in pivot order
  std::vector<std::size_t> pivots;         // pivot column of each row
  std::size_t rank() const { return pivots.size(); }
};

namespace detail {

inline std::vector<std::vector<Integer>> integer_rows(const Matrix& m) {
  std::vector<std::vector<Integer>> out(m.rows(), std::vector<Integer>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Integer scale = 1;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (!m(r, c).is_zero()) scale = integer_lcm(scale, m(r, c).denominator());
    }
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (m(r, c).is_zero()) continue;
      out[r][c] = m(r, c).numerator() * (scale / m(r, c).denominator());
    }
  }
  return out;
}

}  // namespace detail

/// Bareiss elimination on the rows of m (each row first cleared of
/// denominators). Columns are scanned left to right and the topmost remaining
/// row with a nonzero entry becomes the pivot; there is no other pivot choice.
/// Every intermediate entry is a minor of the scaled input, so each division
/// by the previous pivot is exact.
inline IntegerEchelon fraction_free_echelon(const Matrix& m) {
  auto a = detail::integer_rows(m);
  const std::size_t nrows = a.size();
  const std::size_t ncols = m.cols();
  IntegerEchelon result;
  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < nrows; ++c) {
    std::size_t p = r;
    while (p < nrows && a[p][c] == 0) ++p;
    if (p == nrows) continue;
    std::swap(a[p], a[r]);
    const Integer& pivot = a[r][c];
    for (std::size_t i = r + 1; i < nrows; ++i) {
      const Integer lead = a[i][c];
      for (std::size_t j = c + 1; j < ncols; ++j) {
        Integer v = pivot * a[i][j] - lead * a[r][j];
        if (v != 0 && prev != 1) v /= prev;
        a[i][j] = std::move(v);
      }
      a[i][c] = 0;
    }
    prev = pivot;
    result.pivots.push_back(c);
    ++r;
  }
  a.resize(r);
  result.rows = std::move(a);
  return result;
}

inline std::size_t rank(const Matrix& m) { return fraction_free_echelon(m).rank(); }

/// Reduced row echelon form: nonzero rows only, pivots equal to one, zeros
/// above and below each pivot. Unique for a given row space.
inline Matrix rref(const Matrix& m, std::vector<std::size_t>* pivots_out = nullptr) {
  const IntegerEchelon ech = fraction_free_echelon(m);
  const std::size_t k = ech.rank();
  Matrix out(k, m.cols());
  for (std::size_t i = 0; i < k; ++i) {
    const Scalar pivot(ech.rows[i][ech.pivots[i]]);
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (ech.rows[i][c] != 0) out(i, c) = Scalar(ech.rows[i][c]) / pivot;
    }
  }
  // Back substitution, bottom pivot first.
  for (std::size_t i = k; i-- > 0;) {
    const std::size_t pc = ech.pivots[i];
    for (std::size_t above = 0; above < i; ++above) {
      const Scalar factor = out(above, pc);
      if (factor.is_zero()) continue;
      for (std::size_t c = pc; c < m.cols(); ++c) {
        if (!out(i, c).is_zero()) out(above, c) -= factor * out(i, c);
      }
    }
  }
  if (pivots_out != nullptr) *pivots_out = ech.pivots;
  return out;
}

/// Basis of {x : m x = 0}, one vector per free column, read off the RREF.
inline std::vector<Vector> kernel_basis(const Matrix& m) {
  std::vector<std::size_t> pivots;
  const Matrix r = rref(m, &pivots);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(m.cols());
    v[free] = Scalar(1);
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Determinant of a square matrix via Bareiss; the last pivot of the full
/// elimination equals the determinant of the denominator-cleared matrix.
inline Scalar determinant(const Matrix& m) {
  if (m.rows() != m.cols()) throw DegreeMismatch("determinant: matrix not square");
  const std::size_t n = m.rows();
  if (n == 0) return Scalar(1);
  auto a = detail::integer_rows(m);
  Scalar scale(1);
  for (std::size_t r = 0; r < n; ++r) {
    Integer row_scale = 1;
    for (std::size_t c = 0; c < n; ++c) {
      if (!m(r, c).is_zero()) row_scale = integer_lcm(row_scale, m(r, c).denominator());
    }
    scale *= Scalar(row_scale);
  }
  int sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a[p][k] == 0) ++p;
    if (p == n) return Scalar(0);
    if (p != k) {
      std::swap(a[p], a[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = a[k][k] * a[i][j] - a[i][k] * a[k][j];
        if (prev != 1) v /= prev;
        a[i][j] = std::move(v);
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return Scalar(Integer(a[n - 1][n - 1] * sign)) / scale;
}

}  // namespace k3cert
