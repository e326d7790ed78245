#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "k3cert/errors.hpp"
#include "k3cert/gitcurve/invariants.hpp"
#include "k3cert/linsys/elimination.hpp"

namespace k3cert::gitcurve {

using IntMatrix = std::vector<std::vector<Integer>>;

namespace detail {

struct ExtGcd {
  Integer g, s, t;  // s x + t y = g >= 0
};

inline ExtGcd ext_gcd(const Integer& x, const Integer& y) {
  Integer r0 = x, r1 = y, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (r1 != 0) {
    const Integer q = r0 / r1;
    Integer tmp = r0 - q * r1;
    r0 = std::move(r1);
    r1 = std::move(tmp);
    tmp = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(tmp);
    tmp = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(tmp);
  }
  if (r0 < 0) return {-r0, -s0, -t0};
  return {r0, s0, t0};
}

// Floor division for the reduction step; boost's "/" truncates toward zero.
inline Integer floor_div(const Integer& x, const Integer& d) {
  Integer q = x / d;
  if ((x % d != 0) && ((x < 0) != (d < 0))) q -= 1;
  return q;
}

}  // namespace detail

/// Row Hermite normal form, in place, using unimodular row operations only.
/// Pivots are sought in columns [0, pivot_cols) left to right; each pivot is
/// positive and the entries above it are reduced into [0, pivot). Rows are
/// permuted so nonzero rows (on those columns) come first. Returns the rank.
inline std::size_t hermite_normal_form(IntMatrix& m, std::size_t pivot_cols) {
  const std::size_t rows = m.size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < pivot_cols && r < rows; ++c) {
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (m[i][c] == 0) continue;
      if (m[r][c] == 0) {
        std::swap(m[r], m[i]);
        continue;
      }
      const auto [g, s, t] = detail::ext_gcd(m[r][c], m[i][c]);
      const Integer x = m[r][c] / g;
      const Integer y = m[i][c] / g;
      for (std::size_t j = 0; j < m[r].size(); ++j) {
        const Integer top = s * m[r][j] + t * m[i][j];
        const Integer bottom = x * m[i][j] - y * m[r][j];
        m[r][j] = top;
        m[i][j] = bottom;
      }
    }
    if (m[r][c] == 0) continue;
    if (m[r][c] < 0) {
      for (auto& x : m[r]) x = -x;
    }
    for (std::size_t i = 0; i < r; ++i) {
      const Integer q = detail::floor_div(m[i][c], m[r][c]);
      if (q == 0) continue;
      for (std::size_t j = 0; j < m[i].size(); ++j) m[i][j] -= q * m[r][j];
    }
    ++r;
  }
  return r;
}

inline std::size_t hermite_normal_form(IntMatrix& m) { return m.empty() ? 0 : hermite_normal_form(m, m[0].size()); }

/// Basis of {x in Z^n : A x = 0} in Hermite normal form. Row-reducing
/// [A^T | I] keeps the identity block unimodular, so the rows whose A^T part
/// vanishes form a basis of the integer kernel.
inline IntMatrix integer_kernel(const IntMatrix& a) {
  const std::size_t m = a.size();
  const std::size_t n = m == 0 ? 0 : a[0].size();
  IntMatrix aug(n, std::vector<Integer>(m + n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) aug[i][j] = a[j][i];
    aug[i][m + i] = 1;
  }
  const std::size_t rank = hermite_normal_form(aug, m);
  IntMatrix kernel;
  for (std::size_t i = rank; i < n; ++i) kernel.emplace_back(aug[i].begin() + static_cast<std::ptrdiff_t>(m), aug[i].end());
  hermite_normal_form(kernel);
  return kernel;
}

/// Weights of the (a, u, v) torus on the nine slice coefficients.
inline IntMatrix weight_matrix() {
  IntMatrix w(3, std::vector<Integer>(9));
  static constexpr int u_weight[3] = {0, 1, 2};   // by j
  static constexpr int v_weight[3] = {1, 0, -1};  // by j
  for (std::size_t p = 0; p < 9; ++p) {
    const auto& [i, j, k] = kCoeffOrder[kSlicePositions[p]];
    w[0][p] = i;
    w[1][p] = u_weight[j];
    w[2][p] = v_weight[j];
  }
  return w;
}

inline bool in_kernel(const IntMatrix& a, const ExponentVector& e) {
  for (const auto& row : a) {
    Integer dot = 0;
    for (std::size_t p = 0; p < 9; ++p) dot += row[p] * e[p];
    if (dot != 0) return false;
  }
  return true;
}

struct ExponentLatticeReport {
  IntMatrix weights;      // 3 x 9
  IntMatrix kernel;       // HNF basis, kernel_rank x 9
  std::vector<std::string> names;
  std::vector<ExponentVector> exponents;
  std::vector<bool> in_kernel;
  IntMatrix coordinates;  // generators in the kernel basis
  std::size_t kernel_rank = 0;
  Integer index = 0;      // [kernel : generated sublattice]; 0 if not of full rank
};

inline ExponentLatticeReport exponent_lattice_report() {
  ExponentLatticeReport r;
  r.weights = weight_matrix();
  r.kernel = integer_kernel(r.weights);
  r.kernel_rank = r.kernel.size();
  for (const auto& [name, e] : torus_monomials()) {
    r.names.push_back(name);
    r.exponents.push_back(e);
    r.in_kernel.push_back(gitcurve::in_kernel(r.weights, e));
  }

  // Express each generator through the echelon kernel basis, pivot by pivot.
  std::vector<std::size_t> pivots;
  for (const auto& row : r.kernel) {
    std::size_t p = 0;
    while (row[p] == 0) ++p;
    pivots.push_back(p);
  }
  bool all_members = true;
  for (const auto& e : r.exponents) {
    std::vector<Integer> rem(e.begin(), e.end());
    std::vector<Integer> x(r.kernel_rank);
    for (std::size_t i = 0; i < r.kernel_rank; ++i) {
      const Integer& pivot = r.kernel[i][pivots[i]];
      if (rem[pivots[i]] % pivot != 0) all_members = false;
      x[i] = rem[pivots[i]] / pivot;
      for (std::size_t p = 0; p < 9; ++p) rem[p] -= x[i] * r.kernel[i][p];
    }
    for (const auto& v : rem) all_members = all_members && v == 0;
    r.coordinates.push_back(std::move(x));
  }
  if (all_members && r.coordinates.size() == r.kernel_rank) {
    Matrix m(r.kernel_rank, r.kernel_rank);
    for (std::size_t i = 0; i < r.kernel_rank; ++i) {
      for (std::size_t j = 0; j < r.kernel_rank; ++j) m(i, j) = Scalar(r.coordinates[i][j]);
    }
    const Scalar det = determinant(m);
    r.index = det.numerator() < 0 ? Integer(-det.numerator()) : det.numerator();
  }
  return r;
}

}  // namespace k3cert::gitcurve
