#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "k3cert/errors.hpp"
#include "k3cert/linsys/elimination.hpp"
#include "k3cert/linsys/graded_piece.hpp"

namespace k3cert {

/// Linear subspace of a graded piece, stored by its reduced row echelon
/// basis. The RREF is canonical, so equality is a structural comparison.
class Subspace {
 public:
  explicit Subspace(GradedPiece ambient) : ambient_(std::move(ambient)), rows_(0, ambient_.dim()) {}

  /// Span of arbitrary (possibly dependent) coordinate vectors.
  static Subspace span(GradedPiece ambient, const std::vector<Vector>& vectors) {
    const std::size_t n = ambient.dim();
    Subspace s(std::move(ambient));
    s.rows_ = rref(Matrix::from_rows(vectors, n), &s.pivots_);
    return s;
  }

  static Subspace span(GradedPiece ambient, const std::vector<Poly>& polys) {
    std::vector<Vector> vectors;
    vectors.reserve(polys.size());
    for (const auto& p : polys) vectors.push_back(ambient.coordinates(p));
    return span(std::move(ambient), vectors);
  }

  static Subspace whole(GradedPiece ambient) {
    const std::size_t n = ambient.dim();
    Subspace s(std::move(ambient));
    s.rows_ = Matrix::identity(n);
    for (std::size_t i = 0; i < n; ++i) s.pivots_.push_back(i);
    return s;
  }

  const GradedPiece& ambient() const { return ambient_; }
  const Matrix& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  std::size_t dim() const { return rows_.rows(); }

  std::vector<Vector> basis() const {
    std::vector<Vector> out;
    for (std::size_t i = 0; i < rows_.rows(); ++i) out.push_back(rows_.row_vector(i));
    return out;
  }

  std::vector<Poly> basis_polys() const {
    std::vector<Poly> out;
    for (std::size_t i = 0; i < rows_.rows(); ++i) out.push_back(ambient_.to_poly(rows_.row(i)));
    return out;
  }

  /// Reduces v against the echelon rows; zero remainder means membership.
  bool contains(std::span<const Scalar> v) const {
    if (v.size() != ambient_.dim()) throw AmbientMismatch("Subspace::contains: vector has wrong length");
    Vector rem(v.begin(), v.end());
    for (std::size_t i = 0; i < pivots_.size(); ++i) {
      const Scalar factor = rem[pivots_[i]];
      if (factor.is_zero()) continue;
      for (std::size_t c = pivots_[i]; c < rem.size(); ++c) {
        if (!rows_(i, c).is_zero()) rem[c] -= factor * rows_(i, c);
      }
    }
    return is_zero_vector(rem);
  }

  bool contains(const Poly& p) const { return contains(ambient_.coordinates(p)); }

  bool contains(const Subspace& other) const {
    check_ambient(other);
    for (std::size_t i = 0; i < other.rows_.rows(); ++i) {
      if (!contains(other.rows_.row(i))) return false;
    }
    return true;
  }

  void check_ambient(const Subspace& other) const {
    if (!(ambient_ == other.ambient_)) {
      throw AmbientMismatch("Subspace: ambient " + ambient_.label() + " vs " + other.ambient_.label());
    }
  }

 private:
  GradedPiece ambient_;
  Matrix rows_;
  std::vector<std::size_t> pivots_;
};

/// Structural comparison of canonical echelon forms. Never a dimension or
/// containment shortcut.
inline bool subspace_equal(const Subspace& a, const Subspace& b) {
  a.check_ambient(b);
  return a.rows() == b.rows();
}

inline bool member(const Poly& p, const Subspace& s) { return s.contains(p); }

}  // namespace k3cert
