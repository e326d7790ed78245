#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "k3cert/errors.hpp"
#include "k3cert/exactalg/substitution.hpp"
#include "k3cert/linsys/elimination.hpp"
#include "k3cert/linsys/graded_piece.hpp"
#include "k3cert/linsys/subspace.hpp"

namespace k3cert {

/// Linear map between graded pieces. Column j holds the coordinates of the
/// image of the j-th source basis monomial.
class LinMapQ {
 public:
  LinMapQ(GradedPiece source, GradedPiece target, Matrix matrix)
      : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
    if (matrix_.rows() != target_.dim() || matrix_.cols() != source_.dim()) {
      throw DegreeMismatch("LinMapQ: matrix shape does not match pieces");
    }
  }

  static LinMapQ identity(const GradedPiece& piece) { return {piece, piece, Matrix::identity(piece.dim())}; }

  const GradedPiece& source() const { return source_; }
  const GradedPiece& target() const { return target_; }
  const Matrix& matrix() const { return matrix_; }

  Vector apply(std::span<const Scalar> x) const { return matrix_.apply(x); }
  Poly apply(const Poly& p) const { return target_.to_poly(matrix_.apply(source_.coordinates(p))); }

  std::size_t rank() const { return k3cert::rank(matrix_); }
  bool is_injective() const { return rank() == source_.dim(); }
  bool is_surjective() const { return rank() == target_.dim(); }

  Subspace kernel() const { return Subspace::span(source_, kernel_basis(matrix_)); }
  Subspace image() const { return Subspace::span(target_, columns()); }

  /// Image of a subspace of the source.
  Subspace image_of(const Subspace& s) const {
    if (!(s.ambient() == source_)) throw AmbientMismatch("LinMapQ::image_of: subspace not in source piece");
    std::vector<Vector> images;
    for (std::size_t i = 0; i < s.dim(); ++i) images.push_back(matrix_.apply(s.rows().row(i)));
    return Subspace::span(target_, images);
  }

 private:
  // Columns of the matrix as vectors; their span is the image.
  std::vector<Vector> columns() const {
    std::vector<Vector> cols;
    for (std::size_t c = 0; c < matrix_.cols(); ++c) cols.push_back(matrix_.column(c));
    return cols;
  }

  GradedPiece source_;
  GradedPiece target_;
  Matrix matrix_;
};

inline std::size_t rank(const LinMapQ& m) { return m.rank(); }
inline Subspace kernel(const LinMapQ& m) { return m.kernel(); }
inline Subspace image(const LinMapQ& m) { return m.image(); }

/// outer o inner.
inline LinMapQ compose(const LinMapQ& outer, const LinMapQ& inner) {
  if (!(inner.target() == outer.source())) throw DegreeMismatch("compose: maps are not composable");
  return {inner.source(), outer.target(), outer.matrix() * inner.matrix()};
}

/// Matrix of the map induced by s on the graded piece `source`; the target
/// is the piece of the mapped multidegree.
inline LinMapQ map_from_substitution(const Substitution& s, const GradedPiece& source) {
  if (!same_ring(source.ring(), s.source())) {
    throw DegreeMismatch("map_from_substitution: piece " + source.label() + " is not in " + s.source()->name());
  }
  GradedPiece target(s.target(), s.map_multidegree(source.multidegree()));
  Matrix m(target.dim(), source.dim());
  for (std::size_t j = 0; j < source.dim(); ++j) {
    const Poly img = s.apply(Poly::monomial(source.ring(), source.basis()[j]));
    for (const auto& [mono, c] : img.terms()) m(target.index_of(mono), j) = c;
  }
  return {source, std::move(target), std::move(m)};
}

/// Map p -> g*p from `source` into the piece of degree deg(source) + deg(g).
/// The zero polynomial has no degree; it is treated as degree zero unless
/// `zero_degree` says otherwise, giving the zero map.
inline LinMapQ multiplication_map(const Poly& g, const GradedPiece& source,
                                  std::optional<Multidegree> zero_degree = std::nullopt) {
  if (!same_ring(g.ring(), source.ring())) throw RingMismatch("multiplication_map: ring mismatch");
  Multidegree shift;
  if (g.is_zero()) {
    shift = zero_degree.value_or(Multidegree(source.ring()->num_blocks(), 0));
  } else {
    const auto d = g.multidegree();
    if (!d) throw InhomogeneousImage("multiplication_map: multiplier is inhomogeneous");
    shift = *d;
  }
  Multidegree out = source.multidegree();
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += shift.at(i);
  GradedPiece target(source.ring(), out);
  Matrix m(target.dim(), source.dim());
  for (std::size_t j = 0; j < source.dim(); ++j) {
    const Poly img = g * Poly::monomial(source.ring(), source.basis()[j]);
    for (const auto& [mono, c] : img.terms()) m(target.index_of(mono), j) = c;
  }
  return {source, std::move(target), std::move(m)};
}

}  // namespace k3cert
