#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "k3cert/errors.hpp"
#include "k3cert/linsys/linmap.hpp"
#include "k3cert/scroll/chain.hpp"

namespace k3cert::scroll {

struct PiFactorizationReport {
  bool holds = false;
  std::size_t dim_IR3 = 0;
  std::size_t dim_image = 0;         // dim pi(I_R(3))
  std::size_t dim_factor_piece = 0;  // dim factor * Q3(3,1)
  std::size_t dim_kernel = 0;        // dim of the kernel of pi on I_R(3)
  Subspace image;                    // pi(I_R(3)) inside Q3(3,3)
  Subspace factor_piece;             // factor * Q3(3,1) inside Q3(3,3)
};

/// Compares pi(I_R(3)) with factor * Q3(3,1) as canonical subspaces of the
/// (3,3) piece; pi is the Segre pullback of cubics. The standard check uses
/// factor = chain.F.
inline PiFactorizationReport verify_pi_factorization(const EmbeddingChain& chain, const Poly& factor) {
  const GradedPiece cubics = monomial_basis(rings::P5(), {3});
  const Subspace ideal = map_from_substitution(chain.sigma_scroll, cubics).kernel();
  const LinMapQ pi = map_from_substitution(chain.sigma_segre, cubics);
  Subspace img = pi.image_of(ideal);
  Subspace fpiece = multiplication_map(factor, monomial_basis(rings::Q3(), {3, 1})).image();
  const bool same_ambient = img.ambient() == fpiece.ambient();
  PiFactorizationReport report{
      .holds = same_ambient && subspace_equal(img, fpiece),
      .dim_IR3 = ideal.dim(),
      .dim_image = img.dim(),
      .dim_factor_piece = fpiece.dim(),
      .dim_kernel = ideal.dim() - img.dim(),
      .image = std::move(img),
      .factor_piece = std::move(fpiece),
  };
  return report;
}

inline PiFactorizationReport verify_pi_factorization(const EmbeddingChain& chain = standard_chain()) {
  return verify_pi_factorization(chain, chain.F);
}

/// Image of a cubic c containing R in the (3,2) piece of P1xP1:
/// sigma_conic(sigma_segre(c) / F). Throws NotInIdeal when F does not divide
/// the Segre pullback.
inline Poly fibration_image(const EmbeddingChain& chain, const Poly& c) {
  if (!same_ring(c.ring(), rings::P5())) throw RingMismatch("fibration_image: cubic must live on P5");
  if (!c.is_zero() && c.multidegree() != Multidegree{3}) {
    throw DegreeMismatch("fibration_image: expected a homogeneous cubic");
  }
  const Poly pulled = chain.sigma_segre.apply(c);
  Poly quotient(rings::Q3());
  try {
    quotient = exact_divide(pulled, chain.F);
  } catch (const NotDivisible&) {
    throw NotInIdeal("fibration_image: cubic does not contain the scroll");
  }
  return chain.sigma_conic.apply(quotient);
}

inline Poly fibration_image(const Poly& c) { return fibration_image(standard_chain(), c); }

struct FibrationCertificate {
  std::size_t dim_IR3 = 0;
  std::size_t dim_IT3 = 0;
  std::size_t dim_image = 0;
  std::size_t fiber_projective_dim = 0;
  std::size_t base_projective_dim = 0;
  bool factorization_holds = false;
  bool surjective = false;
  bool linear = false;
  bool kernel_is_IT3 = false;
  Matrix matrix;  // columns: images of the echelon basis of I_R(3) in Q2(3,2)

  bool holds() const {
    return factorization_holds && surjective && linear && kernel_is_IT3 && dim_IR3 == dim_IT3 + dim_image &&
           fiber_projective_dim == dim_IT3;
  }
};

/// Certifies, at the fixed scroll, that I_R(3) -> Q2(3,2) is a linear
/// surjection whose kernel is exactly I_T(3).
inline FibrationCertificate fibration_certificate(const EmbeddingChain& chain = standard_chain()) {
  const GradedPiece cubics = monomial_basis(rings::P5(), {3});
  const GradedPiece target = monomial_basis(rings::Q2(), {3, 2});
  const Subspace ideal_R = map_from_substitution(chain.sigma_scroll, cubics).kernel();
  const Subspace ideal_T = map_from_substitution(chain.sigma_segre, cubics).kernel();
  const auto basis = ideal_R.basis_polys();

  FibrationCertificate cert;
  cert.dim_IR3 = ideal_R.dim();
  cert.dim_IT3 = ideal_T.dim();
  cert.factorization_holds = verify_pi_factorization(chain).holds;

  std::vector<Poly> images;
  images.reserve(basis.size());
  for (const auto& b : basis) images.push_back(fibration_image(chain, b));

  cert.matrix = Matrix(target.dim(), basis.size());
  for (std::size_t j = 0; j < images.size(); ++j) {
    const Vector col = target.coordinates(images[j]);
    for (std::size_t i = 0; i < col.size(); ++i) cert.matrix(i, j) = col[i];
  }

  // Linearity on neighbouring basis pairs with distinct weights.
  cert.linear = true;
  for (std::size_t i = 0; i + 1 < basis.size(); ++i) {
    const Scalar w(static_cast<long>(i) + 2);
    const Poly lhs = fibration_image(chain, basis[i] + w * basis[i + 1]);
    if (lhs != images[i] + w * images[i + 1]) cert.linear = false;
  }

  const std::size_t r = rank(cert.matrix);
  cert.dim_image = r;
  cert.surjective = r == target.dim();

  // Kernel vectors are coordinates against the echelon basis of I_R(3);
  // translate them back into cubics before comparing with I_T(3).
  std::vector<Vector> kernel_cubics;
  for (const auto& x : kernel_basis(cert.matrix)) {
    Vector v(cubics.dim());
    for (std::size_t j = 0; j < x.size(); ++j) {
      if (x[j].is_zero()) continue;
      for (std::size_t c = 0; c < v.size(); ++c) {
        if (!ideal_R.rows()(j, c).is_zero()) v[c] += x[j] * ideal_R.rows()(j, c);
      }
    }
    kernel_cubics.push_back(std::move(v));
  }
  const Subspace kernel = Subspace::span(cubics, kernel_cubics);
  cert.kernel_is_IT3 = subspace_equal(kernel, ideal_T);
  cert.fiber_projective_dim = kernel.dim();
  cert.base_projective_dim = r == 0 ? 0 : r - 1;
  return cert;
}

}  // namespace k3cert::scroll
