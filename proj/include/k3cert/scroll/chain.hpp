#pragma once

#include "k3cert/errors.hpp"
#include "k3cert/exactalg/serialize.hpp"
#include "k3cert/exactalg/substitution.hpp"
#include "k3cert/linsys/linmap.hpp"

namespace k3cert::scroll {

/// The embeddings P1xP1 -> P1xP2 -> P5 fixing the standard quartic scroll R
/// inside the cubic Segre threefold T.
///
/// sigma_segre pulls back along the Segre map W_ij = Z_i U_j, sigma_conic
/// along the conic parametrization (U0,U1,U2) = (Y0^2, Y0 Y1, Y1^2), and F is
/// the conic equation cutting R out of T.
struct EmbeddingChain {
  Substitution sigma_segre;
  Substitution sigma_conic;
  Substitution sigma_scroll;  // sigma_conic o sigma_segre
  Poly F;
};

inline EmbeddingChain build_chain() {
  const auto& p5 = rings::P5();
  const auto& q3 = rings::Q3();
  const auto& q2 = rings::Q2();
  auto segre = Substitution::from_named(p5, q3,
                                        {{"W00", parse_expr(q3, "Z0*U0")},
                                         {"W01", parse_expr(q3, "Z0*U1")},
                                         {"W02", parse_expr(q3, "Z0*U2")},
                                         {"W10", parse_expr(q3, "Z1*U0")},
                                         {"W11", parse_expr(q3, "Z1*U1")},
                                         {"W12", parse_expr(q3, "Z1*U2")}});
  auto conic = Substitution::from_named(q3, q2,
                                        {{"Z0", parse_expr(q2, "X0")},
                                         {"Z1", parse_expr(q2, "X1")},
                                         {"U0", parse_expr(q2, "Y0^2")},
                                         {"U1", parse_expr(q2, "Y0*Y1")},
                                         {"U2", parse_expr(q2, "Y1^2")}});
  auto scroll = compose(conic, segre);
  return {std::move(segre), std::move(conic), std::move(scroll), parse_expr(q3, "U0*U2 - U1^2")};
}

/// The standard chain, built once.
inline const EmbeddingChain& standard_chain() {
  static const EmbeddingChain chain = build_chain();
  return chain;
}

/// Degree-d forms on P5 vanishing on the image of s: the kernel of the
/// induced map on the degree-d piece.
inline Subspace ideal_in_degree(const Substitution& s, int degree) {
  if (!same_ring(s.source(), rings::P5())) throw RingMismatch("ideal_in_degree: substitution must start at P5");
  return map_from_substitution(s, monomial_basis(rings::P5(), {degree})).kernel();
}

}  // namespace k3cert::scroll
