#pragma once

#include <array>
#include <cstdint>
#include <optional>

#include "k3cert/linsys/subspace.hpp"
#include "k3cert/sampling.hpp"

namespace k3cert::scroll {

struct PsiSample {
  std::array<Poly, 3> psi;
  std::size_t resamples = 0;  // dependent triples drawn and discarded
};

/// Three independent random (1,1) forms on F0. With a point of P1xP1 given
/// as (A0, A1, B0, B1), each form is projected onto the hyperplane of forms
/// vanishing there, which plants a base point.
inline PsiSample sample_psi(SplitMix64& rng, std::int64_t bound,
                            const std::optional<std::array<Scalar, 4>>& base_point = std::nullopt) {
  const GradedPiece piece(rings::F0(), {1, 1});  // A0B0, A0B1, A1B0, A1B1
  PsiSample out{{Poly(rings::F0()), Poly(rings::F0()), Poly(rings::F0())}, 0};
  for (;;) {
    for (auto& form : out.psi) {
      Vector v(4);
      for (auto& x : v) x = sample_rational(rng, bound);
      if (base_point) {
        const auto& p = *base_point;
        const Vector e{p[0] * p[2], p[0] * p[3], p[1] * p[2], p[1] * p[3]};
        Scalar ve(0);
        Scalar ee(0);
        for (std::size_t i = 0; i < 4; ++i) {
          ve += v[i] * e[i];
          ee += e[i] * e[i];
        }
        for (std::size_t i = 0; i < 4; ++i) v[i] -= ve / ee * e[i];
      }
      form = piece.to_poly(v);
    }
    if (Subspace::span(piece, std::vector<Poly>(out.psi.begin(), out.psi.end())).dim() == 3) return out;
    ++out.resamples;
  }
}

/// Random point of P1xP1 with both factors normalized to a nonzero first
/// nonzero coordinate.
inline std::array<Scalar, 4> sample_point(SplitMix64& rng, std::int64_t bound) {
  std::array<Scalar, 4> p;
  for (std::size_t f = 0; f < 2; ++f) {
    do {
      p[2 * f] = sample_rational(rng, bound);
      p[2 * f + 1] = sample_rational(rng, bound);
    } while (p[2 * f].is_zero() && p[2 * f + 1].is_zero());
  }
  return p;
}

}  // namespace k3cert::scroll
