#pragma once

#include <optional>

#include "k3cert/errors.hpp"
#include "k3cert/gitcurve/slice.hpp"

namespace k3cert::gitcurve {

struct Normalized {
  CurveCoeffs coeffs;  // on the slice with C211 = C311 = C102 = 1
  GroupElem witness;   // act(witness, input) == coeffs
};

/// Torus element taking a slice point to C211 = C311 = C102 = 1. The torus
/// scales these by a^2 u, a^3 u and a v, so a = C211/C311, u = 1/(C211 a^2),
/// v = 1/(C102 a) is the unique solution.
inline Normalized torus_normalize(const CurveCoeffs& c) {
  const Scalar& c211 = c.at({2, 1, 1});
  const Scalar& c311 = c.at({3, 1, 1});
  const Scalar& c102 = c.at({1, 0, 2});
  if (c211.is_zero() || c311.is_zero() || c102.is_zero()) {
    throw Degenerate("torus_normalize: C211, C311 and C102 must be nonzero");
  }
  const Scalar a = c211 / c311;
  const GroupElem t = torus_elem(a, (c211 * a * a).inverse(), (c102 * a).inverse());
  return {act(t, c), t};
}

/// Slice normalization followed by torus normalization.
inline Normalized normal_form(const CurveCoeffs& c) {
  const SliceResult s = normalize_slice(c);
  const Normalized n = torus_normalize(s.coeffs);
  return {n.coeffs, compose(n.witness, shift_elem(s.lambda))};
}

struct OrbitResult {
  bool same = false;
  std::optional<GroupElem> witness;  // act(*witness, c1) == c2 when same
};

/// Decides whether c2 lies in the orbit of c1 by comparing normal forms,
/// first of c2 itself and then of its flip.
inline OrbitResult same_orbit(const CurveCoeffs& c1, const CurveCoeffs& c2) {
  const Normalized n1 = normal_form(c1);
  const Normalized n2 = normal_form(c2);
  if (n1.coeffs == n2.coeffs) return {true, compose(inverse(n2.witness), n1.witness)};
  const Normalized f = normal_form(act(flip_elem(), c2));
  if (n1.coeffs == f.coeffs) {
    const GroupElem g2 = compose(f.witness, flip_elem());
    return {true, compose(inverse(g2), n1.witness)};
  }
  return {false, std::nullopt};
}

}  // namespace k3cert::gitcurve
