#pragma once

#include "k3cert/errors.hpp"
#include "k3cert/gitcurve/group.hpp"

namespace k3cert::gitcurve {

inline constexpr CoeffIndex kC011{0, 1, 1};
inline constexpr CoeffIndex kC111{1, 1, 1};

struct SliceResult {
  CurveCoeffs coeffs;  // C111 = 0
  Scalar lambda;       // act(shift_elem(lambda), input) == coeffs
};

/// The shift sends C111 to C111 + 3 lambda C011, so lambda = -C111/(3 C011)
/// clears it.
inline SliceResult normalize_slice(const CurveCoeffs& c) {
  if (c.at(kC011).is_zero()) throw Degenerate("normalize_slice: C011 = 0");
  const Scalar lambda = -c.at(kC111) / (Scalar(3) * c.at(kC011));
  return {act(shift_elem(lambda), c), lambda};
}

inline bool on_slice(const CurveCoeffs& c) { return c.at(kC111).is_zero(); }

}  // namespace k3cert::gitcurve
