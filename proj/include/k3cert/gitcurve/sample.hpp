#pragma once

#include <cstdint>

#include "k3cert/errors.hpp"
#include "k3cert/gitcurve/group.hpp"
#include "k3cert/rng.hpp"
#include "k3cert/sampling.hpp"

namespace k3cert::gitcurve {

inline CurveCoeffs sample_generic(SplitMix64& rng, std::int64_t bound) {
  CurveCoeffs c;
  for (std::size_t p = 0; p < 10; ++p) c[p] = sample_nonzero(rng, bound);
  return c;
}

inline CurveCoeffs sample_generic(std::uint64_t seed, std::int64_t bound) {
  SplitMix64 rng(seed);
  return sample_generic(rng, bound);
}

/// Random group element: any shift (zero allowed), nonzero torus entries,
/// fair flip.
inline GroupElem sample_group(SplitMix64& rng, std::int64_t bound) {
  GroupElem g;
  g.lambda = rng.below(8) == 0 ? Scalar(0) : sample_nonzero(rng, bound);
  g.a = sample_nonzero(rng, bound);
  g.u = sample_nonzero(rng, bound);
  g.v = sample_nonzero(rng, bound);
  g.flip = rng.coin();
  return g;
}

}  // namespace k3cert::gitcurve
