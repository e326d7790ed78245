#pragma once

#include <cstdint>

#include "k3cert/errors.hpp"
#include "k3cert/exactalg/scalar.hpp"
#include "k3cert/rng.hpp"

namespace k3cert {

/// Nonzero rational with numerator in [-bound, bound] \ {0} and denominator
/// in [1, bound].
inline Scalar sample_nonzero(SplitMix64& rng, std::int64_t bound) {
  if (bound < 1) throw InvalidArgument("sample: bound must be at least 1");
  std::int64_t num = rng.between(-bound, bound - 1);
  if (num >= 0) ++num;
  return {Integer(num), Integer(rng.between(1, bound))};
}

/// As sample_nonzero, but zero with probability 1/(2 bound + 1).
inline Scalar sample_rational(SplitMix64& rng, std::int64_t bound) {
  if (bound < 1) throw InvalidArgument("sample: bound must be at least 1");
  const std::int64_t num = rng.between(-bound, bound);
  return {Integer(num), Integer(rng.between(1, bound))};
}

}  // namespace k3cert
