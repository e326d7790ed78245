#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

#include "k3cert/errors.hpp"
#include "k3cert/exactalg/poly.hpp"

namespace k3cert::gitcurve {

/// Coefficient label (i, j, k): i is the exponent of X1, (j, k) those of
/// (Y0, Y1). The monomial is X0^(3-i) X1^i Y0^j Y1^k.
struct CoeffIndex {
  int i;
  int j;
  int k;
  friend bool operator==(const CoeffIndex&, const CoeffIndex&) = default;
};

inline std::string to_string(const CoeffIndex& idx) {
  return std::to_string(idx.i) + std::to_string(idx.j) + std::to_string(idx.k);
}

/// Storage and serialization order.
inline constexpr std::array<CoeffIndex, 10> kCoeffOrder{{
    {0, 1, 1}, {1, 2, 0}, {1, 1, 1}, {1, 0, 2}, {2, 2, 0},
    {2, 1, 1}, {2, 0, 2}, {3, 2, 0}, {3, 1, 1}, {3, 0, 2},
}};

/// The nine coefficients left on the slice C111 = 0, as positions into
/// kCoeffOrder. Exponent vectors of monomial invariants use this order.
inline constexpr std::array<std::size_t, 9> kSlicePositions{0, 1, 3, 4, 5, 6, 7, 8, 9};

inline constexpr std::size_t position_of(CoeffIndex idx) {
  for (std::size_t p = 0; p < kCoeffOrder.size(); ++p) {
    if (kCoeffOrder[p] == idx) return p;
  }
  return kCoeffOrder.size();
}

/// A (3,2) form on P1xP1 vanishing at ([1:0],[1:0]) and ([1:0],[0:1]),
/// stored as its ten admissible coefficients.
class CurveCoeffs {
 public:
  CurveCoeffs() = default;
  explicit CurveCoeffs(std::array<Scalar, 10> values) : c_(std::move(values)) {}

  static CurveCoeffs from_strings(const std::vector<std::string>& values) {
    if (values.size() != 10) throw ParseError("CurveCoeffs: expected 10 coefficients");
    std::array<Scalar, 10> c;
    for (std::size_t p = 0; p < 10; ++p) c[p] = Scalar::parse(values[p]);
    return CurveCoeffs(c);
  }

  /// Reads the coefficients off a form on Q2; any monomial outside the model
  /// is rejected.
  static CurveCoeffs from_poly(const Poly& form) {
    if (!same_ring(form.ring(), rings::Q2())) throw RingMismatch("CurveCoeffs: form must live on Q2");
    CurveCoeffs out;
    for (const auto& [m, c] : form.terms()) {
      if (m[0] + m[1] != 3 || m[2] + m[3] != 2) throw DegreeMismatch("CurveCoeffs: form is not of bidegree (3,2)");
      const std::size_t p = position_of({m[1], m[2], m[3]});
      if (p == kCoeffOrder.size()) {
        throw InvalidArgument("CurveCoeffs: monomial " + m.to_string(*rings::Q2()) + " not allowed");
      }
      out.c_[p] = c;
    }
    return out;
  }

  const Scalar& operator[](std::size_t p) const { return c_.at(p); }
  Scalar& operator[](std::size_t p) { return c_.at(p); }
  const Scalar& at(CoeffIndex idx) const { return c_.at(checked(idx)); }
  Scalar& at(CoeffIndex idx) { return c_.at(checked(idx)); }
  const std::array<Scalar, 10>& values() const { return c_; }

  Poly to_poly() const {
    const RingPtr& ring = rings::Q2();
    Poly::Terms terms;
    for (std::size_t p = 0; p < 10; ++p) {
      if (c_[p].is_zero()) continue;
      const auto& [i, j, k] = kCoeffOrder[p];
      terms.emplace(Monomial({3 - i, i, j, k}), c_[p]);
    }
    return Poly(ring, std::move(terms));
  }

  std::vector<std::string> to_strings() const {
    std::vector<std::string> out;
    for (const auto& x : c_) out.push_back(x.to_string());
    return out;
  }

  std::string to_string() const {
    std::string out = "[";
    for (std::size_t p = 0; p < 10; ++p) out += (p ? ", " : "") + c_[p].to_string();
    return out + "]";
  }

  friend bool operator==(const CurveCoeffs&, const CurveCoeffs&) = default;

 private:
  static std::size_t checked(CoeffIndex idx) {
    const std::size_t p = position_of(idx);
    if (p == kCoeffOrder.size()) throw InvalidArgument("CurveCoeffs: no coefficient " + gitcurve::to_string(idx));
    return p;
  }

  std::array<Scalar, 10> c_{};
};

inline nlohmann::ordered_json to_json(const CurveCoeffs& c) { return c.to_strings(); }

inline CurveCoeffs coeffs_from_json(const nlohmann::json& j) {
  try {
    return CurveCoeffs::from_strings(j.get<std::vector<std::string>>());
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("CurveCoeffs: ") + e.what());
  }
}

}  // namespace k3cert::gitcurve
