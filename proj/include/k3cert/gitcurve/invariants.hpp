#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

#include "k3cert/errors.hpp"
#include "k3cert/gitcurve/slice.hpp"

namespace k3cert::gitcurve {

/// Exponents of a Laurent monomial in the nine slice coefficients, ordered
/// C011, C120, C102, C220, C211, C202, C320, C311, C302.
using ExponentVector = std::array<int, 9>;

struct NamedMonomial {
  std::string name;
  ExponentVector exps;
};

/// The six torus-invariant monomials:
///   I1 = C120 C102 / (C211 C011)     J2 = C011 C311 / (C220 C102)
///   J3 = C302 C011 / (C211 C102)     I4 = C220 C202 / C211^2
///   I5 = C320 C302 / C311^2          I6 = C211^3 / (C311^2 C011)
inline const std::array<NamedMonomial, 6>& torus_monomials() {
  static const std::array<NamedMonomial, 6> table{{
      {"I1", {-1, 1, 1, 0, -1, 0, 0, 0, 0}},
      {"J2", {1, 0, -1, -1, 0, 0, 0, 1, 0}},
      {"J3", {1, 0, -1, 0, -1, 0, 0, 0, 1}},
      {"I4", {0, 0, 0, 1, -2, 1, 0, 0, 0}},
      {"I5", {0, 0, 0, 0, 0, 0, 1, -2, 1}},
      {"I6", {-1, 0, 0, 0, 3, 0, 0, -2, 0}},
  }};
  return table;
}

/// Y0 <-> Y1 on slice positions: 120 <-> 102, 220 <-> 202, 320 <-> 302.
inline ExponentVector flip_exponents(const ExponentVector& e) {
  static constexpr std::array<std::size_t, 9> perm{0, 2, 1, 5, 4, 3, 8, 7, 6};
  ExponentVector out{};
  for (std::size_t p = 0; p < 9; ++p) out[perm[p]] = e[p];
  return out;
}

inline ExponentVector combine(std::initializer_list<std::pair<int, const ExponentVector*>> terms) {
  ExponentVector out{};
  for (const auto& [mult, e] : terms) {
    for (std::size_t p = 0; p < 9; ++p) out[p] += mult * (*e)[p];
  }
  return out;
}

/// Value of a Laurent monomial at c; Degenerate if a coefficient with a
/// negative exponent vanishes.
inline Scalar evaluate_monomial(const ExponentVector& e, const CurveCoeffs& c) {
  Scalar out(1);
  for (std::size_t p = 0; p < 9; ++p) {
    if (e[p] == 0) continue;
    const Scalar& x = c[kSlicePositions[p]];
    if (x.is_zero()) {
      if (e[p] < 0) throw Degenerate("invariants: C" + to_string(kCoeffOrder[kSlicePositions[p]]) + " = 0");
      return Scalar(0);
    }
    out *= x.pow(e[p]);
  }
  return out;
}

struct TorusInvariants {
  Scalar I1, J2, J3, I4, I5, I6;
  friend bool operator==(const TorusInvariants&, const TorusInvariants&) = default;
};

struct InvariantTuple {
  Scalar I1, I2, I3, I4, I5, I6;
  friend bool operator==(const InvariantTuple&, const InvariantTuple&) = default;

  std::array<Scalar, 6> values() const { return {I1, I2, I3, I4, I5, I6}; }
  std::string to_string() const {
    std::string out = "(";
    const auto v = values();
    for (std::size_t i = 0; i < 6; ++i) out += (i ? ", " : "") + v[i].to_string();
    return out + ")";
  }
};

inline nlohmann::ordered_json to_json(const InvariantTuple& t) {
  nlohmann::ordered_json j = nlohmann::ordered_json::array();
  for (const auto& x : t.values()) j.push_back(x.to_string());
  return j;
}

namespace detail {

// The generic open set: these coefficients appear in denominators.
inline constexpr std::array<CoeffIndex, 7> kRequiredNonzero{
    {{0, 1, 1}, {1, 2, 0}, {1, 0, 2}, {2, 2, 0}, {2, 1, 1}, {2, 0, 2}, {3, 1, 1}}};

inline void require_generic(const CurveCoeffs& c, const char* what) {
  if (!on_slice(c)) throw SliceViolation(std::string(what) + ": C111 != 0");
  for (const auto& idx : kRequiredNonzero) {
    if (c.at(idx).is_zero()) throw Degenerate(std::string(what) + ": C" + to_string(idx) + " = 0");
  }
}

}  // namespace detail

inline TorusInvariants torus_invariants(const CurveCoeffs& c) {
  detail::require_generic(c, "torus_invariants");
  const auto& m = torus_monomials();
  return {evaluate_monomial(m[0].exps, c), evaluate_monomial(m[1].exps, c), evaluate_monomial(m[2].exps, c),
          evaluate_monomial(m[3].exps, c), evaluate_monomial(m[4].exps, c), evaluate_monomial(m[5].exps, c)};
}

/// iota(J) is J evaluated at the flipped coefficients.
inline Scalar iota(const ExponentVector& e, const CurveCoeffs& c) { return evaluate_monomial(flip_exponents(e), c); }

/// I2 = J2 + iota(J2), I3 = J3 + iota(J3); I1, I4, I5, I6 are flip-symmetric.
inline InvariantTuple invariants(const CurveCoeffs& c) {
  const TorusInvariants t = torus_invariants(c);
  const auto& m = torus_monomials();
  return {t.I1, t.J2 + iota(m[1].exps, c), t.J3 + iota(m[2].exps, c), t.I4, t.I5, t.I6};
}

/// Checks at c that
///   iota(J2) = I1^-1 J2^-1 I4^-1 I6^-1   and   iota(J3) = I1^-1 J3^-1 I5 I6^-1.
inline bool iota_relations(const CurveCoeffs& c) {
  const TorusInvariants t = torus_invariants(c);
  if (c.at({3, 0, 2}).is_zero()) throw Degenerate("iota_relations: C302 = 0");
  const auto& m = torus_monomials();
  const bool first = iota(m[1].exps, c) == (t.I1 * t.J2 * t.I4 * t.I6).inverse();
  const bool second = iota(m[2].exps, c) == t.I5 / (t.I1 * t.J3 * t.I6);
  return first && second;
}

/// The same identities as exponent-vector equalities, i.e. as identities of
/// rational functions. Also confirms that I1, I4, I5, I6 are flip-symmetric.
inline bool iota_relations_symbolic() {
  const auto& m = torus_monomials();
  const auto& I1 = m[0].exps;
  const auto& J2 = m[1].exps;
  const auto& J3 = m[2].exps;
  const auto& I4 = m[3].exps;
  const auto& I5 = m[4].exps;
  const auto& I6 = m[5].exps;
  const bool first = flip_exponents(J2) == combine({{-1, &I1}, {-1, &J2}, {-1, &I4}, {-1, &I6}});
  const bool second = flip_exponents(J3) == combine({{-1, &I1}, {-1, &J3}, {1, &I5}, {-1, &I6}});
  bool symmetric = true;
  for (const auto* e : {&I1, &I4, &I5, &I6}) symmetric = symmetric && flip_exponents(*e) == *e;
  return first && second && symmetric;
}

}  // namespace k3cert::gitcurve
