#pragma once

#include <string>

#include <json.hpp>

#include "k3cert/errors.hpp"
#include "k3cert/gitcurve/coeffs.hpp"

namespace k3cert::gitcurve {

/// Element of the stabilizer of the two marked points, acting on forms by
/// substitution in the order shift, torus, flip:
///   shift  X0 -> X0 + lambda X1
///   torus  C_i20 -> a^i (u^2/v) C,  C_i11 -> a^i u C,  C_i02 -> a^i v C
///   flip   Y0 <-> Y1, i.e. C_ijk -> C_ikj
/// (u, v) stand for (bc, c^2) of the substitution X1 -> aX1, Y0 -> bY0,
/// Y1 -> cY1, which keeps everything rational.
struct GroupElem {
  Scalar lambda{0};
  Scalar a{1};
  Scalar u{1};
  Scalar v{1};
  bool flip = false;

  void validate() const {
    if (a.is_zero() || u.is_zero() || v.is_zero()) throw InvalidArgument("GroupElem: a, u, v must be nonzero");
  }

  friend bool operator==(const GroupElem&, const GroupElem&) = default;
};

inline GroupElem identity_elem() { return {}; }
inline GroupElem shift_elem(const Scalar& lambda) { return {lambda, 1, 1, 1, false}; }
inline GroupElem torus_elem(const Scalar& a, const Scalar& u, const Scalar& v) {
  GroupElem g{0, a, u, v, false};
  g.validate();
  return g;
}
inline GroupElem flip_elem() { return {0, 1, 1, 1, true}; }

namespace detail {

inline Scalar binomial(int n, int k) {
  Scalar r(1);
  for (int t = 1; t <= k; ++t) r = r * Scalar(n - k + t) / Scalar(t);
  return r;
}

inline CurveCoeffs apply_shift(const CurveCoeffs& c, const Scalar& lambda) {
  if (lambda.is_zero()) return c;
  CurveCoeffs out;
  for (std::size_t p = 0; p < 10; ++p) {
    const auto& [m, j, k] = kCoeffOrder[p];
    // X0^(3-i) X1^i expands into X0^(3-m) X1^m with weight binom(3-i, m-i) lambda^(m-i).
    Scalar sum(0);
    for (int i = 0; i <= m; ++i) {
      const std::size_t src = position_of({i, j, k});
      if (src == kCoeffOrder.size() || c[src].is_zero()) continue;
      sum += c[src] * binomial(3 - i, m - i) * lambda.pow(m - i);
    }
    out[p] = sum;
  }
  return out;
}

inline CurveCoeffs apply_torus(const CurveCoeffs& c, const Scalar& a, const Scalar& u, const Scalar& v) {
  const Scalar y_weight[3] = {v, u, u * u / v};  // indexed by j
  CurveCoeffs out;
  for (std::size_t p = 0; p < 10; ++p) {
    const auto& [i, j, k] = kCoeffOrder[p];
    out[p] = c[p] * a.pow(i) * y_weight[j];
  }
  return out;
}

inline CurveCoeffs apply_flip(const CurveCoeffs& c) {
  CurveCoeffs out;
  for (std::size_t p = 0; p < 10; ++p) {
    const auto& [i, j, k] = kCoeffOrder[p];
    out[position_of({i, k, j})] = c[p];
  }
  return out;
}

}  // namespace detail

inline CurveCoeffs act(const GroupElem& g, const CurveCoeffs& c) {
  g.validate();
  CurveCoeffs out = detail::apply_torus(detail::apply_shift(c, g.lambda), g.a, g.u, g.v);
  return g.flip ? detail::apply_flip(out) : out;
}

/// g2 o g1 (g1 acts first), from the relations
///   T_a S_lambda = S_(a lambda) T_a,  Phi S = S Phi,  Phi T_(a,u,v) = T_(a,u,u^2/v) Phi.
inline GroupElem compose(const GroupElem& g2, const GroupElem& g1) {
  g1.validate();
  g2.validate();
  return {
      g1.lambda + g2.lambda / g1.a,
      g1.a * g2.a,
      g1.u * g2.u,
      g1.v * (g1.flip ? g2.u * g2.u / g2.v : g2.v),
      g1.flip != g2.flip,
  };
}

inline GroupElem inverse(const GroupElem& g) {
  g.validate();
  const Scalar u = g.u.inverse();
  return {-g.a * g.lambda, g.a.inverse(), u, g.flip ? g.v * u * u : g.v.inverse(), g.flip};
}

inline std::string to_string(const GroupElem& g) {
  return "(lambda=" + g.lambda.to_string() + ", a=" + g.a.to_string() + ", u=" + g.u.to_string() +
         ", v=" + g.v.to_string() + ", flip=" + (g.flip ? "true" : "false") + ")";
}

inline nlohmann::ordered_json to_json(const GroupElem& g) {
  nlohmann::ordered_json j;
  j["lambda"] = g.lambda.to_string();
  j["a"] = g.a.to_string();
  j["u"] = g.u.to_string();
  j["v"] = g.v.to_string();
  j["flip"] = g.flip;
  return j;
}

inline GroupElem group_elem_from_json(const nlohmann::json& j) {
  try {
    GroupElem g{Scalar::parse(j.at("lambda").get<std::string>()), Scalar::parse(j.at("a").get<std::string>()),
                Scalar::parse(j.at("u").get<std::string>()), Scalar::parse(j.at("v").get<std::string>()),
                j.at("flip").get<bool>()};
    g.validate();
    return g;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("GroupElem: ") + e.what());
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what());
  }
}

}  // namespace k3cert::gitcurve
