#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "k3cert/errors.hpp"
#include "k3cert/linsys/linmap.hpp"

namespace k3cert::scroll {

enum class HirzebruchTag { F0, F2, Degenerate };

inline std::string to_string(HirzebruchTag tag) {
  switch (tag) {
    case HirzebruchTag::F0: return "F0";
    case HirzebruchTag::F2: return "F2";
    case HirzebruchTag::Degenerate: return "Degenerate";
  }
  return "?";
}

struct HirzebruchClass {
  HirzebruchTag tag = HirzebruchTag::Degenerate;
  int conic_rank = 0;
  friend bool operator==(const HirzebruchClass&, const HirzebruchClass&) = default;
};

/// Symmetric Gram matrix of a quadratic form in the variables of one block:
/// q = x^T M x, so M_ii is the coefficient of x_i^2 and M_ij half that of x_i x_j.
inline Matrix quadratic_form_matrix(const Poly& q, std::size_t block) {
  const VarRing& ring = *q.ring();
  const std::size_t n = ring.blocks().at(block).size;
  const std::size_t offset = ring.block_offset(block);
  Matrix m(n, n);
  for (const auto& [mono, c] : q.terms()) {
    std::vector<std::size_t> vars;
    for (std::size_t v = 0; v < mono.size(); ++v) {
      const bool in_block = v >= offset && v < offset + n;
      if (mono[v] != 0 && !in_block) throw DegreeMismatch("quadratic_form_matrix: term outside the block");
      for (int e = 0; e < mono[v]; ++e) vars.push_back(v - offset);
    }
    if (vars.size() != 2) throw DegreeMismatch("quadratic_form_matrix: form is not quadratic");
    if (vars[0] == vars[1]) {
      m(vars[0], vars[0]) += c;
    } else {
      const Scalar half = c / Scalar(2);
      m(vars[0], vars[1]) += half;
      m(vars[1], vars[0]) += half;
    }
  }
  return m;
}

/// Rank of a conic in the U-block of Q3.
inline int conic_rank(const Poly& q) {
  if (!same_ring(q.ring(), rings::Q3())) throw RingMismatch("conic_rank: conic must live on Q3");
  return static_cast<int>(rank(quadratic_form_matrix(q, 1)));
}

inline HirzebruchClass class_from_branch_rank(int r) {
  if (r == 3) return {HirzebruchTag::F0, r};
  if (r == 2) return {HirzebruchTag::F2, r};
  return {HirzebruchTag::Degenerate, r};
}

namespace detail {
inline void require_u_linear(const Poly& p, const char* what) {
  if (!same_ring(p.ring(), rings::Q3())) throw RingMismatch(std::string(what) + ": form must live on Q3");
  if (!p.is_zero() && p.multidegree() != Multidegree{0, 1}) {
    throw DegreeMismatch(std::string(what) + ": expected a linear form in U0,U1,U2");
  }
}
}  // namespace detail

/// Classifies the divisor a Z0^2 + b Z0 Z1 + c Z1^2 of P1xP2 (a, b, c linear
/// in U) through the rank of its branch conic b^2 - 4ac.
inline HirzebruchClass classify_21(const Poly& a, const Poly& b, const Poly& c) {
  detail::require_u_linear(a, "classify_21");
  detail::require_u_linear(b, "classify_21");
  detail::require_u_linear(c, "classify_21");
  if (a.is_zero() && b.is_zero() && c.is_zero()) throw ZeroInput("classify_21: all three forms vanish");
  const Poly branch = b * b - Scalar(4) * a * c;
  return class_from_branch_rank(branch.is_zero() ? 0 : conic_rank(branch));
}

/// Splits a (2,1) form on Q3 into its Z0^2, Z0 Z1, Z1^2 coefficients.
inline std::array<Poly, 3> split_21(const Poly& form) {
  if (!same_ring(form.ring(), rings::Q3())) throw RingMismatch("split_21: form must live on Q3");
  if (form.multidegree() != Multidegree{2, 1}) throw DegreeMismatch("split_21: expected a (2,1) form");
  std::array<Poly, 3> parts{Poly(rings::Q3()), Poly(rings::Q3()), Poly(rings::Q3())};
  for (const auto& [m, c] : form.terms()) {
    std::vector<int> e(m.exps().begin(), m.exps().end());
    const int z1 = e[1];
    e[0] = 0;
    e[1] = 0;
    parts[static_cast<std::size_t>(z1)] += Poly::monomial(rings::Q3(), Monomial(e), c);
  }
  return parts;
}

/// A (0,2) divisor P1 x B is the standard scroll exactly when the conic B is
/// smooth; anything of lower rank is reducible or non-reduced.
inline HirzebruchClass classify_02(const Poly& q) {
  if (!same_ring(q.ring(), rings::Q3())) throw RingMismatch("classify_02: conic must live on Q3");
  if (q.is_zero()) throw ZeroInput("classify_02: zero conic");
  if (q.multidegree() != Multidegree{0, 2}) throw DegreeMismatch("classify_02: expected a (0,2) form");
  const int r = conic_rank(q);
  return {r == 3 ? HirzebruchTag::F0 : HirzebruchTag::Degenerate, r};
}

namespace detail {
inline void require_11_forms(std::span<const Poly> psi) {
  for (const auto& p : psi) {
    if (!same_ring(p.ring(), rings::F0())) throw RingMismatch("mult-iso: forms must live on F0");
    if (!p.is_zero() && p.multidegree() != Multidegree{1, 1}) throw DegreeMismatch("mult-iso: expected (1,1) forms");
  }
}
}  // namespace detail

/// Rank of the span of the forms themselves inside F0(1,1).
inline std::size_t form_rank(std::span<const Poly> psi) {
  detail::require_11_forms(psi);
  return Subspace::span(monomial_basis(rings::F0(), {1, 1}), std::vector<Poly>(psi.begin(), psi.end())).dim();
}

/// Rank of the products {A_i * psi_k} inside the 6-dimensional F0(2,1).
/// No independence requirement.
inline std::size_t product_rank(std::span<const Poly> psi) {
  detail::require_11_forms(psi);
  const auto& ring = rings::F0();
  std::vector<Poly> products;
  for (const char* a : {"A0", "A1"}) {
    for (const auto& p : psi) products.push_back(Poly::var(ring, a) * p);
  }
  return Subspace::span(monomial_basis(ring, {2, 1}), products).dim();
}

/// Product rank for three independent (1,1) forms; 6 certifies that the
/// restriction and multiplication maps of the scroll defined by psi are
/// isomorphisms. Throws DependentForms when the forms are dependent.
inline std::size_t verify_mult_iso(const std::array<Poly, 3>& psi) {
  if (form_rank(psi) != 3) throw DependentForms("verify_mult_iso: psi forms are linearly dependent");
  return product_rank(psi);
}

struct BasePoint {
  std::array<Scalar, 2> a;  // (A0 : A1)
  std::array<Scalar, 2> b;  // (B0 : B1)
  std::array<Scalar, 4> coordinates() const { return {a[0], a[1], b[0], b[1]}; }
};

/// Common zero of three independent (1,1) forms, if any.
///
/// The forms are three independent linear conditions on the Segre coordinates
/// p_ij = A_i B_j, so they cut out a single rational point of P3; the net has
/// a base point exactly when that point lies on p00 p11 = p01 p10.
inline std::optional<BasePoint> find_base_point(const std::array<Poly, 3>& psi) {
  if (form_rank(psi) != 3) throw DependentForms("find_base_point: psi forms are linearly dependent");
  const GradedPiece piece = monomial_basis(rings::F0(), {1, 1});  // A0B0, A0B1, A1B0, A1B1
  std::vector<Vector> rows;
  for (const auto& p : psi) rows.push_back(piece.coordinates(p));
  const auto kernel = kernel_basis(Matrix::from_rows(rows, piece.dim()));
  const Vector& p = kernel.at(0);
  if (p[0] * p[3] != p[1] * p[2]) return std::nullopt;
  if (!p[0].is_zero() || !p[1].is_zero()) {
    const Scalar a1 = !p[0].is_zero() ? p[2] / p[0] : p[3] / p[1];
    return BasePoint{{Scalar(1), a1}, {p[0], p[1]}};
  }
  return BasePoint{{Scalar(0), Scalar(1)}, {p[2], p[3]}};
}

}  // namespace k3cert::scroll
