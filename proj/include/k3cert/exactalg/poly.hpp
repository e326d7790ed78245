#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "k3cert/errors.hpp"
#include "k3cert/exactalg/ring.hpp"
#include "k3cert/exactalg/scalar.hpp"

namespace k3cert {

/// Sparse polynomial over a VarRing with rational coefficients.
///
/// Terms are kept in grlex order, leading term first. Zero coefficients are
/// never stored, so two polynomials are equal iff their term maps are equal.
class Poly {
 public:
  using Terms = std::map<Monomial, Scalar, GrlexGreater>;

  explicit Poly(RingPtr ring) : ring_(std::move(ring)) {}
  Poly(RingPtr ring, Terms terms) : ring_(std::move(ring)), terms_(std::move(terms)) {
    for (auto it = terms_.begin(); it != terms_.end();) {
      if (it->first.size() != ring_->num_vars()) throw ArityMismatch("Poly: monomial length does not match ring");
      it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
    }
  }

  static Poly constant(const RingPtr& ring, const Scalar& c) {
    Poly p(ring);
    if (!c.is_zero()) p.terms_.emplace(Monomial::one(ring->num_vars()), c);
    return p;
  }
  static Poly monomial(const RingPtr& ring, const Monomial& m, const Scalar& c = Scalar(1)) {
    if (m.size() != ring->num_vars()) throw ArityMismatch("Poly: monomial length does not match ring");
    Poly p(ring);
    if (!c.is_zero()) p.terms_.emplace(m, c);
    return p;
  }
  static Poly var(const RingPtr& ring, std::size_t index) {
    return monomial(ring, Monomial::var(ring->num_vars(), index));
  }
  static Poly var(const RingPtr& ring, const std::string& name) { return var(ring, ring->var_index(name)); }

  const RingPtr& ring() const { return ring_; }
  const Terms& terms() const { return terms_; }
  std::size_t num_terms() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  Scalar coefficient(const Monomial& m) const {
    const auto it = terms_.find(m);
    return it == terms_.end() ? Scalar(0) : it->second;
  }

  /// Leading term under grlex; requires a nonzero polynomial.
  const Terms::value_type& leading_term() const {
    if (terms_.empty()) throw ZeroInput("Poly: leading term of zero");
    return *terms_.begin();
  }

  bool is_homogeneous() const { return multidegree().has_value(); }

  /// The common multidegree of all terms, or nullopt for an inhomogeneous
  /// polynomial. The zero polynomial has no multidegree.
  std::optional<Multidegree> multidegree() const {
    if (terms_.empty()) return std::nullopt;
    Multidegree d = terms_.begin()->first.multidegree(*ring_);
    for (const auto& [m, c] : terms_) {
      if (m.multidegree(*ring_) != d) return std::nullopt;
    }
    return d;
  }

  Poly& operator+=(const Poly& o) {
    check_ring(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    check_ring(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  Poly& operator*=(const Scalar& s) {
    if (s.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [m, c] : terms_) c *= s;
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(Poly a) { return a *= Scalar(-1); }
  friend Poly operator*(Poly a, const Scalar& s) { return a *= s; }
  friend Poly operator*(const Scalar& s, Poly a) { return a *= s; }

  friend Poly operator*(const Poly& a, const Poly& b) {
    a.check_ring(b);
    Poly out(a.ring_);
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
    }
    return out;
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  Poly pow(unsigned exponent) const {
    Poly result = constant(ring_, Scalar(1));
    Poly base = *this;
    while (exponent != 0) {
      if ((exponent & 1U) != 0) result *= base;
      exponent >>= 1U;
      if (exponent != 0) base *= base;
    }
    return result;
  }

  /// Exact value at a point given as one Scalar per ring variable.
  Scalar evaluate(std::span<const Scalar> point) const {
    if (point.size() != ring_->num_vars()) {
      throw ArityMismatch("evaluate: expected " + std::to_string(ring_->num_vars()) + " values, got " +
                          std::to_string(point.size()));
    }
    Scalar total(0);
    for (const auto& [m, c] : terms_) {
      Scalar value = c;
      for (std::size_t i = 0; i < m.size() && !value.is_zero(); ++i) {
        if (m[i] != 0) value *= point[i].pow(m[i]);
      }
      total += value;
    }
    return total;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      Scalar magnitude = c.sign() < 0 ? -c : c;
      if (first) {
        if (c.sign() < 0) out += "-";
      } else {
        out += c.sign() < 0 ? " - " : " + ";
      }
      const bool unit = m.degree() == 0;
      if (unit) {
        out += magnitude.to_string();
      } else {
        if (!magnitude.is_one()) out += magnitude.to_string() + "*";
        out += m.to_string(*ring_);
      }
      first = false;
    }
    return out;
  }

  friend bool operator==(const Poly& a, const Poly& b) {
    return same_ring(a.ring_, b.ring_) && a.terms_ == b.terms_;
  }

  void check_ring(const Poly& o) const {
    if (!same_ring(ring_, o.ring_)) {
      throw RingMismatch("ring mismatch: " + ring_->name() + " vs " + o.ring_->name());
    }
  }

 private:
  void add_term(const Monomial& m, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  RingPtr ring_;
  Terms terms_;
};

/// Returns q with q * divisor == p exactly. Throws NotDivisible otherwise.
///
/// Leading-term division in grlex: if p = q*d then LT(p) = LT(q)*LT(d), so
/// the first leading term that LT(d) does not divide proves non-divisibility.
inline Poly exact_divide(const Poly& p, const Poly& divisor) {
  p.check_ring(divisor);
  if (divisor.is_zero()) throw DivisionByZero("exact_divide: zero divisor");
  const auto& [lead_m, lead_c] = divisor.leading_term();
  Poly quotient(p.ring());
  Poly remainder = p;
  while (!remainder.is_zero()) {
    const auto& [m, c] = remainder.leading_term();
    if (!lead_m.divides(m)) throw NotDivisible("exact_divide: " + p.to_string() + " by " + divisor.to_string());
    const Poly step = Poly::monomial(p.ring(), m.divided_by(lead_m), c / lead_c);
    quotient += step;
    remainder -= step * divisor;
  }
  return quotient;
}

}  // namespace k3cert
