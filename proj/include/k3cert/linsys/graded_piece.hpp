#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "k3cert/errors.hpp"
#include "k3cert/exactalg/poly.hpp"
#include "k3cert/linsys/matrix.hpp"

namespace k3cert {

namespace detail {

// All exponent vectors of length n summing to d, in lex-descending order.
inline void compositions(std::size_t n, int d, std::vector<int>& current, std::vector<std::vector<int>>& out) {
  if (current.size() + 1 == n) {
    current.push_back(d);
    out.push_back(current);
    current.pop_back();
    return;
  }
  for (int e = d; e >= 0; --e) {
    current.push_back(e);
    compositions(n, d - e, current, out);
    current.pop_back();
  }
}

}  // namespace detail

/// The vector space of forms of one multidegree, with its monomial basis in
/// grlex order.
class GradedPiece {
 public:
  GradedPiece(RingPtr ring, Multidegree degree) : ring_(std::move(ring)), degree_(std::move(degree)) {
    if (degree_.size() != ring_->num_blocks()) throw DegreeMismatch("GradedPiece: multidegree arity mismatch");
    for (int d : degree_) {
      if (d < 0) throw DegreeMismatch("GradedPiece: negative multidegree");
    }
    // Cartesian product of per-block compositions; concatenation keeps
    // lex order on the full exponent vector since blocks are contiguous.
    std::vector<std::vector<int>> partial{{}};
    for (std::size_t b = 0; b < ring_->num_blocks(); ++b) {
      std::vector<std::vector<int>> block_exps;
      std::vector<int> scratch;
      detail::compositions(ring_->blocks()[b].size, degree_[b], scratch, block_exps);
      std::vector<std::vector<int>> next;
      for (const auto& prefix : partial) {
        for (const auto& suffix : block_exps) {
          auto e = prefix;
          e.insert(e.end(), suffix.begin(), suffix.end());
          next.push_back(std::move(e));
        }
      }
      partial = std::move(next);
    }
    basis_.reserve(partial.size());
    for (auto& e : partial) basis_.emplace_back(std::move(e));
    std::sort(basis_.begin(), basis_.end(), GrlexGreater{});
    for (std::size_t i = 0; i < basis_.size(); ++i) index_.emplace(basis_[i], i);
  }

  const RingPtr& ring() const { return ring_; }
  const Multidegree& multidegree() const { return degree_; }
  const std::vector<Monomial>& basis() const { return basis_; }
  std::size_t dim() const { return basis_.size(); }

  std::size_t index_of(const Monomial& m) const {
    const auto it = index_.find(m);
    if (it == index_.end()) throw DegreeMismatch("GradedPiece: monomial " + m.to_string(*ring_) + " not in piece");
    return it->second;
  }

  /// Coordinates of p in the monomial basis; p must lie in this piece.
  Vector coordinates(const Poly& p) const {
    if (!same_ring(p.ring(), ring_)) throw RingMismatch("GradedPiece: polynomial in " + p.ring()->name());
    Vector v(dim());
    for (const auto& [m, c] : p.terms()) v[index_of(m)] = c;
    return v;
  }

  Poly to_poly(std::span<const Scalar> coords) const {
    if (coords.size() != dim()) throw DegreeMismatch("GradedPiece: coordinate vector has wrong length");
    Poly::Terms terms;
    for (std::size_t i = 0; i < coords.size(); ++i) {
      if (!coords[i].is_zero()) terms.emplace(basis_[i], coords[i]);
    }
    return Poly(ring_, std::move(terms));
  }

  std::string label() const {
    std::string out = ring_->name() + "(";
    for (std::size_t i = 0; i < degree_.size(); ++i) out += (i ? "," : "") + std::to_string(degree_[i]);
    return out + ")";
  }

  friend bool operator==(const GradedPiece& a, const GradedPiece& b) {
    return same_ring(a.ring_, b.ring_) && a.degree_ == b.degree_;
  }

 private:
  RingPtr ring_;
  Multidegree degree_;
  std::vector<Monomial> basis_;
  std::map<Monomial, std::size_t, GrlexGreater> index_;
};

inline GradedPiece monomial_basis(const RingPtr& ring, const Multidegree& degree) { return {ring, degree}; }

}  // namespace k3cert
