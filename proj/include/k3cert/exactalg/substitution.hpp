#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "k3cert/errors.hpp"
#include "k3cert/exactalg/poly.hpp"

namespace k3cert {

/// Ring morphism source -> target given by one image polynomial per source
/// variable.
///
/// All images of the variables in one source block must be homogeneous of a
/// common target multidegree; these multidegrees form the degree matrix that
/// transports gradings (a monomial of multidegree d maps into multidegree
/// sum_b d[b] * block_degree(b)).
class Substitution {
 public:
  Substitution(RingPtr source, RingPtr target, std::vector<Poly> images)
      : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
    if (images_.size() != source_->num_vars()) {
      throw MissingImage("Substitution: " + std::to_string(images_.size()) + " images for " +
                         std::to_string(source_->num_vars()) + " variables of " + source_->name());
    }
    std::vector<std::optional<Multidegree>> degrees(source_->num_blocks());
    for (std::size_t v = 0; v < images_.size(); ++v) {
      const Poly& img = images_[v];
      if (!same_ring(img.ring(), target_)) throw RingMismatch("Substitution: image not in target ring");
      if (img.is_zero()) continue;
      const auto d = img.multidegree();
      if (!d) throw InhomogeneousImage("Substitution: image of " + source_->var_name(v) + " is inhomogeneous");
      auto& slot = degrees[source_->block_of(v)];
      if (slot && *slot != *d) {
        throw InhomogeneousImage("Substitution: images in block " +
                                 source_->blocks()[source_->block_of(v)].name + " differ in multidegree");
      }
      slot = *d;
    }
    for (std::size_t b = 0; b < degrees.size(); ++b) {
      if (!degrees[b]) throw InhomogeneousImage("Substitution: block " + source_->blocks()[b].name + " maps to zero");
      block_degrees_.push_back(*degrees[b]);
    }
  }

  /// Builds a substitution from (variable name, image) pairs; every source
  /// variable needs an entry.
  static Substitution from_named(RingPtr source, RingPtr target,
                                 const std::vector<std::pair<std::string, Poly>>& named) {
    std::vector<std::optional<Poly>> slots(source->num_vars());
    for (const auto& [name, img] : named) slots.at(source->var_index(name)) = img;
    std::vector<Poly> images;
    for (std::size_t v = 0; v < slots.size(); ++v) {
      if (!slots[v]) throw MissingImage("Substitution: no image for " + source->var_name(v));
      images.push_back(*slots[v]);
    }
    return Substitution(std::move(source), std::move(target), std::move(images));
  }

  static Substitution identity(const RingPtr& ring) {
    std::vector<Poly> images;
    for (std::size_t v = 0; v < ring->num_vars(); ++v) images.push_back(Poly::var(ring, v));
    return Substitution(ring, ring, std::move(images));
  }

  const RingPtr& source() const { return source_; }
  const RingPtr& target() const { return target_; }
  const std::vector<Poly>& images() const { return images_; }
  const Poly& image(std::size_t var) const { return images_.at(var); }
  const Poly& image(const std::string& var) const { return images_.at(source_->var_index(var)); }
  const Multidegree& block_degree(std::size_t block) const { return block_degrees_.at(block); }

  Multidegree map_multidegree(const Multidegree& d) const {
    if (d.size() != source_->num_blocks()) throw DegreeMismatch("map_multidegree: wrong arity");
    Multidegree out(target_->num_blocks(), 0);
    for (std::size_t b = 0; b < d.size(); ++b) {
      for (std::size_t t = 0; t < out.size(); ++t) out[t] += d[b] * block_degrees_[b][t];
    }
    return out;
  }

  Poly apply(const Poly& p) const {
    if (!same_ring(p.ring(), source_)) throw RingMismatch("substitute: polynomial not in " + source_->name());
    // Powers of each image are cached per call; cubics dominate usage.
    std::vector<std::vector<Poly>> powers(images_.size());
    auto power = [&](std::size_t v, int e) -> const Poly& {
      auto& cache = powers[v];
      if (cache.empty()) cache.push_back(Poly::constant(target_, Scalar(1)));
      while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * images_[v]);
      return cache[static_cast<std::size_t>(e)];
    };
    Poly out(target_);
    for (const auto& [m, c] : p.terms()) {
      Poly term = Poly::constant(target_, c);
      for (std::size_t v = 0; v < m.size(); ++v) {
        if (m[v] != 0) term *= power(v, m[v]);
      }
      out += term;
    }
    return out;
  }

  Poly operator()(const Poly& p) const { return apply(p); }

 private:
  RingPtr source_;
  RingPtr target_;
  std::vector<Poly> images_;
  std::vector<Multidegree> block_degrees_;
};

inline Poly substitute(const Poly& p, const Substitution& s) { return s.apply(p); }

/// outer o inner: first apply inner, then outer.
inline Substitution compose(const Substitution& outer, const Substitution& inner) {
  if (!same_ring(inner.target(), outer.source())) throw RingMismatch("compose: substitutions are not composable");
  std::vector<Poly> images;
  images.reserve(inner.images().size());
  for (const auto& img : inner.images()) images.push_back(outer.apply(img));
  return Substitution(inner.source(), outer.target(), std::move(images));
}

}  // namespace k3cert
