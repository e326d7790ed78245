#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <memory>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "k3cert/errors.hpp"

namespace k3cert {

using Multidegree = std::vector<int>;

struct VarBlock {
  std::string name;
  std::size_t size = 0;
  friend bool operator==(const VarBlock&, const VarBlock&) = default;
};

/// A multigraded polynomial ring: ordered blocks of variables, each block
/// contributing one coordinate of the multidegree.
///
/// Variable names are the block name followed by the index inside the block
/// (Z0, Z1, U0, ...) unless explicit names are given.
class VarRing {
 public:
  VarRing(std::string name, std::vector<VarBlock> blocks, std::vector<std::string> var_names = {})
      : name_(std::move(name)), blocks_(std::move(blocks)), var_names_(std::move(var_names)) {
    if (blocks_.empty()) throw InvalidArgument("VarRing: no blocks");
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
      if (blocks_[b].size == 0) throw InvalidArgument("VarRing: empty block " + blocks_[b].name);
      for (std::size_t i = 0; i < blocks_[b].size; ++i) block_of_.push_back(b);
    }
    if (var_names_.empty()) {
      for (const auto& block : blocks_) {
        for (std::size_t i = 0; i < block.size; ++i) var_names_.push_back(block.name + std::to_string(i));
      }
    }
    if (var_names_.size() != block_of_.size()) throw InvalidArgument("VarRing: name count mismatch");
    auto sorted = var_names_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw InvalidArgument("VarRing: duplicate variable names in " + name_);
    }
  }

  const std::string& name() const { return name_; }
  const std::vector<VarBlock>& blocks() const { return blocks_; }
  std::size_t num_blocks() const { return blocks_.size(); }
  std::size_t num_vars() const { return block_of_.size(); }
  std::size_t block_of(std::size_t var) const { return block_of_.at(var); }
  const std::string& var_name(std::size_t var) const { return var_names_.at(var); }
  const std::vector<std::string>& var_names() const { return var_names_; }

  /// Index of the first variable of block b.
  std::size_t block_offset(std::size_t b) const {
    std::size_t offset = 0;
    for (std::size_t i = 0; i < b; ++i) offset += blocks_[i].size;
    return offset;
  }

  std::size_t var_index(const std::string& var) const {
    const auto it = std::find(var_names_.begin(), var_names_.end(), var);
    if (it == var_names_.end()) throw InvalidArgument("VarRing " + name_ + ": unknown variable " + var);
    return static_cast<std::size_t>(it - var_names_.begin());
  }

  friend bool operator==(const VarRing& a, const VarRing& b) {
    return a.name_ == b.name_ && a.blocks_ == b.blocks_ && a.var_names_ == b.var_names_;
  }

 private:
  std::string name_;
  std::vector<VarBlock> blocks_;
  std::vector<std::string> var_names_;
  std::vector<std::size_t> block_of_;
};

using RingPtr = std::shared_ptr<const VarRing>;

inline bool same_ring(const RingPtr& a, const RingPtr& b) { return a == b || *a == *b; }

namespace rings {

// P^5 with coordinates W_ij, i in {0,1}, j in {0,1,2}.
inline const RingPtr& P5() {
  static const RingPtr ring = std::make_shared<const VarRing>(
      "P5", std::vector<VarBlock>{{"W", 6}},
      std::vector<std::string>{"W00", "W01", "W02", "W10", "W11", "W12"});
  return ring;
}

// P^1 x P^2, coordinates Z0,Z1 | U0,U1,U2.
inline const RingPtr& Q3() {
  static const RingPtr ring = std::make_shared<const VarRing>("Q3", std::vector<VarBlock>{{"Z", 2}, {"U", 3}});
  return ring;
}

// P^1 x P^1, coordinates X0,X1 | Y0,Y1.
inline const RingPtr& Q2() {
  static const RingPtr ring = std::make_shared<const VarRing>("Q2", std::vector<VarBlock>{{"X", 2}, {"Y", 2}});
  return ring;
}

// Abstract P^1 x P^1 carrying the (1,1) forms of a scroll, coordinates A0,A1 | B0,B1.
inline const RingPtr& F0() {
  static const RingPtr ring = std::make_shared<const VarRing>("F0", std::vector<VarBlock>{{"A", 2}, {"B", 2}});
  return ring;
}

inline RingPtr by_name(const std::string& name) {
  for (const auto* ring : {&P5(), &Q3(), &Q2(), &F0()}) {
    if ((*ring)->name() == name) return *ring;
  }
  throw ParseError("unknown ring '" + name + "'");
}

}  // namespace rings

/// Exponent vector aligned with the variables of a ring.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<int> exps) : exps_(std::move(exps)) {
    for (int e : exps_) {
      if (e < 0) throw InvalidArgument("Monomial: negative exponent");
    }
  }
  static Monomial one(std::size_t nvars) { return Monomial(std::vector<int>(nvars, 0)); }
  static Monomial var(std::size_t nvars, std::size_t index) {
    std::vector<int> e(nvars, 0);
    e.at(index) = 1;
    return Monomial(std::move(e));
  }

  std::span<const int> exps() const { return exps_; }
  std::size_t size() const { return exps_.size(); }
  int operator[](std::size_t i) const { return exps_[i]; }
  int degree() const { return std::accumulate(exps_.begin(), exps_.end(), 0); }

  Multidegree multidegree(const VarRing& ring) const {
    Multidegree d(ring.num_blocks(), 0);
    for (std::size_t i = 0; i < exps_.size(); ++i) d[ring.block_of(i)] += exps_[i];
    return d;
  }

  bool divides(const Monomial& other) const {
    for (std::size_t i = 0; i < exps_.size(); ++i) {
      if (exps_[i] > other.exps_[i]) return false;
    }
    return true;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    std::vector<int> e(a.exps_.size());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = a.exps_[i] + b.exps_[i];
    return Monomial(std::move(e));
  }

  // Requires divisor.divides(*this).
  Monomial divided_by(const Monomial& divisor) const {
    std::vector<int> e(exps_.size());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = exps_[i] - divisor.exps_[i];
    return Monomial(std::move(e));
  }

  /// Human-readable form such as "Z0^2*U1"; "1" for the unit monomial.
  std::string to_string(const VarRing& ring) const {
    std::string out;
    for (std::size_t i = 0; i < exps_.size(); ++i) {
      if (exps_[i] == 0) continue;
      if (!out.empty()) out += '*';
      out += ring.var_name(i);
      if (exps_[i] > 1) out += '^' + std::to_string(exps_[i]);
    }
    return out.empty() ? "1" : out;
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<int> exps_;
};

/// Graded lexicographic order on the concatenated variable list: higher
/// total degree first, ties broken by the larger exponent of the earliest
/// variable. Used as "comes before" in every basis and term listing.
struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const {
    const int da = a.degree();
    const int db = b.degree();
    if (da != db) return da > db;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] != b[i]) return a[i] > b[i];
    }
    return false;
  }
};

}  // namespace k3cert
