#pragma once

// Finite rings compiled to Cayley tables over enumeration indices, plus the
// element-level unit and ideal operations built on them.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <vector>

#include "ringlab/element_set.hpp"
#include "ringlab/ring.hpp"

namespace ringlab {

enum class Side { left, right };

const char* to_string(Side side);

class FiniteRing {
 public:
  /// Table-size ceiling: |R| <= 1024 keeps both tables under 8 MiB.
  static constexpr std::uint64_t kMaxOrder = 1024;

  /// Throws InfiniteRing for infinite rings, BudgetExceeded above kMaxOrder.
  explicit FiniteRing(RingHandle ring);

  const RingHandle& ring() const { return ring_; }
  const RingDescriptor& descriptor() const { return ring_->descriptor(); }
  std::size_t order() const { return n_; }

  static constexpr Index zero() { return 0; }
  static constexpr Index one() { return 1; }

  Index add(Index x, Index y) const { return add_[x * n_ + y]; }
  Index mul(Index x, Index y) const { return mul_[x * n_ + y]; }
  Index neg(Index x) const { return neg_[x]; }
  Index sub(Index x, Index y) const { return add(x, neg(y)); }

  const Element& element(Index i) const { return elements_[i]; }
  const std::vector<Element>& elements() const { return elements_; }
  Index index_of(const Element& e) const;

  bool is_unit(Index x) const { return inverse_[x] != kNone; }
  /// Two-sided inverse of a unit.
  Index inverse(Index x) const { return inverse_[x]; }
  /// Units in enumeration order.
  const std::vector<Index>& units() const { return units_; }
  bool is_commutative() const { return commutative_; }
  bool is_central(Index x) const;

  /// aR
  const ElementSet& right_ideal(Index a) const { return right_[a]; }
  /// Ra
  const ElementSet& left_ideal(Index a) const { return left_[a]; }
  const ElementSet& principal_ideal(Index a, Side side) const {
    return side == Side::right ? right_[a] : left_[a];
  }
  /// RaR: the additive closure of { r a s }.
  ElementSet two_sided_ideal(Index a) const;

  /// Additive subgroup generated by a set.
  ElementSet additive_closure(const ElementSet& generators) const;
  /// { x + y : x in A, y in B }.
  ElementSet sum(const ElementSet& a, const ElementSet& b) const;
  ElementSet everything() const;

  /// aR + bR = R (right) or Ra + Rb = R (left).
  bool comaximal(Index a, Index b, Side side) const;

 private:
  static constexpr Index kNone = ~Index{0};

  RingHandle ring_;
  std::size_t n_;
  std::vector<Element> elements_;
  std::vector<Index> add_;
  std::vector<Index> mul_;
  std::vector<Index> neg_;
  std::vector<Index> inverse_;
  std::vector<Index> units_;
  std::vector<ElementSet> right_;
  std::vector<ElementSet> left_;
  bool commutative_ = true;
};

using FiniteRingHandle = std::shared_ptr<const FiniteRing>;

/// Compiled tables for a finite descriptor; cached per descriptor and safe
/// to call concurrently.
FiniteRingHandle compile_finite(const RingDescriptor& descriptor);

/// Two-sided invertible elements. Finite rings by search (enumeration
/// order); Z, Zi7 and S by the norm rule ({1, -1}). Throws InfiniteRing
/// otherwise.
std::vector<Element> units(const RingDescriptor& descriptor);

/// { a r } (right) or { r a } (left), in enumeration order.
std::vector<Element> principal_ideal(const RingDescriptor& descriptor, const Element& a,
                                     Side side);
/// RaR in enumeration order.
std::vector<Element> two_sided_ideal(const RingDescriptor& descriptor, const Element& a);

}  // namespace ringlab
