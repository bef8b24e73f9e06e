#pragma once

#include <vector>

#include "ringlab/finite_ring.hpp"

namespace ringlab {

/// A one-sided ideal of a finite ring: closed under addition and under
/// multiplication by ring elements on `side` (left ideal: r*m in I).
struct OneSidedIdeal {
  Side side;
  ElementSet members;
  /// Greedy generating list in enumeration order: each generator is the
  /// first element not yet in the ideal generated by its predecessors.
  std::vector<Index> generators;
};

/// The ideal generated on `side` by the given elements.
OneSidedIdeal generate_ideal(const FiniteRing& f, Side side, const std::vector<Index>& gens);

/// Every one-sided ideal, by closure over the lattice starting at {0}.
/// Ordered by member set.
std::vector<OneSidedIdeal> enumerate_one_sided_ideals(const FiniteRing& f, Side side);

/// Maximal proper one-sided ideals. Supported for |R| <= 16, or for
/// commutative rings with |R| <= 36; BudgetExceeded otherwise.
std::vector<OneSidedIdeal> enumerate_maximal_one_sided_ideals(const FiniteRing& f, Side side);
std::vector<OneSidedIdeal> enumerate_maximal_one_sided_ideals(const RingDescriptor& descriptor,
                                                              Side side);

/// Closed under addition, contains 0, closed under `side` multiplication.
bool is_one_sided_ideal(const FiniteRing& f, const ElementSet& set, Side side);

}  // namespace ringlab
