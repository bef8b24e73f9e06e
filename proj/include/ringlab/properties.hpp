#pragma once

// Checkers for the ring properties studied here. Over finite rings each
// checker searches the full quantifier space in enumeration order and
// reports the first violation; over infinite rings a checker reports holds
// only through an exact structural rule (commutativity, a field, a PID, an
// exact unit group), fails only with a replayable witness, and otherwise
// unknown.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ringlab/element.hpp"
#include "ringlab/finite_ring.hpp"
#include "ringlab/kernels.hpp"
#include "ringlab/ring_descriptor.hpp"

namespace ringlab {

enum class Verdict { holds, fails, unknown };

const char* to_string(Verdict v);

struct NamedElement {
  std::string name;
  Element value;
};

struct PropertyVerdict {
  std::string property;
  Verdict verdict = Verdict::unknown;
  std::vector<NamedElement> witness;
  /// Size of the quantifier space that was searched.
  std::uint64_t budget_consumed = 0;
  RingDescriptor ring = RingDescriptor::integers();
  /// Human-readable basis for the verdict.
  std::string note;
  bool budget_exceeded = false;

  const Element* find(std::string_view name) const;
};

struct CheckOptions {
  std::uint64_t budget = std::uint64_t{1} << 20;
  Exec exec = Exec::parallel;
};

/// Stable property identifiers, in the order listed by the CLI.
const std::vector<std::string>& property_ids();

/// Dispatch by identifier. Throws std::invalid_argument for unknown ids.
PropertyVerdict check_property(std::string_view id, const RingDescriptor& ring,
                               const CheckOptions& options = {});

PropertyVerdict check_bezout(const RingDescriptor& ring, const CheckOptions& options = {});
PropertyVerdict check_hermite(const RingDescriptor& ring, const CheckOptions& options = {});
PropertyVerdict check_stable_range_1(const RingDescriptor& ring, const CheckOptions& options = {});
PropertyVerdict check_unit_stable_range_1(const RingDescriptor& ring,
                                          const CheckOptions& options = {});
PropertyVerdict check_kazimirsky(const RingDescriptor& ring, Side side,
                                 const CheckOptions& options = {});
PropertyVerdict check_duo(const RingDescriptor& ring, Side side, const CheckOptions& options = {});
PropertyVerdict check_unit_central(const RingDescriptor& ring, const CheckOptions& options = {});
PropertyVerdict check_quasi_duo(const RingDescriptor& ring, Side side,
                                const CheckOptions& options = {});
PropertyVerdict check_dubrovin(const RingDescriptor& ring, const CheckOptions& options = {});
PropertyVerdict check_idempotent_unit_criterion(const RingDescriptor& ring,
                                                const CheckOptions& options = {});

/// Commutativity of a finite ring by exhaustive comparison, or structural
/// for infinite rings (unknown when no rule applies).
Verdict check_commutative(const RingDescriptor& ring);

}  // namespace ringlab
