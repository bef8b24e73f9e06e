#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "ringlab/element.hpp"
#include "ringlab/ring_descriptor.hpp"

namespace ringlab {

class LiteralScanner;

/// Exact arithmetic provider for one ring. All operations are pure and
/// return canonical elements.
///
/// Finite rings are totally ordered ("enumeration order"): index 0 is zero,
/// index 1 is one, and the remaining elements follow odometer order on their
/// components (the first component varies fastest; components are ranked by
/// their own ring's enumeration index). For Zn this is 0, 1, ..., n-1.
class Ring {
 public:
  explicit Ring(RingDescriptor descriptor) : descriptor_(std::move(descriptor)) {}
  virtual ~Ring() = default;

  Ring(const Ring&) = delete;
  Ring& operator=(const Ring&) = delete;

  const RingDescriptor& descriptor() const { return descriptor_; }
  std::string name() const { return descriptor_.to_string(); }
  bool is_finite() const { return descriptor_.is_finite(); }

  virtual Element zero() const = 0;
  virtual Element one() const = 0;
  virtual Element add(const Element& x, const Element& y) const = 0;
  virtual Element neg(const Element& x) const = 0;
  virtual Element mul(const Element& x, const Element& y) const = 0;
  /// The image of n * 1.
  virtual Element from_integer(long n) const = 0;
  /// True iff the payload is a canonical element of this ring.
  virtual bool contains(const Element& x) const = 0;
  virtual std::string format(const Element& x) const = 0;
  virtual Element parse_literal(LiteralScanner& in) const = 0;
  /// Structural commutativity (true for Z, Zn, quadratic rings, products of
  /// commutative rings, 1x1 matrices over commutative rings).
  virtual bool known_commutative() const = 0;

  Element sub(const Element& x, const Element& y) const { return add(x, neg(y)); }

  /// Throws InfiniteRing for infinite rings and BudgetExceeded when |R|
  /// does not fit in 62 bits.
  std::uint64_t order() const;
  Element element_at(std::uint64_t index) const;
  std::uint64_t index_of(const Element& x) const;

 protected:
  virtual std::uint64_t odometer_rank(const Element& x) const;
  virtual Element odometer_element(std::uint64_t rank) const;

 private:
  std::uint64_t one_rank() const;

  RingDescriptor descriptor_;
};

using RingHandle = std::shared_ptr<const Ring>;

/// Builds the arithmetic provider for a descriptor.
RingHandle make_ring(const RingDescriptor& descriptor);

/// Every element of a finite ring in enumeration order. Throws InfiniteRing.
std::vector<Element> enumerate_elements(const RingDescriptor& descriptor);

}  // namespace ringlab
