#pragma once

// Witness-producing procedures extracted from the proofs. Every search is
// enumeration-order minimal and every result is re-verified with the generic
// ring arithmetic before it is returned.

#include <utility>

#include "ringlab/element.hpp"
#include "ringlab/ring_descriptor.hpp"

namespace ringlab {

/// Least t with a + b*t a unit. Throws NotComaximal when aR + bR != R and
/// NoWitness when no t exists (R is not of stable range 1).
Element sr1_witness(const RingDescriptor& ring, const Element& a, const Element& b);

struct TransferWitness {
  Element a, b;
  /// a + b*t = u, a unit
  Element t, u;
  /// x*a + t = w, a unit
  Element x, w;
  /// b*w = y*b
  Element y;
  /// p = 1 - b*x, q = y, p*a + q*b = u_prime, a unit
  Element p, q, u_prime;
};

/// From aR + bR = R builds p, q with p*a + q*b a unit, so Ra + Rb = R.
/// Throws NotComaximal, or ConstructionFailed with the failing step (1..4)
/// as detail when a hypothesis (stable range 1, left Kazimirsky) breaks.
TransferWitness theorem1_transfer(const RingDescriptor& ring, const Element& a, const Element& b);

/// Least unit v with v*a = a*u. Throws NotUnit when u is not a unit,
/// HypothesisFailed when Ra != Rau, NoWitness when no such v exists.
Element prop1_unit_commute(const RingDescriptor& ring, const Element& a, const Element& u);

struct Prop2Witness {
  /// 1 + x*a
  Element u;
  /// 1 + a*x, with y*a = a*u
  Element y;
};

/// Needs no ring hypothesis beyond 1 + x*a being a unit (NotUnit otherwise).
Prop2Witness prop2_witness(const RingDescriptor& ring, const Element& a, const Element& x);

/// Units u, w with u + w = a, u least. Throws ZeroInput for a = 0 and
/// NoDecomposition when none exists.
std::pair<Element, Element> prop4_unit_sum(const RingDescriptor& ring, const Element& a);

struct Prop5Witness {
  Element u, w;
  /// u*b = b*x, w*b = b*y
  Element x, y;
  /// x + y, with a*b = b*z
  Element z;
};

/// Throws ZeroInput / NoDecomposition from prop4_unit_sum, NoFactorization
/// when u*b or w*b is not in bR.
Prop5Witness prop5_duo_witness(const RingDescriptor& ring, const Element& a, const Element& b);

}  // namespace ringlab
