#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <variant>
#include <vector>

#include "ringlab/quadratic.hpp"
#include "ringlab/skew_poly.hpp"

namespace ringlab {

/// A ring element in canonical form. The payload alternative is determined
/// by the ring the element belongs to:
///   residue in [0, n)         ModularRing
///   mpz_class                 IntegerRing
///   QuadraticInteger          QuadraticIntegerRing
///   QuadraticValue            QuadraticFieldRing
///   SkewPolynomial            SkewSubringS
///   Composite                 MatrixRing / UpperTriangularRing (k*k entries,
///                             row-major) and ProductRing (one per factor)
/// Rings construct only canonical payloads, so equality is payload equality.
struct Element {
  using Composite = std::vector<Element>;
  using Payload = std::variant<std::uint64_t, mpz_class, QuadraticInteger,
                               QuadraticValue, SkewPolynomial, Composite>;

  Payload payload;

  Element() : payload(std::uint64_t{0}) {}
  explicit Element(Payload p) : payload(std::move(p)) {}

  std::uint64_t residue() const { return std::get<std::uint64_t>(payload); }
  const mpz_class& integer() const { return std::get<mpz_class>(payload); }
  const QuadraticInteger& quadratic_integer() const {
    return std::get<QuadraticInteger>(payload);
  }
  const QuadraticValue& quadratic() const { return std::get<QuadraticValue>(payload); }
  const SkewPolynomial& skew() const { return std::get<SkewPolynomial>(payload); }
  const Composite& parts() const { return std::get<Composite>(payload); }
};

bool operator==(const Element& x, const Element& y);
inline bool operator!=(const Element& x, const Element& y) { return !(x == y); }
/// Strict weak order on payloads (for ordered containers only; the
/// enumeration order of a finite ring is Ring::index_of).
bool operator<(const Element& x, const Element& y);

}  // namespace ringlab
