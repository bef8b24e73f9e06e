#include "ringlab/constructive.hpp"

#include <stdexcept>

#include "ringlab/error.hpp"
#include "ringlab/finite_ring.hpp"

namespace ringlab {

namespace {

struct Context {
  FiniteRingHandle f;
  const Ring& r;

  explicit Context(const RingDescriptor& ring)
      : f(compile_finite(ring)), r(*f->ring()) {}

  Index index(const Element& e, const char* name) const {
    if (!r.contains(e)) {
      throw RingError(ErrorKind::SemanticError,
                      std::string(name) + " is not an element of " + r.name());
    }
    return f->index_of(e);
  }
  const Element& at(Index i) const { return f->element(i); }

  // Generic two-sided unit test, independent of the tables.
  bool unit(const Element& x) const {
    for (const Element& y : f->elements()) {
      if (r.mul(x, y) == r.one() && r.mul(y, x) == r.one()) return true;
    }
    return false;
  }
};

void ensure(bool ok, const char* what) {
  if (!ok) throw std::logic_error(std::string("unverified witness: ") + what);
}

[[noreturn]] void construction_failed(int step, const std::string& what) {
  throw RingError(ErrorKind::ConstructionFailed, "step " + std::to_string(step) + ": " + what,
                  step);
}

}  // namespace

Element sr1_witness(const RingDescriptor& ring, const Element& a, const Element& b) {
  const Context c(ring);
  const FiniteRing& f = *c.f;
  const Index ia = c.index(a, "a"), ib = c.index(b, "b");
  if (!f.comaximal(ia, ib, Side::right)) {
    throw RingError(ErrorKind::NotComaximal, "aR + bR != R");
  }
  for (Index t = 0; t < f.order(); ++t) {
    if (f.is_unit(f.add(ia, f.mul(ib, t)))) {
      ensure(c.unit(c.r.add(a, c.r.mul(b, c.at(t)))), "a + b*t is a unit");
      return c.at(t);
    }
  }
  throw RingError(ErrorKind::NoWitness, "no t makes a + b*t a unit: R is not of stable range 1");
}

TransferWitness theorem1_transfer(const RingDescriptor& ring, const Element& a, const Element& b) {
  const Context c(ring);
  const FiniteRing& f = *c.f;
  const Ring& r = c.r;
  const Index ia = c.index(a, "a"), ib = c.index(b, "b");
  if (!f.comaximal(ia, ib, Side::right)) {
    throw RingError(ErrorKind::NotComaximal, "aR + bR != R");
  }
  const std::size_t n = f.order();

  // 1. t with a + b*t = u a unit.
  Index t = 0;
  while (t < n && !f.is_unit(f.add(ia, f.mul(ib, t)))) ++t;
  if (t == n) construction_failed(1, "no t with a + b*t a unit (stable range 1 fails)");

  // 2. x with x*a + t = w a unit; Ra + Rt = R because u is a unit.
  Index x = 0;
  while (x < n && !f.is_unit(f.add(f.mul(x, ia), t))) ++x;
  if (x == n) construction_failed(2, "no x with x*a + t a unit");
  const Index w = f.add(f.mul(x, ia), t);

  // 3. y with b*w = y*b (left Kazimirsky: Rbw inside Rb).
  const Index bw = f.mul(ib, w);
  Index y = 0;
  while (y < n && f.mul(y, ib) != bw) ++y;
  if (y == n) construction_failed(3, "b*w is not in Rb (left Kazimirsky fails)");

  TransferWitness out;
  out.a = a;
  out.b = b;
  out.t = c.at(t);
  out.u = r.add(a, r.mul(b, out.t));
  out.x = c.at(x);
  out.w = c.at(w);
  out.y = c.at(y);
  out.p = r.sub(r.one(), r.mul(b, out.x));
  out.q = out.y;
  out.u_prime = r.add(r.mul(out.p, a), r.mul(out.q, b));

  // 4. p*a + q*b is a unit.
  if (!c.unit(out.u_prime)) construction_failed(4, "p*a + q*b is not a unit");
  ensure(c.unit(out.u), "a + b*t is a unit");
  ensure(r.add(r.mul(out.x, a), out.t) == out.w && c.unit(out.w), "x*a + t = w is a unit");
  ensure(r.mul(b, out.w) == r.mul(out.y, b), "b*w = y*b");
  return out;
}

Element prop1_unit_commute(const RingDescriptor& ring, const Element& a, const Element& u) {
  const Context c(ring);
  const FiniteRing& f = *c.f;
  const Index ia = c.index(a, "a"), iu = c.index(u, "u");
  if (!f.is_unit(iu)) throw RingError(ErrorKind::NotUnit, "u is not a unit");
  if (f.left_ideal(ia) != f.left_ideal(f.mul(ia, iu))) {
    throw RingError(ErrorKind::HypothesisFailed, "Ra != Rau");
  }
  const Index au = f.mul(ia, iu);
  for (Index v : f.units()) {
    if (f.mul(v, ia) == au) {
      ensure(c.unit(c.at(v)) && c.r.mul(c.at(v), a) == c.r.mul(a, u), "v*a = a*u, v a unit");
      return c.at(v);
    }
  }
  throw RingError(ErrorKind::NoWitness, "no unit v with v*a = a*u");
}

Prop2Witness prop2_witness(const RingDescriptor& ring, const Element& a, const Element& x) {
  const Context c(ring);
  const Ring& r = c.r;
  c.index(a, "a");
  c.index(x, "x");
  Prop2Witness out{r.add(r.one(), r.mul(x, a)), r.add(r.one(), r.mul(a, x))};
  if (!c.unit(out.u)) throw RingError(ErrorKind::NotUnit, "1 + x*a is not a unit");
  ensure(r.mul(out.y, a) == r.mul(a, out.u), "(1 + a*x)*a = a*(1 + x*a)");
  return out;
}

std::pair<Element, Element> prop4_unit_sum(const RingDescriptor& ring, const Element& a) {
  const Context c(ring);
  const FiniteRing& f = *c.f;
  const Index ia = c.index(a, "a");
  if (ia == FiniteRing::zero()) throw RingError(ErrorKind::ZeroInput, "a = 0");
  for (Index u : f.units()) {
    const Index w = f.sub(ia, u);
    if (f.is_unit(w)) {
      const Element& eu = c.at(u);
      const Element& ew = c.at(w);
      ensure(c.unit(eu) && c.unit(ew) && c.r.add(eu, ew) == a, "u + w = a with u, w units");
      return {eu, ew};
    }
  }
  throw RingError(ErrorKind::NoDecomposition, "a is not a sum of two units");
}

Prop5Witness prop5_duo_witness(const RingDescriptor& ring, const Element& a, const Element& b) {
  const auto [u, w] = prop4_unit_sum(ring, a);
  const Context c(ring);
  const FiniteRing& f = *c.f;
  const Ring& r = c.r;
  const Index ib = c.index(b, "b");
  auto factor = [&](const Element& unit, const char* name) {
    const Index target = f.mul(f.index_of(unit), ib);
    for (Index s = 0; s < f.order(); ++s) {
      if (f.mul(ib, s) == target) return c.at(s);
    }
    throw RingError(ErrorKind::NoFactorization,
                    std::string(name) + "*b is not in bR (right Kazimirsky fails)");
  };
  Prop5Witness out{u, w, factor(u, "u"), factor(w, "w"), {}};
  out.z = r.add(out.x, out.y);
  ensure(r.mul(u, b) == r.mul(b, out.x) && r.mul(w, b) == r.mul(b, out.y), "u*b = b*x, w*b = b*y");
  ensure(r.mul(a, b) == r.mul(b, out.z), "a*b = b*z");
  return out;
}

}  // namespace ringlab
