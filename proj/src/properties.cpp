#include "ringlab/properties.hpp"

#include <gmpxx.h>

#include <stdexcept>
#include <unordered_set>

#include "ringlab/error.hpp"
#include "ringlab/ideals.hpp"
#include "ringlab/orbit.hpp"
#include "ringlab/reduction.hpp"
#include "ringlab/skew_poly.hpp"

namespace ringlab {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::holds:
      return "holds";
    case Verdict::fails:
      return "fails";
    case Verdict::unknown:
      return "unknown";
  }
  return "unknown";
}

const Element* PropertyVerdict::find(std::string_view name) const {
  for (const auto& w : witness) {
    if (w.name == name) return &w.value;
  }
  return nullptr;
}

const std::vector<std::string>& property_ids() {
  static const std::vector<std::string> ids = {
      "bezout",         "hermite",         "sr1",          "unit-sr1",
      "kazimirsky-left", "kazimirsky-right", "duo-left",    "duo-right",
      "quasi-duo-left", "quasi-duo-right", "unit-central", "dubrovin",
      "idempotent-unit", "edr-small"};
  return ids;
}

namespace {

PropertyVerdict start(std::string id, const RingDescriptor& ring) {
  PropertyVerdict v;
  v.property = std::move(id);
  v.ring = ring;
  return v;
}

std::string side_suffix(Side side) { return side == Side::left ? "-left" : "-right"; }

PropertyVerdict over_budget(PropertyVerdict v, const std::string& why) {
  v.verdict = Verdict::unknown;
  v.budget_exceeded = true;
  v.note = why;
  return v;
}

// Runs a finite-ring checker, mapping table-size and search-space limits to
// an unknown verdict. `space` is evaluated once the ring is compiled.
template <class Space, class Body>
PropertyVerdict run_finite(PropertyVerdict v, const CheckOptions& options, Space&& space,
                           Body&& body) {
  FiniteRingHandle f;
  try {
    f = compile_finite(v.ring);
  } catch (const RingError& e) {
    if (e.kind() == ErrorKind::BudgetExceeded) return over_budget(std::move(v), e.what());
    throw;
  }
  std::uint64_t size = 0;
  try {
    size = space(*f);
  } catch (const RingError& e) {
    if (e.kind() == ErrorKind::BudgetExceeded) return over_budget(std::move(v), e.what());
    throw;
  }
  if (size > options.budget) {
    return over_budget(std::move(v), "search space of " + std::to_string(size) +
                                         " tuples exceeds budget of " +
                                         std::to_string(options.budget));
  }
  v.budget_consumed = size;
  try {
    body(*f, v);
  } catch (const RingError& e) {
    if (e.kind() == ErrorKind::BudgetExceeded) return over_budget(std::move(v), e.what());
    throw;
  }
  return v;
}

void add_witness(PropertyVerdict& v, const FiniteRing& f, std::string name, Index i) {
  v.witness.push_back({std::move(name), f.element(i)});
}

void mark(PropertyVerdict& v, bool failed, std::string note_ok, std::string note_fail) {
  v.verdict = failed ? Verdict::fails : Verdict::holds;
  v.note = failed ? std::move(note_fail) : std::move(note_ok);
}

// ---------------------------------------------------------------------------
// Infinite rings

// Rational integers 0, 1, -1, 2, -2, ... up to `height`.
std::vector<long> integer_sample(long height) {
  std::vector<long> out{0};
  for (long k = 1; k <= height; ++k) {
    out.push_back(k);
    out.push_back(-k);
  }
  return out;
}

bool integer_like(const RingDescriptor& ring) {
  return ring.kind() == RingKind::Integer || ring.kind() == RingKind::QuadraticInteger;
}

// Searches integer pairs (a, b) in sample order for a comaximal pair
// violating `bad`. Comaximality over Z (and hence in Z[w]) is certified by
// Bezout coefficients. Units of Z and Z[w] are exactly +-1.
template <class Bad>
PropertyVerdict integer_pair_search(PropertyVerdict v, const CheckOptions& options, Bad&& bad,
                                    const std::string& what) {
  long height = 12;
  while (height > 0 && static_cast<std::uint64_t>((2 * height + 1) * (2 * height + 1)) >
                           options.budget) {
    --height;
  }
  const RingHandle r = make_ring(v.ring);
  const auto sample = integer_sample(height);
  std::uint64_t examined = 0;
  for (long a : sample) {
    for (long b : sample) {
      ++examined;
      mpz_class g, x, y;
      const mpz_class ma(a), mb(b);
      mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), ma.get_mpz_t(), mb.get_mpz_t());
      if (g != 1) continue;
      if (!bad(a, b)) continue;
      v.verdict = Verdict::fails;
      v.budget_consumed = examined;
      v.witness = {{"a", r->from_integer(a)},
                   {"b", r->from_integer(b)},
                   {"x", r->from_integer(x.get_si())},
                   {"y", r->from_integer(y.get_si())}};
      v.note = what + "; a*x + b*y = 1 certifies comaximality; units are {1,-1}";
      return v;
    }
  }
  v.budget_consumed = examined;
  v.verdict = Verdict::unknown;
  v.note = "no counterexample among integer pairs of height <= " + std::to_string(height);
  return v;
}

bool divides(long b, long c) { return b == 0 ? c == 0 : c % b == 0; }

PropertyVerdict infinite_verdict(PropertyVerdict v, const CheckOptions& options) {
  const RingDescriptor& ring = v.ring;
  const std::string& id = v.property;
  const bool commutative = make_ring(ring)->known_commutative();
  const bool field = ring.kind() == RingKind::QuadraticField;
  const bool commutative_law = id.rfind("kazimirsky", 0) == 0 || id.rfind("duo", 0) == 0 ||
                               id.rfind("quasi-duo", 0) == 0 || id == "unit-central" ||
                               id == "dubrovin";

  if (commutative && commutative_law) {
    v.verdict = Verdict::holds;
    v.note = id == "dubrovin" ? "exact: commutative ring, RaR = aR = Ra (b = a)"
                              : "exact: commutative ring";
    return v;
  }
  if (field && (id == "bezout" || id == "hermite" || id == "sr1" || id == "unit-sr1" ||
                id == "idempotent-unit" || id == "edr-small")) {
    v.verdict = Verdict::holds;
    v.note = "exact: Q(sqrt(-7)) is a field with infinitely many units";
    return v;
  }
  if (ring.kind() == RingKind::Integer &&
      (id == "bezout" || id == "hermite" || id == "edr-small")) {
    v.verdict = Verdict::holds;
    v.note = "exact: Z is a principal ideal domain (extended gcd, Smith normal form)";
    return v;
  }
  if (ring.kind() == RingKind::SkewS &&
      (id == "unit-central" || id == "kazimirsky-left" || id == "kazimirsky-right")) {
    // Units of S are exactly {1, -1}; -1 is central. Corroborate on the grid.
    const SkewGrid grid(ring.max_degree(), ring.height());
    const std::uint64_t n = std::min<std::uint64_t>(grid.size(), options.budget);
    const SkewPolynomial minus_one = SkewPolynomial::constant(QuadraticValue(-1));
    const auto bad = first_match(
        n,
        [&](std::uint64_t i) {
          const SkewPolynomial a = grid.at(i);
          return skew_mul(minus_one, a) != skew_mul(a, minus_one);
        },
        options.exec);
    v.budget_consumed = n;
    if (bad) {
      const RingHandle r = make_ring(ring);
      v.verdict = Verdict::fails;
      v.witness = {{"u", r->neg(r->one())}, {"a", Element(grid.at(*bad))}};
      v.note = "-1 does not commute with a sampled element";
      return v;
    }
    v.verdict = Verdict::holds;
    v.note = "exact: the only units of S are 1 and -1, both central";
    if (id != "unit-central") v.note += "; unit-central implies the Kazimirsky condition";
    v.note += "; corroborated on " + std::to_string(n) + " grid elements";
    return v;
  }
  if (integer_like(ring)) {
    if (id == "sr1") {
      return integer_pair_search(
          std::move(v), options,
          [](long a, long b) { return !divides(b, 1 - a) && !divides(b, -1 - a); },
          "a + b*t = +-1 has no solution t");
    }
    if (id == "unit-sr1") {
      return integer_pair_search(
          std::move(v), options,
          [](long a, long b) {
            for (long u : {1L, -1L}) {
              const long s = a + b * u;
              if (s == 1 || s == -1) return false;
            }
            return true;
          },
          "a + b*u is not a unit for u in {1,-1}");
    }
    if (id == "idempotent-unit") {
      // Idempotents of Z and Z[w] are 0 and 1. e = f = 1: u + v = 1 has no
      // solution with u, v in {1, -1}.
      const RingHandle r = make_ring(ring);
      v.verdict = Verdict::fails;
      v.budget_consumed = 4;
      v.witness = {{"e", r->one()}, {"f", r->one()}};
      v.note = "eR + fR = R but e*u + f*v = 1 has no solution in units {1,-1}";
      return v;
    }
  }
  v.verdict = Verdict::unknown;
  v.note = "no exact rule for infinite ring " + ring.to_string();
  return v;
}

template <class Finite>
PropertyVerdict dispatch(std::string id, const RingDescriptor& ring, const CheckOptions& options,
                         Finite&& finite) {
  PropertyVerdict v = start(std::move(id), ring);
  if (!ring.is_finite()) return infinite_verdict(std::move(v), options);
  return finite(std::move(v));
}

}  // namespace

PropertyVerdict check_bezout(const RingDescriptor& ring, const CheckOptions& options) {
  return dispatch("bezout", ring, options, [&](PropertyVerdict v) {
    return run_finite(
        std::move(v), options,
        [](const FiniteRing& f) { return std::uint64_t{f.order()} * f.order() * f.order(); },
        [&](const FiniteRing& f, PropertyVerdict& out) {
          const std::size_t n = f.order();
          std::unordered_set<ElementSet, ElementSetHash> right, left;
          for (Index d = 0; d < n; ++d) {
            right.insert(f.right_ideal(d));
            left.insert(f.left_ideal(d));
          }
          auto right_bad = [&](Index a, Index b) {
            return !right.count(f.sum(f.right_ideal(a), f.right_ideal(b)));
          };
          auto left_bad = [&](Index a, Index b) {
            return !left.count(f.sum(f.left_ideal(a), f.left_ideal(b)));
          };
          const auto hit = first_match(
              std::uint64_t{n} * n,
              [&](std::uint64_t p) {
                const Index a = static_cast<Index>(p / n), b = static_cast<Index>(p % n);
                return right_bad(a, b) || left_bad(a, b);
              },
              options.exec);
          if (hit) {
            const Index a = static_cast<Index>(*hit / n), b = static_cast<Index>(*hit % n);
            add_witness(out, f, "a", a);
            add_witness(out, f, "b", b);
            mark(out, true, "", right_bad(a, b) ? "aR + bR is not principal"
                                                : "Ra + Rb is not principal");
          } else {
            mark(out, false, "every aR + bR and Ra + Rb is principal", "");
          }
        });
  });
}

PropertyVerdict check_hermite(const RingDescriptor& ring, const CheckOptions& options) {
  return dispatch("hermite", ring, options, [&](PropertyVerdict v) {
    return run_finite(
        std::move(v), options,
        [](const FiniteRing& f) { return 2 * std::uint64_t{f.order()} * f.order(); },
        [&](const FiniteRing& f, PropertyVerdict& out) {
          const auto handle = compile_finite(f.descriptor());
          const OrbitSpace row_space(handle, {1, 2, false, true}, options.budget);
          const OrbitSpace col_space(handle, {2, 1, true, false}, options.budget);
          const OrbitAtlas row_atlas(row_space);
          const OrbitAtlas col_atlas(col_space);
          const std::size_t n = f.order();
          auto row_bad = [&](Index a, Index b) {
            return !row_atlas.reachable(row_space.encode({1, 2, {a, b}}));
          };
          auto col_bad = [&](Index a, Index b) {
            return !col_atlas.reachable(col_space.encode({2, 1, {a, b}}));
          };
          const auto hit = first_match(
              std::uint64_t{n} * n,
              [&](std::uint64_t p) {
                const Index a = static_cast<Index>(p / n), b = static_cast<Index>(p % n);
                return row_bad(a, b) || col_bad(a, b);
              },
              options.exec);
          if (hit) {
            const Index a = static_cast<Index>(*hit / n), b = static_cast<Index>(*hit % n);
            add_witness(out, f, "a", a);
            add_witness(out, f, "b", b);
            mark(out, true, "",
                 row_bad(a, b) ? "(a,b)P = (d,0) unreachable by column operations"
                               : "Q(a,b)^T = (c,0)^T unreachable by row operations");
          } else {
            mark(out, false, "every 1x2 and 2x1 matrix reduces", "");
          }
        });
  });
}

PropertyVerdict check_stable_range_1(const RingDescriptor& ring, const CheckOptions& options) {
  return dispatch("sr1", ring, options, [&](PropertyVerdict v) {
    return run_finite(
        std::move(v), options,
        [](const FiniteRing& f) { return std::uint64_t{f.order()} * f.order() * f.order(); },
        [&](const FiniteRing& f, PropertyVerdict& out) {
          const std::size_t n = f.order();
          const auto hit = first_match(
              std::uint64_t{n} * n,
              [&](std::uint64_t p) {
                const Index a = static_cast<Index>(p / n), b = static_cast<Index>(p % n);
                if (!f.comaximal(a, b, Side::right)) return false;
                for (Index t = 0; t < n; ++t) {
                  if (f.is_unit(f.add(a, f.mul(b, t)))) return false;
                }
                return true;
              },
              options.exec);
          if (hit) {
            add_witness(out, f, "a", static_cast<Index>(*hit / n));
            add_witness(out, f, "b", static_cast<Index>(*hit % n));
          }
          mark(out, hit.has_value(), "every comaximal pair admits t with a + b*t a unit",
               "aR + bR = R but a + b*t is never a unit");
        });
  });
}

PropertyVerdict check_unit_stable_range_1(const RingDescriptor& ring,
                                          const CheckOptions& options) {
  return dispatch("unit-sr1", ring, options, [&](PropertyVerdict v) {
    return run_finite(
        std::move(v), options,
        [](const FiniteRing& f) {
          return std::uint64_t{f.order()} * f.order() * f.units().size();
        },
        [&](const FiniteRing& f, PropertyVerdict& out) {
          const std::size_t n = f.order();
          const auto hit = first_match(
              std::uint64_t{n} * n,
              [&](std::uint64_t p) {
                const Index a = static_cast<Index>(p / n), b = static_cast<Index>(p % n);
                if (!f.comaximal(a, b, Side::right)) return false;
                for (Index u : f.units()) {
                  if (f.is_unit(f.add(a, f.mul(b, u)))) return false;
                }
                return true;
              },
              options.exec);
          if (hit) {
            add_witness(out, f, "a", static_cast<Index>(*hit / n));
            add_witness(out, f, "b", static_cast<Index>(*hit % n));
          }
          mark(out, hit.has_value(), "every comaximal pair admits a unit u with a + b*u a unit",
               "aR + bR = R but a + b*u is a unit for no unit u");
        });
  });
}

PropertyVerdict check_kazimirsky(const RingDescriptor& ring, Side side,
                                 const CheckOptions& options) {
  return dispatch("kazimirsky" + side_suffix(side), ring, options, [&](PropertyVerdict v) {
    return run_finite(
        std::move(v), options,
        [](const FiniteRing& f) {
          return std::uint64_t{f.order()} * f.units().size() * f.order();
        },
        [&](const FiniteRing& f, PropertyVerdict& out) {
          const std::size_t n = f.order();
          const auto& units = f.units();
          const std::uint64_t count = std::uint64_t{n} * units.size();
          // right: uaR within aR;  left: Rau within Ra.
          auto translate = [&](Index a, Index u) {
            return side == Side::right ? f.mul(u, a) : f.mul(a, u);
          };
          const auto hit = first_match(
              count,
              [&](std::uint64_t p) {
                const Index a = static_cast<Index>(p / units.size());
                const Index u = units[p % units.size()];
                return !f.principal_ideal(translate(a, u), side)
                            .subset_of(f.principal_ideal(a, side));
              },
              options.exec);
          if (hit) {
            const Index a = static_cast<Index>(*hit / units.size());
            const Index u = units[*hit % units.size()];
            const Index ua = translate(a, u);
            Index r = 0;
            while (f.principal_ideal(a, side)
                       .contains(side == Side::right ? f.mul(ua, r) : f.mul(r, ua))) {
              ++r;
            }
            add_witness(out, f, "a", a);
            add_witness(out, f, "u", u);
            add_witness(out, f, "r", r);
          }
          mark(out, hit.has_value(),
               side == Side::right ? "uaR is contained in aR for every a and unit u"
                                   : "Rau is contained in Ra for every a and unit u",
               side == Side::right ? "u*a*r is not in aR" : "r*a*u is not in Ra");
        });
  });
}

PropertyVerdict check_duo(const RingDescriptor& ring, Side side, const CheckOptions& options) {
  return dispatch("duo" + side_suffix(side), ring, options, [&](PropertyVerdict v) {
    return run_finite(
        std::move(v), options,
        [](const FiniteRing& f) { return std::uint64_t{f.order()} * f.order(); },
        [&](const FiniteRing& f, PropertyVerdict& out) {
          const std::size_t n = f.order();
          // right duo: r*a in aR;  left duo: a*r in Ra.
          const auto hit = first_match(
              std::uint64_t{n} * n,
              [&](std::uint64_t p) {
                const Index a = static_cast<Index>(p / n), r = static_cast<Index>(p % n);
                return side == Side::right ? !f.right_ideal(a).contains(f.mul(r, a))
                                           : !f.left_ideal(a).contains(f.mul(a, r));
              },
              options.exec);
          if (hit) {
            add_witness(out, f, "a", static_cast<Index>(*hit / n));
            add_witness(out, f, "r", static_cast<Index>(*hit % n));
          }
          mark(out, hit.has_value(),
               side == Side::right ? "every principal right ideal is two-sided"
                                   : "every principal left ideal is two-sided",
               side == Side::right ? "r*a is not in aR" : "a*r is not in Ra");
        });
  });
}

PropertyVerdict check_unit_central(const RingDescriptor& ring, const CheckOptions& options) {
  return dispatch("unit-central", ring, options, [&](PropertyVerdict v) {
    return run_finite(
        std::move(v), options,
        [](const FiniteRing& f) { return std::uint64_t{f.units().size()} * f.order(); },
        [&](const FiniteRing& f, PropertyVerdict& out) {
          const std::size_t n = f.order();
          const auto& units = f.units();
          const auto hit = first_match(
              std::uint64_t{units.size()} * n,
              [&](std::uint64_t p) {
                const Index u = units[p / n], a = static_cast<Index>(p % n);
                return f.mul(u, a) != f.mul(a, u);
              },
              options.exec);
          if (hit) {
            add_witness(out, f, "u", units[*hit / n]);
            add_witness(out, f, "a", static_cast<Index>(*hit % n));
          }
          mark(out, hit.has_value(), "every unit is central", "u*a != a*u");
        });
  });
}

PropertyVerdict check_quasi_duo(const RingDescriptor& ring, Side side,
                                const CheckOptions& options) {
  return dispatch("quasi-duo" + side_suffix(side), ring, options, [&](PropertyVerdict v) {
    std::vector<OneSidedIdeal> maximal;
    return run_finite(
        std::move(v), options,
        [&](const FiniteRing& f) {
          maximal = enumerate_maximal_one_sided_ideals(f, side);
          return std::uint64_t{maximal.size()} * f.order() * f.order();
        },
        [&](const FiniteRing& f, PropertyVerdict& out) {
          const std::size_t n = f.order();
          // A maximal left ideal M is two-sided iff m*r in M for all m, r.
          auto escapes = [&](const OneSidedIdeal& m, Index x, Index r) {
            const Index p = side == Side::left ? f.mul(x, r) : f.mul(r, x);
            return m.members.contains(x) && !m.members.contains(p);
          };
          const auto hit = first_match(
              std::uint64_t{maximal.size()} * n * n,
              [&](std::uint64_t p) {
                return escapes(maximal[p / (n * n)], static_cast<Index>(p / n % n),
                               static_cast<Index>(p % n));
              },
              options.exec);
          if (hit) {
            const OneSidedIdeal& m = maximal[*hit / (n * n)];
            for (std::size_t g = 0; g < m.generators.size(); ++g) {
              add_witness(out, f, "g" + std::to_string(g + 1), m.generators[g]);
            }
            add_witness(out, f, "m", static_cast<Index>(*hit / n % n));
            add_witness(out, f, "r", static_cast<Index>(*hit % n));
          }
          mark(out, hit.has_value(),
               "all " + std::to_string(maximal.size()) + " maximal " + to_string(side) +
                   " ideals are two-sided",
               std::string("the maximal ") + to_string(side) + " ideal generated by g1.. " +
                   (side == Side::left ? "contains m but not m*r" : "contains m but not r*m"));
        });
  });
}

PropertyVerdict check_dubrovin(const RingDescriptor& ring, const CheckOptions& options) {
  return dispatch("dubrovin", ring, options, [&](PropertyVerdict v) {
    return run_finite(
        std::move(v), options,
        [](const FiniteRing& f) { return std::uint64_t{f.order()} * f.order(); },
        [&](const FiniteRing& f, PropertyVerdict& out) {
          const std::size_t n = f.order();
          const auto hit = first_match(
              n,
              [&](std::uint64_t p) {
                const ElementSet ideal = f.two_sided_ideal(static_cast<Index>(p));
                for (Index b = 0; b < n; ++b) {
                  if (f.right_ideal(b) == ideal && f.left_ideal(b) == ideal) return false;
                }
                return true;
              },
              options.exec);
          if (hit) add_witness(out, f, "a", static_cast<Index>(*hit));
          mark(out, hit.has_value(), "every RaR equals bR = Rb for some b",
               "no b has RaR = bR = Rb");
        });
  });
}

PropertyVerdict check_idempotent_unit_criterion(const RingDescriptor& ring,
                                                const CheckOptions& options) {
  return dispatch("idempotent-unit", ring, options, [&](PropertyVerdict v) {
    std::vector<Index> idempotents;
    return run_finite(
        std::move(v), options,
        [&](const FiniteRing& f) {
          for (Index e = 0; e < f.order(); ++e) {
            if (f.mul(e, e) == e) idempotents.push_back(e);
          }
          const std::uint64_t e = idempotents.size(), u = f.units().size();
          return e * e * u * u;
        },
        [&](const FiniteRing& f, PropertyVerdict& out) {
          const std::size_t k = idempotents.size();
          const auto& units = f.units();
          const auto hit = first_match(
              std::uint64_t{k} * k,
              [&](std::uint64_t p) {
                const Index e = idempotents[p / k], g = idempotents[p % k];
                if (!f.comaximal(e, g, Side::right)) return false;
                for (Index u : units) {
                  for (Index w : units) {
                    if (f.add(f.mul(e, u), f.mul(g, w)) == FiniteRing::one()) return false;
                  }
                }
                return true;
              },
              options.exec);
          if (hit) {
            add_witness(out, f, "e", idempotents[*hit / k]);
            add_witness(out, f, "f", idempotents[*hit % k]);
          }
          mark(out, hit.has_value(),
               "every comaximal idempotent pair has units u, v with e*u + f*v = 1",
               "eR + fR = R but e*u + f*v = 1 has no solution in units");
        });
  });
}

Verdict check_commutative(const RingDescriptor& ring) {
  if (ring.is_finite()) {
    return compile_finite(ring)->is_commutative() ? Verdict::holds : Verdict::fails;
  }
  if (make_ring(ring)->known_commutative()) return Verdict::holds;
  if (ring.kind() == RingKind::SkewS) return Verdict::fails;
  return Verdict::unknown;
}

PropertyVerdict check_property(std::string_view id, const RingDescriptor& ring,
                               const CheckOptions& options) {
  if (id == "bezout") return check_bezout(ring, options);
  if (id == "hermite") return check_hermite(ring, options);
  if (id == "sr1") return check_stable_range_1(ring, options);
  if (id == "unit-sr1") return check_unit_stable_range_1(ring, options);
  if (id == "kazimirsky-left") return check_kazimirsky(ring, Side::left, options);
  if (id == "kazimirsky-right") return check_kazimirsky(ring, Side::right, options);
  if (id == "duo-left") return check_duo(ring, Side::left, options);
  if (id == "duo-right") return check_duo(ring, Side::right, options);
  if (id == "quasi-duo-left") return check_quasi_duo(ring, Side::left, options);
  if (id == "quasi-duo-right") return check_quasi_duo(ring, Side::right, options);
  if (id == "unit-central") return check_unit_central(ring, options);
  if (id == "dubrovin") return check_dubrovin(ring, options);
  if (id == "idempotent-unit") return check_idempotent_unit_criterion(ring, options);
  if (id == "edr-small") {
    if (!ring.is_finite()) {
      return infinite_verdict(start("edr-small", ring), options);
    }
    return check_edr_small(ring, 2, 2, options);
  }
  throw std::invalid_argument("unknown property identifier: " + std::string(id));
}

}  // namespace ringlab
