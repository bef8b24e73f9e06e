#pragma once

// Shared helpers and brute-force oracles for the test suites. Oracles use
// only generic ring arithmetic over enumerate_elements, never the compiled
// tables.

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "ringlab/element.hpp"
#include "ringlab/literal.hpp"
#include "ringlab/ring.hpp"
#include "ringlab/ring_spec.hpp"

namespace testing {

using namespace ringlab;

inline RingDescriptor spec(const std::string& text) { return parse_ring_spec(text); }

inline Element el(const RingDescriptor& ring, const std::string& text) {
  return parse_element(*make_ring(ring), text);
}

inline std::string fmt(const RingDescriptor& ring, const Element& e) {
  return make_ring(ring)->format(e);
}

inline std::mt19937_64 rng(std::uint64_t seed) { return std::mt19937_64(seed); }

/// Two-sided units by scanning all pairs.
inline std::vector<Element> oracle_units(const RingDescriptor& ring) {
  const RingHandle r = make_ring(ring);
  const auto all = enumerate_elements(ring);
  std::vector<Element> out;
  for (const auto& x : all) {
    for (const auto& y : all) {
      if (r->mul(x, y) == r->one() && r->mul(y, x) == r->one()) {
        out.push_back(x);
        break;
      }
    }
  }
  return out;
}

/// Memoized per ring; the suites are single-threaded.
inline bool oracle_is_unit(const RingDescriptor& ring, const Element& x) {
  static std::map<std::string, std::set<Element>> cache;
  auto it = cache.find(ring.to_string());
  if (it == cache.end()) {
    const auto us = oracle_units(ring);
    it = cache.emplace(ring.to_string(), std::set<Element>(us.begin(), us.end())).first;
  }
  return it->second.count(x) > 0;
}

/// {a r} for side right, {r a} for side left.
inline std::set<Element> oracle_ideal(const RingDescriptor& ring, const Element& a, bool right) {
  const RingHandle r = make_ring(ring);
  std::set<Element> out;
  for (const auto& x : enumerate_elements(ring)) out.insert(right ? r->mul(a, x) : r->mul(x, a));
  return out;
}

/// Commutative finite rings of the zoo with at most `max_order` elements.
inline std::vector<std::string> small_commutative_specs() {
  return {"Zn(2)", "Zn(3)", "Zn(4)", "Zn(5)", "Zn(6)", "Zn(7)", "Zn(8)", "Zn(9)",
          "Zn(10)", "Zn(11)", "Zn(12)", "Zn(2)xZn(3)", "Zn(2)xZn(2)", "Zn(4)xZn(3)",
          "Zn(2)xZn(2)xZn(3)", "Zn(6)xZn(6)"};
}

inline std::vector<std::string> finite_zoo_specs() {
  return {"Zn(2)", "Zn(3)", "Zn(4)", "Zn(5)", "Zn(6)", "Zn(7)", "Zn(8)", "Zn(9)",
          "Zn(10)", "Zn(11)", "Zn(12)", "Mat(2,Zn(2))", "Tri(2,Zn(2))", "Zn(2)xZn(3)"};
}

}  // namespace testing
