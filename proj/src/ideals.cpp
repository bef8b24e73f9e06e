#include "ringlab/ideals.hpp"

#include <map>

#include "ringlab/error.hpp"

namespace ringlab {

namespace {

// I + R g (left) or I + g R (right); I must already be an ideal.
ElementSet extend(const FiniteRing& f, const ElementSet& ideal, Index g, Side side) {
  return f.sum(ideal, f.principal_ideal(g, side));
}

}  // namespace

OneSidedIdeal generate_ideal(const FiniteRing& f, Side side, const std::vector<Index>& gens) {
  ElementSet members(f.order());
  members.insert(FiniteRing::zero());
  std::vector<Index> used;
  for (Index g : gens) {
    if (members.contains(g)) continue;
    members = extend(f, members, g, side);
    used.push_back(g);
  }
  // Canonical generator list: greedy in enumeration order over the members.
  std::vector<Index> canonical;
  ElementSet rebuilt(f.order());
  rebuilt.insert(FiniteRing::zero());
  for (Index m : members.members()) {
    if (rebuilt.contains(m)) continue;
    rebuilt = extend(f, rebuilt, m, side);
    canonical.push_back(m);
  }
  return {side, std::move(members), std::move(canonical)};
}

std::vector<OneSidedIdeal> enumerate_one_sided_ideals(const FiniteRing& f, Side side) {
  std::map<ElementSet, bool> seen;
  ElementSet zero(f.order());
  zero.insert(FiniteRing::zero());
  std::vector<ElementSet> work{zero};
  seen.emplace(zero, true);
  while (!work.empty()) {
    const ElementSet ideal = std::move(work.back());
    work.pop_back();
    for (Index g = 0; g < f.order(); ++g) {
      if (ideal.contains(g)) continue;
      ElementSet bigger = extend(f, ideal, g, side);
      if (seen.emplace(bigger, true).second) work.push_back(std::move(bigger));
    }
  }
  std::vector<OneSidedIdeal> out;
  for (const auto& [set, unused] : seen) {
    out.push_back(generate_ideal(f, side, set.members()));
  }
  return out;
}

std::vector<OneSidedIdeal> enumerate_maximal_one_sided_ideals(const FiniteRing& f, Side side) {
  const bool small = f.order() <= 16;
  const bool commutative_medium = f.is_commutative() && f.order() <= 36;
  if (!small && !commutative_medium) {
    throw RingError(ErrorKind::BudgetExceeded,
                    "maximal ideal enumeration supports |R| <= 16, or commutative |R| <= 36");
  }
  const auto all = enumerate_one_sided_ideals(f, side);
  std::vector<OneSidedIdeal> out;
  for (const auto& ideal : all) {
    if (ideal.members.full()) continue;
    bool maximal = true;
    for (const auto& other : all) {
      if (other.members.full() || other.members == ideal.members) continue;
      if (ideal.members.subset_of(other.members)) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(ideal);
  }
  return out;
}

std::vector<OneSidedIdeal> enumerate_maximal_one_sided_ideals(const RingDescriptor& descriptor,
                                                              Side side) {
  return enumerate_maximal_one_sided_ideals(*compile_finite(descriptor), side);
}

bool is_one_sided_ideal(const FiniteRing& f, const ElementSet& set, Side side) {
  if (!set.contains(FiniteRing::zero())) return false;
  const auto members = set.members();
  for (Index x : members) {
    for (Index y : members) {
      if (!set.contains(f.add(x, y))) return false;
    }
    for (Index r = 0; r < f.order(); ++r) {
      if (!set.contains(side == Side::left ? f.mul(r, x) : f.mul(x, r))) return false;
    }
  }
  return true;
}

}  // namespace ringlab
