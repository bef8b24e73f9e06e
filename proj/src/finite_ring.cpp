#include "ringlab/finite_ring.hpp"

#include <map>
#include <mutex>
#include <string>

#include "ringlab/error.hpp"

namespace ringlab {

const char* to_string(Side side) { return side == Side::left ? "left" : "right"; }

FiniteRing::FiniteRing(RingHandle ring) : ring_(std::move(ring)) {
  if (!ring_->is_finite()) {
    throw RingError(ErrorKind::InfiniteRing, ring_->name() + " is infinite");
  }
  const std::uint64_t order = ring_->order();
  if (order > kMaxOrder) {
    throw RingError(ErrorKind::BudgetExceeded,
                    ring_->name() + " has " + std::to_string(order) +
                        " elements; tables are limited to " + std::to_string(kMaxOrder));
  }
  n_ = static_cast<std::size_t>(order);
  elements_.reserve(n_);
  for (std::uint64_t i = 0; i < order; ++i) elements_.push_back(ring_->element_at(i));

  add_.resize(n_ * n_);
  mul_.resize(n_ * n_);
  neg_.resize(n_);
  for (std::size_t x = 0; x < n_; ++x) {
    neg_[x] = index_of(ring_->neg(elements_[x]));
    for (std::size_t y = 0; y < n_; ++y) {
      add_[x * n_ + y] = index_of(ring_->add(elements_[x], elements_[y]));
      mul_[x * n_ + y] = index_of(ring_->mul(elements_[x], elements_[y]));
    }
  }

  inverse_.assign(n_, kNone);
  for (Index x = 0; x < n_; ++x) {
    for (Index y = 0; y < n_; ++y) {
      if (mul(x, y) == one() && mul(y, x) == one()) {
        inverse_[x] = y;
        units_.push_back(x);
        break;
      }
    }
    for (Index y = 0; y < n_ && commutative_; ++y) {
      if (mul(x, y) != mul(y, x)) commutative_ = false;
    }
  }

  right_.assign(n_, ElementSet(n_));
  left_.assign(n_, ElementSet(n_));
  for (Index a = 0; a < n_; ++a) {
    for (Index r = 0; r < n_; ++r) {
      right_[a].insert(mul(a, r));
      left_[a].insert(mul(r, a));
    }
  }
}

Index FiniteRing::index_of(const Element& e) const {
  return static_cast<Index>(ring_->index_of(e));
}

bool FiniteRing::is_central(Index x) const {
  for (Index y = 0; y < n_; ++y) {
    if (mul(x, y) != mul(y, x)) return false;
  }
  return true;
}

ElementSet FiniteRing::additive_closure(const ElementSet& generators) const {
  ElementSet out(n_);
  out.insert(zero());
  const auto gens = generators.members();
  std::vector<Index> frontier{zero()};
  while (!frontier.empty()) {
    std::vector<Index> next;
    for (Index h : frontier) {
      for (Index g : gens) {
        const Index s = add(h, g);
        if (!out.contains(s)) {
          out.insert(s);
          next.push_back(s);
        }
      }
    }
    frontier = std::move(next);
  }
  return out;
}

ElementSet FiniteRing::two_sided_ideal(Index a) const {
  ElementSet products(n_);
  for (Index r = 0; r < n_; ++r) {
    for (Index s : right_ideal(mul(r, a)).members()) products.insert(s);
  }
  return additive_closure(products);
}

ElementSet FiniteRing::sum(const ElementSet& a, const ElementSet& b) const {
  ElementSet out(n_);
  const auto bm = b.members();
  for (Index x : a.members()) {
    for (Index y : bm) out.insert(add(x, y));
  }
  return out;
}

ElementSet FiniteRing::everything() const {
  ElementSet out(n_);
  for (Index i = 0; i < n_; ++i) out.insert(i);
  return out;
}

bool FiniteRing::comaximal(Index a, Index b, Side side) const {
  // 1 = a x + b y for some x, y  <=>  1 - b y in aR for some y.
  const ElementSet& ideal = principal_ideal(a, side);
  for (Index y = 0; y < n_; ++y) {
    const Index by = side == Side::right ? mul(b, y) : mul(y, b);
    if (ideal.contains(sub(one(), by))) return true;
  }
  return false;
}

FiniteRingHandle compile_finite(const RingDescriptor& descriptor) {
  static std::mutex mutex;
  static std::map<std::string, FiniteRingHandle> cache;
  const std::string key = descriptor.to_string();
  {
    std::lock_guard<std::mutex> lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  auto compiled = std::make_shared<const FiniteRing>(make_ring(descriptor));
  std::lock_guard<std::mutex> lock(mutex);
  return cache.emplace(key, std::move(compiled)).first->second;
}

std::vector<Element> units(const RingDescriptor& descriptor) {
  switch (descriptor.kind()) {
    case RingKind::Integer:
    case RingKind::QuadraticInteger:
    case RingKind::SkewS: {
      // Norm rule: a unit has norm 1 (and degree 0 in S), leaving only +-1.
      const RingHandle r = make_ring(descriptor);
      return {r->one(), r->neg(r->one())};
    }
    default:
      break;
  }
  if (!descriptor.is_finite()) {
    throw RingError(ErrorKind::InfiniteRing,
                    "no exact unit rule for " + descriptor.to_string());
  }
  const auto f = compile_finite(descriptor);
  std::vector<Element> out;
  for (Index u : f->units()) out.push_back(f->element(u));
  return out;
}

namespace {

std::vector<Element> to_elements(const FiniteRing& f, const ElementSet& s) {
  std::vector<Element> out;
  for (Index i : s.members()) out.push_back(f.element(i));
  return out;
}

}  // namespace

std::vector<Element> principal_ideal(const RingDescriptor& descriptor, const Element& a,
                                     Side side) {
  const auto f = compile_finite(descriptor);
  return to_elements(*f, f->principal_ideal(f->index_of(a), side));
}

std::vector<Element> two_sided_ideal(const RingDescriptor& descriptor, const Element& a) {
  const auto f = compile_finite(descriptor);
  return to_elements(*f, f->two_sided_ideal(f->index_of(a)));
}

}  // namespace ringlab
