#include "ringlab/zoo.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <tuple>

namespace ringlab {

std::vector<RingDescriptor> builtin_zoo() {
  std::vector<RingDescriptor> out;
  for (std::uint64_t n = 2; n <= 12; ++n) out.push_back(RingDescriptor::modular(n));
  const auto z2 = RingDescriptor::modular(2);
  out.push_back(RingDescriptor::matrix(2, z2));
  out.push_back(RingDescriptor::upper_triangular(2, z2));
  out.push_back(RingDescriptor::product({z2, RingDescriptor::modular(3)}));
  out.push_back(RingDescriptor::quadratic_integers());
  out.push_back(RingDescriptor::skew_s(3, 2));
  return out;
}

std::vector<RingDescriptor> builtin_finite_zoo() {
  std::vector<RingDescriptor> out;
  for (auto& d : builtin_zoo()) {
    if (d.is_finite()) out.push_back(d);
  }
  return out;
}

std::vector<RingDescriptor> generate_finite_rings(std::uint64_t max_order) {
  std::map<std::tuple<std::uint64_t, std::string>, RingDescriptor> found;
  auto add = [&](const RingDescriptor& d) {
    const auto n = d.order();
    if (!n || *n > mpz_class(std::to_string(max_order))) return;
    found.emplace(std::make_tuple(std::stoull(n->get_str()), d.to_string()), d);
  };

  std::vector<RingDescriptor> base;
  for (std::uint64_t n = 2; n <= max_order; ++n) base.push_back(RingDescriptor::modular(n));
  for (std::uint64_t m = 2; m * m * m <= max_order; ++m) {
    base.push_back(RingDescriptor::upper_triangular(2, RingDescriptor::modular(m)));
  }
  for (std::uint64_t m = 2; m * m * m * m <= max_order; ++m) {
    base.push_back(RingDescriptor::matrix(2, RingDescriptor::modular(m)));
  }
  for (const auto& d : base) add(d);

  // Products with Zn factors; factors kept in nondecreasing text order so
  // each isomorphism type built here is produced once.
  for (std::size_t i = 0; i < base.size(); ++i) {
    for (std::uint64_t n = 2; n <= max_order; ++n) {
      const auto zn = RingDescriptor::modular(n);
      if (base[i].kind() == RingKind::Modular && base[i].modulus() > n) continue;
      add(RingDescriptor::product({base[i], zn}));
      for (std::uint64_t m = n; m <= max_order; ++m) {
        if (base[i].kind() == RingKind::Modular && base[i].modulus() > n) continue;
        add(RingDescriptor::product({base[i], zn, RingDescriptor::modular(m)}));
      }
    }
  }
  for (const auto& d : builtin_finite_zoo()) add(d);

  std::vector<RingDescriptor> out;
  for (auto& [key, d] : found) out.push_back(d);
  return out;
}

}  // namespace ringlab
