#pragma once

#include <cstdint>
#include <vector>

#include "ringlab/ring_descriptor.hpp"

namespace ringlab {

/// The built-in ring zoo: Zn(2..12), Mat(2,Zn(2)), Tri(2,Zn(2)),
/// Zn(2)xZn(3), Zi7, SkewS(3,2). Also shipped as data/zoo.txt.
std::vector<RingDescriptor> builtin_zoo();

/// Finite members of the built-in zoo.
std::vector<RingDescriptor> builtin_finite_zoo();

/// Finite rings of order <= max_order produced from the zoo constructors:
/// every Zn(n), every product of two or three Zn factors, Tri(2,Zn(m)),
/// Mat(2,Zn(m)), and products of those with a Zn factor. Each ring appears
/// once (by canonical text), ordered by order then text.
std::vector<RingDescriptor> generate_finite_rings(std::uint64_t max_order);

}  // namespace ringlab
