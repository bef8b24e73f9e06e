#pragma once

// Falsification probe for the open question whether every unit-central ring
// of stable range 1 is commutative. Reports what was tested; never asserts
// the answer.

#include <cstdint>
#include <string>
#include <vector>

#include "ringlab/properties.hpp"

namespace ringlab {

struct ProbeEntry {
  RingDescriptor ring;
  Verdict unit_central = Verdict::unknown;
  Verdict sr1 = Verdict::unknown;
  Verdict commutative = Verdict::unknown;

  bool tested() const { return unit_central == Verdict::holds && sr1 == Verdict::holds; }
  bool counterexample() const { return tested() && commutative == Verdict::fails; }
};

struct ProbeReport {
  std::vector<ProbeEntry> entries;
  std::vector<RingDescriptor> counterexamples;
  std::size_t tested = 0;
};

ProbeReport probe_unit_central_commutative(const std::vector<RingDescriptor>& rings,
                                           const CheckOptions& options = {});

/// Over generate_finite_rings(max_order).
ProbeReport probe_unit_central_commutative(std::uint64_t max_order,
                                           const CheckOptions& options = {});

/// "(unit-central, sr1, commutative)" with verdict names.
std::string format_triple(const ProbeEntry& entry);

}  // namespace ringlab
