#include "ringlab/probe.hpp"

#include "ringlab/zoo.hpp"

namespace ringlab {

ProbeReport probe_unit_central_commutative(const std::vector<RingDescriptor>& rings,
                                           const CheckOptions& options) {
  ProbeReport report;
  for (const RingDescriptor& ring : rings) {
    ProbeEntry e{ring};
    e.unit_central = check_unit_central(ring, options).verdict;
    e.sr1 = check_stable_range_1(ring, options).verdict;
    e.commutative = check_commutative(ring);
    if (e.tested()) {
      ++report.tested;
      if (e.counterexample()) report.counterexamples.push_back(ring);
    }
    report.entries.push_back(std::move(e));
  }
  return report;
}

ProbeReport probe_unit_central_commutative(std::uint64_t max_order, const CheckOptions& options) {
  return probe_unit_central_commutative(generate_finite_rings(max_order), options);
}

std::string format_triple(const ProbeEntry& entry) {
  return std::string("(") + to_string(entry.unit_central) + ", " + to_string(entry.sr1) + ", " +
         to_string(entry.commutative) + ")";
}

}  // namespace ringlab
