#pragma once

// Independent re-evaluation of property definitions on reported witnesses.
// Uses only the generic Ring arithmetic and enumerate_elements, never the
// compiled tables the checkers search with.

#include <string>

#include "ringlab/properties.hpp"

namespace ringlab {

struct ReplayResult {
  bool ok = false;
  std::string reason;
};

/// For a fails verdict: re-derives the violation from the witness alone.
/// Other verdicts replay trivially (ok) when the witness is empty.
ReplayResult replay_verdict(const PropertyVerdict& verdict);

}  // namespace ringlab
