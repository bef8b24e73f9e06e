#pragma once

// Line-delimited JSON report records, one per ring x property cell.
//
//   {"ring": "Zn(2)", "property": "unit-sr1", "verdict": "fails",
//    "witness": [{"name": "a", "value": "1"}, {"name": "b", "value": "1"}],
//    "budget": 8, "duration_ms": 0.02, "note": "..."}
//
// Witness values are element literals that re-parse to equal elements.

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ringlab/properties.hpp"

namespace ringlab {

struct ReportRecord {
  std::string ring;
  std::string property;
  std::string verdict;
  std::vector<std::pair<std::string, std::string>> witness;
  std::uint64_t budget = 0;
  double duration_ms = 0;
  std::string note;
  bool budget_exceeded = false;
};

ReportRecord make_record(const PropertyVerdict& verdict, double duration_ms);

/// One line, no trailing newline.
std::string to_json_line(const ReportRecord& record);

/// Throws ParseError on malformed JSON or missing fields.
ReportRecord parse_record(std::string_view line);

/// Rebuilds the verdict by re-parsing the ring spec and witness literals.
PropertyVerdict to_verdict(const ReportRecord& record);

}  // namespace ringlab
