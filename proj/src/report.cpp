#include "ringlab/report.hpp"

#include <json.hpp>

#include "ringlab/error.hpp"
#include "ringlab/literal.hpp"
#include "ringlab/ring_spec.hpp"

namespace ringlab {

using nlohmann::json;

ReportRecord make_record(const PropertyVerdict& verdict, double duration_ms) {
  const RingHandle r = make_ring(verdict.ring);
  ReportRecord rec;
  rec.ring = verdict.ring.to_string();
  rec.property = verdict.property;
  rec.verdict = to_string(verdict.verdict);
  for (const auto& w : verdict.witness) rec.witness.emplace_back(w.name, r->format(w.value));
  rec.budget = verdict.budget_consumed;
  rec.duration_ms = duration_ms;
  rec.note = verdict.note;
  rec.budget_exceeded = verdict.budget_exceeded;
  return rec;
}

std::string to_json_line(const ReportRecord& record) {
  json witness = json::array();
  for (const auto& [name, value] : record.witness) {
    witness.push_back({{"name", name}, {"value", value}});
  }
  json j = {{"ring", record.ring},         {"property", record.property},
            {"verdict", record.verdict},   {"witness", witness},
            {"budget", record.budget},     {"duration_ms", record.duration_ms},
            {"note", record.note},         {"budget_exceeded", record.budget_exceeded}};
  return j.dump();
}

ReportRecord parse_record(std::string_view line) {
  json j;
  try {
    j = json::parse(line);
  } catch (const json::parse_error& e) {
    throw ParseError(e.what(), e.byte, {"JSON object"});
  }
  try {
    ReportRecord rec;
    rec.ring = j.at("ring").get<std::string>();
    rec.property = j.at("property").get<std::string>();
    rec.verdict = j.at("verdict").get<std::string>();
    for (const auto& w : j.at("witness")) {
      rec.witness.emplace_back(w.at("name").get<std::string>(), w.at("value").get<std::string>());
    }
    rec.budget = j.at("budget").get<std::uint64_t>();
    rec.duration_ms = j.at("duration_ms").get<double>();
    rec.note = j.value("note", "");
    rec.budget_exceeded = j.value("budget_exceeded", false);
    return rec;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed report record: ") + e.what(), 0,
                     {"ring", "property", "verdict", "witness", "budget", "duration_ms"});
  }
}

PropertyVerdict to_verdict(const ReportRecord& record) {
  PropertyVerdict v;
  v.ring = parse_ring_spec(record.ring);
  v.property = record.property;
  if (record.verdict == "holds") {
    v.verdict = Verdict::holds;
  } else if (record.verdict == "fails") {
    v.verdict = Verdict::fails;
  } else if (record.verdict == "unknown") {
    v.verdict = Verdict::unknown;
  } else {
    throw ParseError("unknown verdict " + record.verdict, 0, {"holds", "fails", "unknown"});
  }
  const RingHandle r = make_ring(v.ring);
  for (const auto& [name, value] : record.witness) {
    v.witness.push_back({name, parse_element(*r, value)});
  }
  v.budget_consumed = record.budget;
  v.note = record.note;
  v.budget_exceeded = record.budget_exceeded;
  return v;
}

}  // namespace ringlab
