// ringlab: command-line front end for the property checkers, reductions,
// constructions and the unit-central probe.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "ringlab/constructive.hpp"
#include "ringlab/error.hpp"
#include "ringlab/literal.hpp"
#include "ringlab/probe.hpp"
#include "ringlab/reduction.hpp"
#include "ringlab/replay.hpp"
#include "ringlab/report.hpp"
#include "ringlab/ring_spec.hpp"
#include "ringlab/zoo.hpp"

using namespace ringlab;
using nlohmann::json;

namespace {

constexpr int kDone = 0;
constexpr int kUsage = 1;
constexpr int kBudget = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string property_list() {
  std::string out;
  for (const auto& id : property_ids()) out += (out.empty() ? "" : ", ") + id;
  return out;
}

void print_usage_help(std::ostream& os) {
  os << "\nRing specifications:\n" << ring_spec_grammar() << "\nProperty identifiers: "
     << property_list() << "\n";
}

RingDescriptor ring_arg(const std::string& text) {
  try {
    return parse_ring_spec(text);
  } catch (const ParseError& e) {
    throw UsageError("cannot parse ring \"" + text + "\": " + e.what());
  } catch (const RingError& e) {
    throw UsageError("invalid ring \"" + text + "\": " + e.what());
  }
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    if (b != std::string::npos) out.push_back(item.substr(b, e - b + 1));
  }
  return out;
}

std::vector<std::string> properties_arg(const std::string& text) {
  if (text == "all") return property_ids();
  auto list = split_list(text);
  for (const auto& id : list) {
    if (std::find(property_ids().begin(), property_ids().end(), id) == property_ids().end()) {
      throw UsageError("unknown property \"" + id + "\"");
    }
  }
  return list;
}

std::vector<RingDescriptor> rings_arg(const std::string& source) {
  if (source == "zoo") return builtin_zoo();
  std::ifstream in(source);
  if (!in) throw UsageError("cannot open ring list " + source);
  std::vector<RingDescriptor> out;
  std::string line;
  while (std::getline(in, line)) {
    const auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos || line[b] == '#') continue;
    out.push_back(ring_arg(line.substr(b, line.find_last_not_of(" \t\r") - b + 1)));
  }
  return out;
}

PropertyVerdict timed_check(const std::string& id, const RingDescriptor& ring,
                            const CheckOptions& options, double& ms) {
  const auto start = std::chrono::steady_clock::now();
  PropertyVerdict v = check_property(id, ring, options);
  ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return v;
}

void print_verdict(const PropertyVerdict& v, double ms) {
  const RingHandle r = make_ring(v.ring);
  std::cout << "ring:     " << v.ring.to_string() << "\n"
            << "property: " << v.property << "\n"
            << "verdict:  " << to_string(v.verdict) << "\n";
  if (!v.witness.empty()) {
    std::cout << "witness: ";
    for (std::size_t i = 0; i < v.witness.size(); ++i) {
      std::cout << (i ? ", " : " ") << v.witness[i].name << " = " << r->format(v.witness[i].value);
    }
    std::cout << "\n";
  }
  std::cout << "basis:    " << v.note << "\n"
            << "searched: " << v.budget_consumed << " tuples in " << ms << " ms\n";
}

int run_check(const std::string& ring_text, const std::string& property, std::uint64_t budget,
              bool as_json, bool serial) {
  const RingDescriptor ring = ring_arg(ring_text);
  properties_arg(property);
  CheckOptions options{budget, serial ? Exec::serial : Exec::parallel};
  double ms = 0;
  const PropertyVerdict v = timed_check(property, ring, options, ms);
  if (as_json) {
    std::cout << to_json_line(make_record(v, ms)) << "\n";
  } else {
    print_verdict(v, ms);
  }
  return v.budget_exceeded ? kBudget : kDone;
}

int run_sweep(const std::string& rings_source, const std::string& properties,
              const std::string& out_path, std::uint64_t budget) {
  const auto rings = rings_arg(rings_source);
  const auto ids = properties_arg(properties);
  std::ofstream out(out_path);
  if (!out) throw UsageError("cannot write " + out_path);
  bool exceeded = false;
  std::size_t cells = 0;
  for (const auto& ring : rings) {
    for (const auto& id : ids) {
      double ms = 0;
      const PropertyVerdict v = timed_check(id, ring, {budget, Exec::parallel}, ms);
      out << to_json_line(make_record(v, ms)) << "\n" << std::flush;
      exceeded = exceeded || v.budget_exceeded;
      ++cells;
    }
  }
  std::cout << "wrote " << cells << " records to " << out_path << "\n";
  return exceeded ? kBudget : kDone;
}

int run_replay(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open report " + path);
  std::string line;
  std::size_t records = 0, replayed = 0, failures = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    ++records;
    const PropertyVerdict v = to_verdict(parse_record(line));
    if (v.verdict != Verdict::fails) continue;
    ++replayed;
    const ReplayResult r = replay_verdict(v);
    if (!r.ok) {
      ++failures;
      std::cout << "REPLAY FAILED " << v.ring.to_string() << " " << v.property << ": " << r.reason
                << "\n";
    }
  }
  std::cout << records << " records, " << replayed << " witnesses replayed, " << failures
            << " replay failures\n";
  return kDone;
}

int run_reduce(const std::string& ring_text, const std::string& matrix_text, bool as_json,
               std::uint64_t budget) {
  const RingDescriptor ring = ring_arg(ring_text);
  const RingHandle r = make_ring(ring);
  MatrixOverRing a = [&] {
    try {
      return parse_matrix(r, matrix_text);
    } catch (const ParseError& e) {
      throw UsageError(std::string("cannot parse matrix: ") + e.what());
    }
  }();
  ReductionCertificate cert = [&] {
    try {
      return diagonal_reduce(a, {budget});
    } catch (const RingError& e) {
      if (e.kind() == ErrorKind::NotReducible) {
        std::cout << "not reducible: " << e.what() << "\n";
      }
      throw;
    }
  }();
  std::vector<std::string> diag;
  for (const auto& d : cert.diagonal) diag.push_back(r->format(d));
  if (as_json) {
    json j = {{"ring", ring.to_string()},
              {"matrix", format_matrix(a)},
              {"P", format_matrix(cert.p)},
              {"Q", format_matrix(cert.q)},
              {"D", format_matrix(cert.d)},
              {"diagonal", diag},
              {"method", cert.method},
              {"verified",
               {{"PAQ = D", cert.flags.paq_equals_d},
                {"P invertible", cert.flags.p_invertible},
                {"Q invertible", cert.flags.q_invertible},
                {"D diagonal", cert.flags.d_diagonal},
                {"chain condition", cert.flags.chain_condition}}}};
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "A = " << format_matrix(a) << "\n"
              << "P = " << format_matrix(cert.p) << "\n"
              << "Q = " << format_matrix(cert.q) << "\n"
              << "D = " << format_matrix(cert.d) << "\n"
              << "method: " << cert.method << "; verified PAQ = D, P and Q invertible, "
              << "D diagonal, chain condition\n";
  }
  return kDone;
}

void print_named(const Ring& r, std::initializer_list<std::pair<const char*, const Element*>> xs) {
  for (const auto& [name, value] : xs) std::cout << name << " = " << r.format(*value) << "\n";
}

int run_construct(const std::string& which, const std::string& ring_text,
                  const std::string& args_text) {
  const RingDescriptor ring = ring_arg(ring_text);
  const RingHandle r = make_ring(ring);
  std::vector<Element> args;
  try {
    args = parse_element_list(*r, args_text);
  } catch (const ParseError& e) {
    throw UsageError(std::string("cannot parse arguments: ") + e.what());
  }
  auto expect_args = [&](std::size_t n, const char* names) {
    if (args.size() != n) {
      throw UsageError(which + " takes " + std::to_string(n) + " arguments: " + names);
    }
  };
  if (which == "theorem1") {
    expect_args(2, "a, b");
    const TransferWitness t = theorem1_transfer(ring, args[0], args[1]);
    print_named(*r, {{"t", &t.t}, {"u", &t.u}, {"x", &t.x}, {"w", &t.w}, {"y", &t.y},
                     {"p", &t.p}, {"q", &t.q}, {"p*a + q*b", &t.u_prime}});
  } else if (which == "prop1") {
    expect_args(2, "a, u");
    const Element v = prop1_unit_commute(ring, args[0], args[1]);
    print_named(*r, {{"v", &v}});
  } else if (which == "prop2") {
    expect_args(2, "a, x");
    const Prop2Witness w = prop2_witness(ring, args[0], args[1]);
    print_named(*r, {{"u", &w.u}, {"y", &w.y}});
  } else if (which == "prop4") {
    expect_args(1, "a");
    const auto [u, w] = prop4_unit_sum(ring, args[0]);
    print_named(*r, {{"u", &u}, {"w", &w}});
  } else if (which == "prop5") {
    expect_args(2, "a, b");
    const Prop5Witness w = prop5_duo_witness(ring, args[0], args[1]);
    print_named(*r, {{"u", &w.u}, {"w", &w.w}, {"x", &w.x}, {"y", &w.y}, {"z", &w.z}});
  } else {
    throw UsageError("unknown construction " + which);
  }
  std::cout << "verified\n";
  return kDone;
}

int run_probe(std::uint64_t max_order, std::uint64_t budget) {
  const ProbeReport report = probe_unit_central_commutative(max_order, {budget, Exec::parallel});
  std::cout << "ring (unit-central, sr1, commutative)\n";
  for (const auto& e : report.entries) {
    std::cout << e.ring.to_string() << " " << format_triple(e)
              << (e.tested() ? "" : " excluded") << "\n";
  }
  std::cout << report.entries.size() << " rings, " << report.tested
            << " unit-central with stable range 1, " << report.counterexamples.size()
            << " counterexamples\n";
  for (const auto& c : report.counterexamples) {
    std::cout << "COUNTEREXAMPLE " << c.to_string() << "\n";
  }
  return kDone;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact ring-theory workbench"};
  app.require_subcommand(1);
  app.footer("Worker threads: RINGLAB_THREADS (default: available parallelism).");

  std::string ring, property, matrix, rings = "zoo", properties = "all", out, args, which,
                                    report;
  std::uint64_t budget = std::uint64_t{1} << 20;
  std::uint64_t max_order = 16;
  bool as_json = false, serial = false;

  auto* check = app.add_subcommand("check", "Check one property of one ring");
  check->add_option("--ring", ring, "Ring specification")->required();
  check->add_option("--property", property, "Property identifier")->required();
  check->add_option("--budget", budget, "Search budget in tuples");
  check->add_flag("--json", as_json, "Print a report record");
  check->add_flag("--serial", serial, "Use the serial reference kernel");

  auto* sweep = app.add_subcommand("sweep", "Check many rings and properties");
  sweep->add_option("--rings", rings, "File with one ring per line, or \"zoo\"");
  sweep->add_option("--properties", properties, "Comma-separated identifiers, or \"all\"");
  sweep->add_option("--out", out, "Report file (JSON lines)")->required();
  sweep->add_option("--budget", budget, "Search budget in tuples");

  auto* replay = app.add_subcommand("replay", "Replay every witness in a report");
  replay->add_option("--report", report, "Report file written by sweep")->required();

  auto* reduce = app.add_subcommand("reduce", "Diagonal reduction with a certificate");
  reduce->add_option("--ring", ring, "Ring specification")->required();
  reduce->add_option("--matrix", matrix, "Matrix literal, e.g. [[2,4],[6,8]]")->required();
  reduce->add_option("--budget", budget, "Orbit-search budget in matrices");
  reduce->add_flag("--json", as_json, "Print JSON");

  auto* construct = app.add_subcommand("construct", "Run a witness construction");
  construct->add_option("which", which, "theorem1 | prop1 | prop2 | prop4 | prop5")
      ->required()
      ->check(CLI::IsMember({"theorem1", "prop1", "prop2", "prop4", "prop5"}));
  construct->add_option("--ring", ring, "Ring specification")->required();
  construct->add_option("--args", args, "Comma-separated element literals")->required();

  auto* probe = app.add_subcommand("probe", "Probe the unit-central question");
  probe->add_option("target", which, "unit-central")
      ->required()
      ->check(CLI::IsMember({"unit-central"}));
  probe->add_option("--max-order", max_order, "Largest ring order to generate");
  probe->add_option("--budget", budget, "Search budget in tuples");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    const int code = app.exit(e);
    print_usage_help(std::cout);
    return code;
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    print_usage_help(std::cerr);
    return kUsage;
  }

  try {
    if (*check) return run_check(ring, property, budget, as_json, serial);
    if (*sweep) return run_sweep(rings, properties, out, budget);
    if (*replay) return run_replay(report);
    if (*reduce) return run_reduce(ring, matrix, as_json, budget);
    if (*construct) return run_construct(which, ring, args);
    if (*probe) return run_probe(max_order, budget);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    print_usage_help(std::cerr);
    return kUsage;
  } catch (const RingError& e) {
    std::cerr << to_string(e.kind()) << ": " << e.what() << "\n";
    if (e.kind() == ErrorKind::BudgetExceeded) return kBudget;
    if (e.kind() == ErrorKind::ParseError || e.kind() == ErrorKind::SemanticError) return kUsage;
    return kDone;
  }
  return kUsage;
}
