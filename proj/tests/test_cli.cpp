#include <doctest.h>

#include "ringlab/error.hpp"
#include "ringlab/matrix.hpp"
#include "ringlab/probe.hpp"
#include "ringlab/replay.hpp"
#include "ringlab/report.hpp"
#include "ringlab/zoo.hpp"
#include "support.hpp"

using namespace testing;

namespace {

ErrorKind parse_error_kind(const std::string& text) {
  try {
    parse_ring_spec(text);
  } catch (const RingError& e) {
    return e.kind();
  }
  return ErrorKind::NoWitness;
}

std::string random_tokens(std::mt19937_64& g) {
  static const std::vector<std::string> tokens{
      "Z", "Zn", "(", ")", ",", "x", "Mat", "Tri", "Zi7", "Qi7", "SkewS", "0", "1", "2", "3",
      "6", "12", " ", "\t", "Zn(", "Mat(2,", "-", "+", "*", "[", "]", "#", "\xff", "99999999999999999999999"};
  std::uniform_int_distribution<std::size_t> len(0, 12), pick(0, tokens.size() - 1);
  std::string out;
  const std::size_t n = len(g);
  for (std::size_t i = 0; i < n; ++i) out += tokens[pick(g)];
  return out;
}

std::string random_literal(std::mt19937_64& g) {
  static const std::vector<std::string> tokens{
      "[", "]", "(", ")", ",", "1", "-2", "3/4", "w", "*", "+", "-", " ", "0", "7", "/0", "x",
      "[[", "]]", "1/2", "99999999999999999999999"};
  std::uniform_int_distribution<std::size_t> len(0, 10), pick(0, tokens.size() - 1);
  std::string out;
  const std::size_t n = len(g);
  for (std::size_t i = 0; i < n; ++i) out += tokens[pick(g)];
  return out;
}

}  // namespace

TEST_CASE("parse_ring_spec examples") {
  CHECK(parse_ring_spec("Mat(2, Zn(2))") == RingDescriptor::matrix(2, RingDescriptor::modular(2)));
  CHECK(parse_ring_spec("Zn(6) x Zn(4)") ==
        RingDescriptor::product({RingDescriptor::modular(6), RingDescriptor::modular(4)}));
  CHECK(parse_error_kind("Zn(1)") == ErrorKind::SemanticError);
  CHECK(parse_error_kind("Mat(0,Z)") == ErrorKind::SemanticError);
  CHECK(parse_ring_spec(" SkewS( 3 , 2 ) ") == RingDescriptor::skew_s(3, 2));
  CHECK(parse_ring_spec("Tri(2,Zn(2))xZn(3)").to_string() == "Tri(2,Zn(2))xZn(3)");
  CHECK(parse_ring_spec("Qi7") == RingDescriptor::quadratic_field());
}

TEST_CASE("parse errors carry the byte offset and the expected tokens") {
  try {
    parse_ring_spec("Zn(6) x Qx");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 8);
    CHECK_FALSE(e.expected().empty());
  }
  try {
    parse_ring_spec("Mat(2 Zn(2))");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 6);
    CHECK(std::find(e.expected().begin(), e.expected().end(), ",") != e.expected().end());
  }
  CHECK(parse_error_kind("") == ErrorKind::ParseError);
  CHECK(parse_error_kind("Zn(6") == ErrorKind::ParseError);
  CHECK(parse_error_kind("Zn(6))") == ErrorKind::ParseError);
  CHECK(parse_error_kind("Z x") == ErrorKind::ParseError);
}

TEST_CASE("canonical spec text round-trips for every zoo and generated ring") {
  std::vector<RingDescriptor> rings = builtin_zoo();
  for (const auto& d : generate_finite_rings(64)) rings.push_back(d);
  for (const auto& d : rings) CHECK(parse_ring_spec(d.to_string()) == d);
}

TEST_CASE("random token sequences never crash the ring parser") {
  auto g = rng(67);
  std::size_t accepted = 0;
  for (int i = 0; i < 20000; ++i) {
    const std::string text = random_tokens(g);
    CAPTURE(text);
    try {
      const auto d = parse_ring_spec(text);
      ++accepted;
      CHECK(parse_ring_spec(d.to_string()) == d);
    } catch (const RingError& e) {
      CHECK((e.kind() == ErrorKind::ParseError || e.kind() == ErrorKind::SemanticError));
    }
  }
  CHECK(accepted > 0);
}

TEST_CASE("random literals never crash the element and matrix parsers") {
  auto g = rng(71);
  std::vector<RingHandle> rings;
  for (const char* s : {"Z", "Zn(6)", "Zi7", "Qi7", "SkewS(3,2)", "Mat(2,Zn(2))", "Zn(2)xZn(3)"}) {
    rings.push_back(make_ring(spec(s)));
  }
  for (int i = 0; i < 5000; ++i) {
    const std::string text = random_literal(g);
    CAPTURE(text);
    for (const auto& r : rings) {
      try {
        const Element e = parse_element(*r, text);
        CHECK(r->contains(e));
        CHECK(parse_element(*r, r->format(e)) == e);
      } catch (const RingError& e) {
        CHECK((e.kind() == ErrorKind::ParseError || e.kind() == ErrorKind::SemanticError));
      }
      try {
        const auto m = parse_matrix(r, text);
        CHECK(parse_matrix(r, format_matrix(m)) == m);
      } catch (const RingError& e) {
        CHECK((e.kind() == ErrorKind::ParseError || e.kind() == ErrorKind::SemanticError ||
               e.kind() == ErrorKind::DimensionMismatch));
      }
    }
  }
}

TEST_CASE("element literals round-trip through format") {
  for (const auto& s : finite_zoo_specs()) {
    const auto d = spec(s);
    const auto r = make_ring(d);
    for (const auto& e : enumerate_elements(d)) CHECK(parse_element(*r, r->format(e)) == e);
  }
  const auto qi7 = spec("Qi7");
  CHECK(fmt(qi7, el(qi7, "1/2-3/4*w")) == "1/2-3/4*w");
  CHECK(fmt(qi7, el(qi7, "2/4*w")) == "1/2*w");
  const auto s = spec("SkewS(3,2)");
  CHECK(el(s, "[0,1]") == Element(SkewPolynomial::x()));
  CHECK_THROWS_AS(el(s, "[1/2]"), RingError);
  const auto z6 = spec("Zn(6)");
  CHECK(el(z6, "-1") == el(z6, "5"));
  // Leading zeros are decimal, not octal.
  CHECK(el(spec("Z"), "010") == el(spec("Z"), "10"));
  CHECK(el(spec("Qi7"), "09/010") == el(spec("Qi7"), "9/10"));
  CHECK(el(spec("Mat(2,Zn(2))"), "1") == el(spec("Mat(2,Zn(2))"), "[[1,0],[0,1]]"));
}

TEST_CASE("report records round-trip and replay over the finite zoo") {
  std::size_t failures = 0;
  for (const auto& d : builtin_finite_zoo()) {
    for (const auto& id : property_ids()) {
      const auto v = check_property(id, d);
      const auto record = make_record(v, 1.5);
      const std::string line = to_json_line(record);
      CHECK(line.find('\n') == std::string::npos);
      const auto back = parse_record(line);
      CHECK(back.ring == record.ring);
      CHECK(back.property == record.property);
      CHECK(back.verdict == record.verdict);
      CHECK(back.witness == record.witness);
      CHECK(back.budget == record.budget);
      CHECK(back.duration_ms == doctest::Approx(1.5));
      const auto rebuilt = to_verdict(back);
      CHECK(rebuilt.ring == d);
      CHECK(rebuilt.verdict == v.verdict);
      REQUIRE(rebuilt.witness.size() == v.witness.size());
      for (std::size_t i = 0; i < v.witness.size(); ++i) {
        CHECK(rebuilt.witness[i].name == v.witness[i].name);
        CHECK(rebuilt.witness[i].value == v.witness[i].value);
      }
      if (v.verdict == Verdict::fails) {
        ++failures;
        const auto replay = replay_verdict(rebuilt);
        CHECK_MESSAGE(replay.ok, replay.reason);
      }
    }
  }
  CHECK(failures > 20);
}

TEST_CASE("malformed report lines are parse errors") {
  for (const char* line : {"", "{", "[]", "{\"ring\": \"Zn(2)\"}", "not json",
                           R"j({"ring":"Zn(2)","property":"sr1","verdict":"holds","witness":3,"budget":1,"duration_ms":0})j"}) {
    CAPTURE(line);
    CHECK_THROWS_AS(parse_record(line), ParseError);
  }
  ReportRecord bad_literal{"Zn(2)", "sr1", "fails", {{"a", "[[1"}}, 1, 0, "", false};
  CHECK_THROWS_AS(to_verdict(bad_literal), RingError);
}

TEST_CASE("tampered witnesses do not replay") {
  const auto v = check_unit_stable_range_1(spec("Zn(2)"));
  REQUIRE(v.verdict == Verdict::fails);
  auto record = make_record(v, 0);
  record.witness[1].second = "0";
  const auto replay = replay_verdict(to_verdict(record));
  CHECK_FALSE(replay.ok);
  CHECK_FALSE(replay.reason.empty());

  const auto m2 = check_unit_central(spec("Mat(2,Zn(2))"));
  REQUIRE(m2.verdict == Verdict::fails);
  auto r2 = make_record(m2, 0);
  r2.witness[0].second = "1";
  CHECK_FALSE(replay_verdict(to_verdict(r2)).ok);
}

TEST_CASE("report lines are deterministic apart from timing") {
  const auto d = spec("Tri(2,Zn(2))");
  for (const auto& id : property_ids()) {
    const auto a = to_json_line(make_record(check_property(id, d), 0));
    const auto b = to_json_line(make_record(check_property(id, d), 0));
    CHECK(a == b);
  }
}

TEST_CASE("probe examples") {
  const auto report = probe_unit_central_commutative(8);
  CHECK(report.counterexamples.empty());
  CHECK(report.tested > 0);
  for (const auto& e : report.entries) {
    CAPTURE(e.ring.to_string());
    CHECK(e.commutative != Verdict::unknown);
    CHECK(e.counterexample() == (e.tested() && e.commutative == Verdict::fails));
    CHECK(e.commutative == check_commutative(e.ring));
  }
  const auto single = probe_unit_central_commutative({spec("Zn(6)"), spec("Mat(2,Zn(2))")});
  REQUIRE(single.entries.size() == 2);
  CHECK(single.entries[0].tested());
  CHECK(format_triple(single.entries[0]) == "(holds, holds, holds)");
  CHECK_FALSE(single.entries[1].tested());
  CHECK(single.entries[1].unit_central == Verdict::fails);
  CHECK(single.tested == 1);
}
