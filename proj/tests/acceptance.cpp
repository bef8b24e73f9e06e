// Acceptance checks: one PASS/FAIL line per criterion, each with its runtime
// limit. Exits non-zero when any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ringlab/constructive.hpp"
#include "ringlab/error.hpp"
#include "ringlab/literal.hpp"
#include "ringlab/probe.hpp"
#include "ringlab/properties.hpp"
#include "ringlab/reduction.hpp"
#include "ringlab/replay.hpp"
#include "ringlab/report.hpp"
#include "ringlab/ring_spec.hpp"
#include "ringlab/skew_poly.hpp"
#include "ringlab/zoo.hpp"

using namespace ringlab;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail << "violated: " << what << "; ";
    }
  }
};

// Two-sided units by generic pair scan, independent of the compiled tables.
std::set<Element> generic_units(const RingDescriptor& d) {
  const auto r = make_ring(d);
  const auto all = enumerate_elements(d);
  std::set<Element> out;
  for (const auto& x : all) {
    for (const auto& y : all) {
      if (r->mul(x, y) == r->one() && r->mul(y, x) == r->one()) {
        out.insert(x);
        break;
      }
    }
  }
  return out;
}

bool right_comaximal(const Ring& r, const std::vector<Element>& all, const Element& a,
                     const Element& b) {
  std::set<Element> ar, br;
  for (const auto& x : all) {
    ar.insert(r.mul(a, x));
    br.insert(r.mul(b, x));
  }
  for (const auto& x : ar) {
    if (br.count(r.sub(r.one(), x))) return true;
  }
  return false;
}

bool holds(const PropertyVerdict& v) { return v.verdict == Verdict::holds; }

Element lit(const RingDescriptor& d, const std::string& text) {
  return parse_element(*make_ring(d), text);
}

Outcome unit_sr1_claim() {
  Outcome o;
  const auto m2 = parse_ring_spec("Mat(2,Zn(2))");
  const auto z2 = parse_ring_spec("Zn(2)");
  const auto a = check_property("unit-sr1", m2);
  o.require(holds(a), "unit-sr1 holds for Mat(2,Zn(2))");
  const auto b = check_property("unit-sr1", z2);
  o.require(b.verdict == Verdict::fails, "unit-sr1 fails for Zn(2)");
  const Element* wa = b.find("a");
  const Element* wb = b.find("b");
  o.require(wa && wb && *wa == lit(z2, "1") && *wb == lit(z2, "1"), "witness (1,1)");
  o.require(replay_verdict(b).ok, "witness replays");
  o.detail << "Mat(2,Zn(2)) " << to_string(a.verdict) << ", Zn(2) " << to_string(b.verdict)
           << " with (1,1)";
  return o;
}

Outcome theorem1_suite() {
  Outcome o;
  std::size_t rings = 0, pairs = 0;
  bool all_zn = true;
  for (const auto& d : builtin_finite_zoo()) {
    const bool premise = holds(check_stable_range_1(d)) && holds(check_kazimirsky(d, Side::left));
    if (d.kind() == RingKind::Modular || d.kind() == RingKind::Product) all_zn = all_zn && premise;
    if (!premise) continue;
    ++rings;
    const auto r = make_ring(d);
    const auto all = enumerate_elements(d);
    const auto us = generic_units(d);
    for (const auto& a : all) {
      for (const auto& b : all) {
        if (!right_comaximal(*r, all, a, b)) continue;
        ++pairs;
        try {
          const auto w = theorem1_transfer(d, a, b);
          o.require(us.count(r->add(r->mul(w.p, a), r->mul(w.q, b))) > 0,
                    "p*a + q*b is a unit over " + d.to_string());
        } catch (const RingError& e) {
          o.require(false, "transfer succeeded over " + d.to_string() + ": " + e.what());
        }
      }
    }
  }
  o.require(all_zn, "every Zn and product ring meets the premises");
  o.detail << rings << " rings, " << pairs << " comaximal pairs transferred";
  return o;
}

Outcome prop3_suite() {
  Outcome o;
  std::size_t rings = 0;
  for (const auto& d : builtin_finite_zoo()) {
    if (!holds(check_stable_range_1(d)) || !holds(check_kazimirsky(d, Side::left))) continue;
    ++rings;
    o.require(holds(check_quasi_duo(d, Side::left)), "quasi-duo-left for " + d.to_string());
  }
  const auto m2 = parse_ring_spec("Mat(2,Zn(2))");
  const auto q = check_quasi_duo(m2, Side::left);
  const auto k = check_kazimirsky(m2, Side::left);
  o.require(q.verdict == Verdict::fails && replay_verdict(q).ok,
            "Mat(2,Zn(2)) fails quasi-duo-left");
  o.require(k.verdict == Verdict::fails && replay_verdict(k).ok,
            "Mat(2,Zn(2)) fails kazimirsky-left");
  o.detail << rings << " rings pass quasi-duo-left; Mat(2,Zn(2)) fails both";
  return o;
}

Outcome prop4_suite() {
  Outcome o;
  std::size_t rings = 0, elements = 0;
  std::set<std::string> tested;
  for (const auto& d : builtin_finite_zoo()) {
    if (!holds(check_unit_stable_range_1(d))) continue;
    ++rings;
    tested.insert(d.to_string());
    const auto r = make_ring(d);
    const auto us = generic_units(d);
    for (const auto& a : enumerate_elements(d)) {
      if (a == r->zero()) continue;
      ++elements;
      try {
        const auto [u, w] = prop4_unit_sum(d, a);
        o.require(us.count(u) && us.count(w) && r->add(u, w) == a,
                  "a = u + w with units over " + d.to_string());
      } catch (const RingError& e) {
        o.require(false, "decomposition over " + d.to_string() + ": " + e.what());
      }
    }
  }
  o.require(tested.count("Zn(3)") && tested.count("Mat(2,Zn(2))"),
            "Zn(3) and Mat(2,Zn(2)) are among the tested rings");
  o.detail << rings << " rings, " << elements << " nonzero elements decomposed";
  return o;
}

Outcome prop5_suite() {
  Outcome o;
  std::size_t rings = 0, pairs = 0;
  for (const auto& d : builtin_finite_zoo()) {
    if (!holds(check_unit_stable_range_1(d)) || !holds(check_kazimirsky(d, Side::right))) continue;
    ++rings;
    o.require(holds(check_duo(d, Side::left)), "duo-left for " + d.to_string());
    const auto r = make_ring(d);
    const auto all = enumerate_elements(d);
    for (const auto& a : all) {
      if (a == r->zero()) continue;
      for (const auto& b : all) {
        ++pairs;
        try {
          const auto w = prop5_duo_witness(d, a, b);
          o.require(r->mul(a, b) == r->mul(b, w.z), "a*b = b*z over " + d.to_string());
        } catch (const RingError& e) {
          o.require(false, "witness over " + d.to_string() + ": " + e.what());
        }
      }
    }
  }
  const auto k = check_kazimirsky(parse_ring_spec("Mat(2,Zn(2))"), Side::right);
  o.require(k.verdict == Verdict::fails && replay_verdict(k).ok,
            "Mat(2,Zn(2)) fails kazimirsky-right");
  o.detail << rings << " rings, " << pairs << " pairs with verified z; Mat(2,Zn(2)) fails "
           << "kazimirsky-right";
  return o;
}

Outcome edr_suite() {
  Outcome o;
  std::size_t rings = 0, matrices = 0, failures = 0;
  for (const auto& d : builtin_finite_zoo()) {
    if (check_commutative(d) != Verdict::holds) continue;
    ++rings;
    const auto v = check_property("edr-small", d);
    o.require(holds(v), "edr-small for " + d.to_string());
  }
  for (std::uint64_t n : {2, 3, 4, 6}) {
    const auto d = RingDescriptor::modular(n);
    const auto r = make_ring(d);
    const auto all = enumerate_elements(d);
    const std::pair<std::size_t, std::size_t> shapes[] = {{1, 2}, {2, 1}, {2, 2}};
    for (const auto& [rows, cols] : shapes) {
      const std::size_t cells = rows * cols;
      std::uint64_t count = 1;
      for (std::size_t i = 0; i < cells; ++i) count *= n;
      for (std::uint64_t code = 0; code < count; ++code) {
        std::vector<Element> e;
        for (std::uint64_t c = code, i = 0; i < cells; ++i, c /= n) e.push_back(all[c % n]);
        const MatrixOverRing a(r, rows, cols, std::move(e));
        ++matrices;
        try {
          const auto cert = diagonal_reduce(a);
          if (!verify_certificate(a, cert).ok) ++failures;
        } catch (const RingError&) {
          ++failures;
        }
      }
    }
  }
  o.require(failures == 0, "zero certificate-verification failures");
  o.detail << rings << " commutative rings pass edr-small; " << matrices
           << " matrices over Zn(2,3,4,6) certified, " << failures << " failures";
  return o;
}

Outcome smith_suite() {
  Outcome o;
  const auto z = make_ring(RingDescriptor::integers());
  std::mt19937_64 g(20240601);
  std::uniform_int_distribution<std::size_t> dim(1, 4);
  std::uniform_int_distribution<long> entry(-20, 20);
  auto det = [](const MatrixOverRing& m) { return determinant(m).integer(); };
  for (int i = 0; i < 50; ++i) {
    const std::size_t rows = dim(g), cols = dim(g);
    std::vector<Element> e;
    for (std::size_t k = 0; k < rows * cols; ++k) e.emplace_back(mpz_class(entry(g)));
    const MatrixOverRing a(z, rows, cols, std::move(e));
    const auto c1 = smith_form_integers(a, PivotRule::smallest_entry);
    const auto c2 = smith_form_integers(a, PivotRule::gcd_combination);
    for (const auto* c : {&c1, &c2}) {
      o.require(mat_mul(mat_mul(c->p, a), c->q) == c->d, "PAQ = D");
      o.require(abs(det(c->p)) == 1 && abs(det(c->q)) == 1, "det P, det Q in {1,-1}");
      for (std::size_t k = 0; k < c->diagonal.size(); ++k) {
        const mpz_class& x = c->diagonal[k].integer();
        o.require(x >= 0, "d_i >= 0");
        if (k + 1 < c->diagonal.size()) {
          const mpz_class& y = c->diagonal[k + 1].integer();
          o.require(x == 0 ? y == 0 : y % x == 0, "d_i | d_(i+1)");
        }
      }
    }
    o.require(c1.d == c2.d, "D independent of elimination order");
  }
  o.detail << "50 matrices, two pivot rules, identical D";
  return o;
}

Outcome example_ring_suite() {
  Outcome o;
  const SkewGrid grid(3, 2);
  const auto one = SkewPolynomial::constant(QuadraticValue(1));
  const auto minus_one = SkewPolynomial::constant(QuadraticValue(-1));
  std::size_t units_found = 0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const auto f = grid.at(i);
    const bool unit = s_is_unit(f);
    o.require(unit == (f == one || f == minus_one), "s_is_unit exactly on {1,-1}");
    units_found += unit ? 1 : 0;
  }
  o.require(units_found == 2, "both 1 and -1 lie in the grid");
  const auto [x, w] = noncommutativity_witness();
  const auto xw = skew_mul(x, w), wx = skew_mul(w, x);
  o.require(xw == -wx && xw != wx, "x*sqrt(-7) = -sqrt(-7)*x != sqrt(-7)*x");
  CheckOptions opts;
  opts.budget = grid.size();
  const auto v = check_unit_central(parse_ring_spec("SkewS(3,2)"), opts);
  o.require(holds(v), "unit-central holds on S");
  o.require(v.budget_consumed >= grid.size(), "corroboration covers the full grid");
  o.detail << grid.size() << " grid elements, " << units_found
           << " units; unit-central holds; x and sqrt(-7) do not commute";
  return o;
}

Outcome probe_suite() {
  Outcome o;
  const auto report = probe_unit_central_commutative(16);
  std::size_t builtin = 0;
  std::set<std::string> zoo;
  for (const auto& d : builtin_finite_zoo()) zoo.insert(d.to_string());
  for (const auto& e : report.entries) {
    std::cout << "    " << e.ring.to_string() << " " << format_triple(e) << "\n";
    builtin += zoo.count(e.ring.to_string());
  }
  o.require(report.counterexamples.empty(), "zero counterexamples");
  o.require(builtin == zoo.size(), "every built-in finite ring is probed");
  o.detail << report.entries.size() << " rings, " << report.tested
           << " unit-central with stable range 1, " << report.counterexamples.size()
           << " counterexamples";
  return o;
}

Outcome replay_suite() {
  Outcome o;
  std::size_t records = 0, witnessed = 0, failures = 0;
  for (const auto& d : builtin_zoo()) {
    for (const auto& id : property_ids()) {
      const auto v = check_property(id, d);
      const auto line = to_json_line(make_record(v, 0));
      const auto back = to_verdict(parse_record(line));
      ++records;
      if (!back.witness.empty()) ++witnessed;
      if (back.verdict == Verdict::fails && !replay_verdict(back).ok) ++failures;
      if (back.verdict == Verdict::fails && back.witness.empty()) ++failures;
    }
  }
  o.require(failures == 0, "0 replay failures");
  o.detail << records << " records, " << witnessed << " witnesses, " << failures
           << " replay failures";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit_s;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "unit-sr1 claim for Mat(2,Zn(2)) and Zn(2)", 5, unit_sr1_claim},
      {2, "left comaximal transfer suite", 60, theorem1_suite},
      {3, "sr1 + kazimirsky-left implies quasi-duo-left", 60, prop3_suite},
      {4, "unit-sr1 sum-of-two-units suite", 10, prop4_suite},
      {5, "unit-sr1 + kazimirsky-right implies duo-left", 30, prop5_suite},
      {6, "commutative rings pass edr-small", 120, edr_suite},
      {7, "Smith form oracle", 5, smith_suite},
      {8, "skew ring S units and unit-central", 30, example_ring_suite},
      {9, "unit-central commutativity probe", 60, probe_suite},
      {10, "witness replay over the zoo sweep", 0, replay_suite},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out.ok = false;
      out.detail << "exception: " << e.what();
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = c.limit_s == 0 || s < c.limit_s;
    const bool pass = out.ok && in_time;
    failed += pass ? 0 : 1;
    char timing[64];
    if (c.limit_s == 0) {
      std::snprintf(timing, sizeof timing, "%.3f s", s);
    } else {
      std::snprintf(timing, sizeof timing, "%.3f s, limit %.0f s", s, c.limit_s);
    }
    std::cout << (pass ? "PASS" : "FAIL") << " [" << c.id << "] " << c.name << " (" << timing
              << ")" << (in_time ? "" : " TIME LIMIT EXCEEDED") << ": " << out.detail.str()
              << std::endl;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed"
            << std::endl;
  return failed == 0 ? 0 : 1;
}
