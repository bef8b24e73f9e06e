#include <doctest.h>

#include <numeric>

#include "ringlab/error.hpp"
#include "ringlab/finite_ring.hpp"
#include "ringlab/matrix.hpp"
#include "ringlab/zoo.hpp"
#include "support.hpp"

using namespace testing;

namespace {

mpz_class pow_mpz(long base, unsigned long e) {
  mpz_class out;
  mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(base), e);
  return out;
}

std::vector<std::string> formatted(const RingDescriptor& ring, const std::vector<Element>& xs) {
  std::vector<std::string> out;
  for (const auto& x : xs) out.push_back(fmt(ring, x));
  return out;
}

}  // namespace

TEST_CASE("descriptor finiteness and order follow the product rule") {
  const auto z2 = RingDescriptor::modular(2);
  const auto z3 = RingDescriptor::modular(3);
  CHECK(z2.is_finite());
  CHECK_FALSE(RingDescriptor::integers().is_finite());
  CHECK_FALSE(RingDescriptor::quadratic_integers().is_finite());
  CHECK_FALSE(RingDescriptor::quadratic_field().is_finite());
  CHECK_FALSE(RingDescriptor::skew_s().is_finite());
  CHECK_FALSE(RingDescriptor::matrix(2, RingDescriptor::integers()).is_finite());
  CHECK_FALSE(RingDescriptor::product({z2, RingDescriptor::integers()}).is_finite());

  for (int k = 1; k <= 3; ++k) {
    CHECK(*RingDescriptor::matrix(k, z3).order() == pow_mpz(3, k * k));
  }
  for (int k = 2; k <= 4; ++k) {
    CHECK(*RingDescriptor::upper_triangular(k, z2).order() == pow_mpz(2, k * (k + 1) / 2));
  }
  CHECK(*RingDescriptor::product({z2, z3, RingDescriptor::modular(5)}).order() == 30);
  CHECK_FALSE(RingDescriptor::integers().order().has_value());
}

TEST_CASE("malformed descriptors are rejected") {
  auto kind_of = [](auto&& f) {
    try {
      f();
    } catch (const RingError& e) {
      return e.kind();
    }
    return ErrorKind::NoWitness;
  };
  CHECK(kind_of([] { RingDescriptor::modular(1); }) == ErrorKind::UnsupportedDescriptor);
  CHECK(kind_of([] { RingDescriptor::modular(0); }) == ErrorKind::UnsupportedDescriptor);
  CHECK(kind_of([] { RingDescriptor::matrix(0, RingDescriptor::integers()); }) ==
        ErrorKind::UnsupportedDescriptor);
  CHECK(kind_of([] { RingDescriptor::upper_triangular(1, RingDescriptor::integers()); }) ==
        ErrorKind::UnsupportedDescriptor);
  CHECK(kind_of([] { RingDescriptor::product({}); }) == ErrorKind::UnsupportedDescriptor);
}

TEST_CASE("enumerate_elements examples") {
  CHECK(formatted(spec("Zn(2)"), enumerate_elements(spec("Zn(2)"))) ==
        std::vector<std::string>{"0", "1"});
  CHECK(formatted(spec("Zn(6)"), enumerate_elements(spec("Zn(6)"))) ==
        std::vector<std::string>{"0", "1", "2", "3", "4", "5"});
  // Counting oracle: 2^(2*2).
  CHECK(enumerate_elements(spec("Mat(2,Zn(2))")).size() == pow_mpz(2, 4).get_ui());
  CHECK_THROWS_AS(enumerate_elements(RingDescriptor::integers()), RingError);
  try {
    enumerate_elements(RingDescriptor::skew_s());
    FAIL("expected InfiniteRing");
  } catch (const RingError& e) {
    CHECK(e.kind() == ErrorKind::InfiniteRing);
  }
}

TEST_CASE("enumeration is a deterministic bijection starting with zero and one") {
  for (const auto& s : finite_zoo_specs()) {
    CAPTURE(s);
    const auto ring = spec(s);
    const RingHandle r = make_ring(ring);
    const auto first = enumerate_elements(ring);
    const auto second = enumerate_elements(ring);
    CHECK(first == second);
    CHECK(first.size() == ring.order()->get_ui());
    CHECK(std::set<Element>(first.begin(), first.end()).size() == first.size());
    CHECK(first[0] == r->zero());
    CHECK(first[1] == r->one());
    for (std::size_t i = 0; i < first.size(); ++i) {
      CHECK(r->contains(first[i]));
      CHECK(r->index_of(first[i]) == i);
    }
  }
}

TEST_CASE("units examples") {
  CHECK(formatted(spec("Zn(6)"), units(spec("Zn(6)"))) == std::vector<std::string>{"1", "5"});
  CHECK(formatted(spec("Zi7"), units(spec("Zi7"))) == std::vector<std::string>{"1", "-1"});
  CHECK(formatted(spec("SkewS(3,2)"), units(spec("SkewS(3,2)"))) ==
        std::vector<std::string>{"[1]", "[-1]"});
  try {
    units(RingDescriptor::quadratic_field());
    FAIL("expected InfiniteRing");
  } catch (const RingError& e) {
    CHECK(e.kind() == ErrorKind::InfiniteRing);
  }
}

TEST_CASE("units of Zn match the coprime-residue oracle") {
  for (long n = 2; n <= 30; ++n) {
    std::vector<std::string> expected;
    for (long r = 1; r < n; ++r) {
      if (std::gcd(r, n) == 1) expected.push_back(std::to_string(r));
    }
    const auto ring = RingDescriptor::modular(static_cast<std::uint64_t>(n));
    CHECK(formatted(ring, units(ring)) == expected);
  }
}

TEST_CASE("units agree with the pair-scan oracle and form a group") {
  for (const auto& s : finite_zoo_specs()) {
    CAPTURE(s);
    const auto ring = spec(s);
    const RingHandle r = make_ring(ring);
    const auto us = units(ring);
    CHECK(us == oracle_units(ring));
    const std::set<Element> group(us.begin(), us.end());
    CHECK(group.count(r->one()));
    for (const auto& u : us) {
      for (const auto& v : us) CHECK(group.count(r->mul(u, v)));
      bool has_inverse = false;
      for (const auto& v : us) has_inverse = has_inverse || r->mul(u, v) == r->one();
      CHECK(has_inverse);
    }
  }
}

TEST_CASE("principal_ideal examples") {
  const auto z6 = spec("Zn(6)");
  auto ideal = [](const RingDescriptor& ring, const Element& a, Side side) {
    const auto xs = principal_ideal(ring, a, side);
    return std::set<Element>(xs.begin(), xs.end());
  };
  CHECK(ideal(z6, el(z6, "2"), Side::right) ==
        std::set<Element>{el(z6, "0"), el(z6, "2"), el(z6, "4")});
  CHECK(ideal(z6, el(z6, "1"), Side::left).size() == 6);

  // Oracle: the matrices with zero bottom row.
  const auto m2 = spec("Mat(2,Zn(2))");
  std::set<Element> bottom_zero;
  for (const auto& x : enumerate_elements(m2)) {
    if (x.parts()[2].residue() == 0 && x.parts()[3].residue() == 0) bottom_zero.insert(x);
  }
  CHECK(bottom_zero.size() == 4);
  CHECK(ideal(m2, el(m2, "[[1,0],[0,0]]"), Side::right) == bottom_zero);
  CHECK_THROWS_AS(principal_ideal(RingDescriptor::integers(), el(spec("Z"), "2"), Side::left),
                  RingError);
}

TEST_CASE("two_sided_ideal examples") {
  const auto z6 = spec("Zn(6)");
  const auto t = two_sided_ideal(z6, el(z6, "2"));
  CHECK(std::set<Element>(t.begin(), t.end()) ==
        std::set<Element>{el(z6, "0"), el(z6, "2"), el(z6, "4")});
  for (const auto& s : finite_zoo_specs()) {
    const auto ring = spec(s);
    CHECK(two_sided_ideal(ring, make_ring(ring)->zero()).size() == 1);
  }
  const auto m2 = spec("Mat(2,Zn(2))");
  CHECK(two_sided_ideal(m2, el(m2, "[[1,0],[0,0]]")).size() == 16);
}

TEST_CASE("principal one-sided ideals contain a and 0 and absorb multiplication") {
  std::vector<std::string> specs = finite_zoo_specs();
  specs.push_back("Zn(6)xZn(6)");
  specs.push_back("Tri(2,Zn(3))");
  for (const auto& s : specs) {
    CAPTURE(s);
    const auto ring = spec(s);
    if (*ring.order() > 36) continue;
    const RingHandle r = make_ring(ring);
    const auto all = enumerate_elements(ring);
    for (const auto& a : all) {
      for (Side side : {Side::right, Side::left}) {
        const auto xs = principal_ideal(ring, a, side);
        const std::set<Element> set(xs.begin(), xs.end());
        CHECK(set == oracle_ideal(ring, a, side == Side::right));
        CHECK(set.count(a));
        CHECK(set.count(r->zero()));
        for (const auto& x : set) {
          for (const auto& y : all) {
            REQUIRE(set.count(side == Side::right ? r->mul(x, y) : r->mul(y, x)));
          }
          for (const auto& y : set) REQUIRE(set.count(r->add(x, y)));
        }
      }
    }
  }
}

TEST_CASE("mat_invertible examples") {
  const auto z6 = make_ring(spec("Zn(6)"));
  const auto id = MatrixOverRing::identity(z6, 2);
  const auto inv = mat_invertible(id);
  REQUIRE(inv);
  CHECK(*inv == id);

  const auto z = make_ring(RingDescriptor::integers());
  CHECK_FALSE(mat_invertible(parse_matrix(z, "[[2,4],[6,8]]")));

  const auto z2 = make_ring(spec("Zn(2)"));
  const auto swap = parse_matrix(z2, "[[0,1],[1,0]]");
  const auto swap_inv = mat_invertible(swap);
  REQUIRE(swap_inv);
  CHECK(*swap_inv == swap);

  try {
    mat_invertible(parse_matrix(z6, "[[1,2,3],[4,5,0]]"));
    FAIL("expected DimensionMismatch");
  } catch (const RingError& e) {
    CHECK(e.kind() == ErrorKind::DimensionMismatch);
  }
}

TEST_CASE("over Z/6, a 2x2 matrix is invertible iff its determinant is a unit") {
  const auto z6 = make_ring(spec("Zn(6)"));
  const auto residues = enumerate_elements(spec("Zn(6)"));
  long checked = 0;
  for (long a = 0; a < 6; ++a) {
    for (long b = 0; b < 6; ++b) {
      for (long c = 0; c < 6; ++c) {
        for (long d = 0; d < 6; ++d) {
          const MatrixOverRing m(z6, 2, 2, {residues[a], residues[b], residues[c], residues[d]});
          const long det = (((a * d - b * c) % 6) + 6) % 6;
          const auto inv = mat_invertible(m);
          CHECK(inv.has_value() == (std::gcd(det, 6L) == 1));
          if (inv) {
            CHECK(mat_mul(m, *inv).is_identity());
            CHECK(mat_mul(*inv, m).is_identity());
          }
          ++checked;
        }
      }
    }
  }
  CHECK(checked == 1296);
}

TEST_CASE("matrix inverses over a noncommutative base are found by search") {
  // Mat(2, Mat(2, Z2)) is a ring of 2^16 elements; 1x1 and block-diagonal
  // matrices keep the search inside the budget.
  const auto m2 = spec("Mat(2,Zn(2))");
  const auto r = make_ring(m2);
  const auto units_m2 = units(m2);
  CHECK(units_m2.size() == 6);
  for (const auto& x : enumerate_elements(m2)) {
    const MatrixOverRing one_by_one(r, 1, 1, {x});
    const auto inv = mat_invertible(one_by_one);
    const bool unit = std::find(units_m2.begin(), units_m2.end(), x) != units_m2.end();
    CHECK(inv.has_value() == unit);
    if (inv) CHECK(mat_mul(one_by_one, *inv).is_identity());
  }
  // 2x2 over a 16-element ring exceeds a small budget.
  try {
    mat_invertible(MatrixOverRing::identity(r, 2), InvertOptions{1000});
    FAIL("expected BudgetExceeded");
  } catch (const RingError& e) {
    CHECK(e.kind() == ErrorKind::BudgetExceeded);
  }
}

TEST_CASE("compiled tables agree with generic arithmetic") {
  for (const auto& s : finite_zoo_specs()) {
    CAPTURE(s);
    const auto ring = spec(s);
    const auto f = compile_finite(ring);
    const RingHandle r = make_ring(ring);
    const auto all = enumerate_elements(ring);
    for (Index i = 0; i < all.size(); ++i) {
      for (Index j = 0; j < all.size(); ++j) {
        REQUIRE(f->element(f->add(i, j)) == r->add(all[i], all[j]));
        REQUIRE(f->element(f->mul(i, j)) == r->mul(all[i], all[j]));
      }
    }
  }
}

TEST_CASE("finite rings above the table limit are rejected") {
  try {
    compile_finite(spec("Mat(2,Zn(6))"));
    FAIL("expected BudgetExceeded");
  } catch (const RingError& e) {
    CHECK(e.kind() == ErrorKind::BudgetExceeded);
  }
}
