#include "ringlab/replay.hpp"

#include <deque>
#include <optional>
#include <set>

#include "ringlab/error.hpp"
#include "ringlab/matrix.hpp"

namespace ringlab {

namespace {

using ESet = std::set<Element>;

class Generic {
 public:
  explicit Generic(const RingDescriptor& ring) : r_(make_ring(ring)), finite_(ring.is_finite()) {
    if (finite_) {
      all_ = enumerate_elements(ring);
      for (const Element& x : all_) {
        for (const Element& y : all_) {
          if (r_->mul(x, y) == r_->one() && r_->mul(y, x) == r_->one()) {
            units_.push_back(x);
            break;
          }
        }
      }
    } else {
      units_ = units(ring);
    }
  }

  const Ring& r() const { return *r_; }
  const RingHandle& handle() const { return r_; }
  bool finite() const { return finite_; }
  const std::vector<Element>& all() const { return all_; }
  const std::vector<Element>& unit_list() const { return units_; }

  bool is_unit(const Element& x) const {
    for (const Element& u : units_) {
      if (u == x) return true;
    }
    return false;
  }

  ESet side_ideal(const Element& a, Side side) const {
    ESet out;
    for (const Element& x : all_) out.insert(side == Side::right ? r_->mul(a, x) : r_->mul(x, a));
    return out;
  }

  ESet additive_closure(const ESet& gens) const {
    ESet out{r_->zero()};
    std::deque<Element> work{r_->zero()};
    while (!work.empty()) {
      const Element s = work.front();
      work.pop_front();
      for (const Element& g : gens) {
        Element t = r_->add(s, g);
        if (out.insert(t).second) work.push_back(std::move(t));
      }
    }
    return out;
  }

  ESet sum(const ESet& x, const ESet& y) const {
    ESet out;
    for (const Element& a : x) {
      for (const Element& b : y) out.insert(r_->add(a, b));
    }
    return out;
  }

  ESet two_sided(const Element& a) const {
    ESet products;
    for (const Element& x : all_) {
      const Element xa = r_->mul(x, a);
      for (const Element& y : all_) products.insert(r_->mul(xa, y));
    }
    return additive_closure(products);
  }

  bool is_everything(const ESet& s) const { return s.size() == all_.size(); }

  bool comaximal_right(const Element& a, const Element& b) const {
    return sum(side_ideal(a, Side::right), side_ideal(b, Side::right)).count(r_->one()) > 0;
  }

  bool chain_diagonal(const MatrixOverRing& d) const {
    if (!d.is_diagonal()) return false;
    const auto diag = d.diagonal();
    for (std::size_t i = 0; i + 1 < diag.size(); ++i) {
      const ESet next = two_sided(diag[i + 1]);
      const ESet left = side_ideal(diag[i], Side::left);
      const ESet right = side_ideal(diag[i], Side::right);
      for (const Element& x : next) {
        if (!left.count(x) || !right.count(x)) return false;
      }
    }
    return true;
  }

 private:
  RingHandle r_;
  bool finite_;
  std::vector<Element> all_;
  std::vector<Element> units_;
};

struct Missing {
  std::string name;
};

const Element& need(const PropertyVerdict& v, const char* name) {
  const Element* e = v.find(name);
  if (!e) throw Missing{name};
  return *e;
}

ReplayResult yes(std::string why) { return {true, std::move(why)}; }
ReplayResult no(std::string why) { return {false, std::move(why)}; }

// Breadth-first orbit of a matrix under transvections and diagonal unit
// matrices, evaluated with generic arithmetic.
bool orbit_reaches_chain_diagonal(const Generic& g, const MatrixOverRing& a, bool left_ops,
                                  bool right_ops) {
  std::vector<std::pair<bool, MatrixOverRing>> gens;
  auto add_side = [&](bool left, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j) continue;
        for (const Element& x : g.all()) {
          if (x == g.r().zero()) continue;
          MatrixOverRing t = MatrixOverRing::identity(g.handle(), n);
          t.set(i, j, x);
          gens.emplace_back(left, std::move(t));
        }
      }
    }
    std::vector<std::size_t> odometer(n, 0);
    for (;;) {
      std::size_t k = 0;
      while (k < n && ++odometer[k] == g.unit_list().size()) odometer[k++] = 0;
      if (k == n) break;
      MatrixOverRing dmat = MatrixOverRing::identity(g.handle(), n);
      for (std::size_t i = 0; i < n; ++i) dmat.set(i, i, g.unit_list()[odometer[i]]);
      gens.emplace_back(left, std::move(dmat));
    }
  };
  if (left_ops) add_side(true, a.rows());
  if (right_ops) add_side(false, a.cols());

  std::set<std::vector<Element>> seen{a.entries()};
  std::deque<MatrixOverRing> queue{a};
  while (!queue.empty()) {
    const MatrixOverRing m = queue.front();
    queue.pop_front();
    if (g.chain_diagonal(m)) return true;
    for (const auto& [left, t] : gens) {
      MatrixOverRing next = left ? mat_mul(t, m) : mat_mul(m, t);
      if (seen.insert(next.entries()).second) queue.push_back(std::move(next));
    }
  }
  return false;
}

ReplayResult replay_finite(const PropertyVerdict& v, const Generic& g) {
  const Ring& r = g.r();
  const std::string& id = v.property;
  if (id == "bezout") {
    const Element &a = need(v, "a"), &b = need(v, "b");
    for (Side side : {Side::right, Side::left}) {
      const ESet s = g.sum(g.side_ideal(a, side), g.side_ideal(b, side));
      bool principal = false;
      for (const Element& d : g.all()) {
        if (g.side_ideal(d, side) == s) {
          principal = true;
          break;
        }
      }
      if (!principal) return yes(std::string("sum of ") + to_string(side) + " ideals not principal");
    }
    return no("both ideal sums are principal");
  }
  if (id == "hermite") {
    const Element &a = need(v, "a"), &b = need(v, "b");
    const MatrixOverRing rowv(g.handle(), 1, 2, {a, b});
    const MatrixOverRing colv(g.handle(), 2, 1, {a, b});
    if (!orbit_reaches_chain_diagonal(g, rowv, false, true)) return yes("row vector irreducible");
    if (!orbit_reaches_chain_diagonal(g, colv, true, false)) return yes("column vector irreducible");
    return no("both orientations reduce");
  }
  if (id == "sr1" || id == "unit-sr1") {
    const Element &a = need(v, "a"), &b = need(v, "b");
    if (!g.comaximal_right(a, b)) return no("pair is not comaximal");
    const auto& ts = id == "sr1" ? g.all() : g.unit_list();
    for (const Element& t : ts) {
      if (g.is_unit(r.add(a, r.mul(b, t)))) return no("a + b*t is a unit for t = " + r.format(t));
    }
    return yes("comaximal and a + b*t never a unit");
  }
  if (id == "kazimirsky-right" || id == "kazimirsky-left") {
    const Element &a = need(v, "a"), &u = need(v, "u"), &x = need(v, "r");
    if (!g.is_unit(u)) return no("u is not a unit");
    const bool right = id == "kazimirsky-right";
    const Element p = right ? r.mul(r.mul(u, a), x) : r.mul(r.mul(x, a), u);
    if (g.side_ideal(a, right ? Side::right : Side::left).count(p)) {
      return no("product lies in the principal ideal");
    }
    return yes(right ? "u*a*r not in aR" : "r*a*u not in Ra");
  }
  if (id == "duo-right" || id == "duo-left") {
    const Element &a = need(v, "a"), &x = need(v, "r");
    const bool right = id == "duo-right";
    const Element p = right ? r.mul(x, a) : r.mul(a, x);
    if (g.side_ideal(a, right ? Side::right : Side::left).count(p)) {
      return no("product lies in the principal ideal");
    }
    return yes(right ? "r*a not in aR" : "a*r not in Ra");
  }
  if (id == "unit-central") {
    const Element &u = need(v, "u"), &a = need(v, "a");
    if (!g.is_unit(u)) return no("u is not a unit");
    if (r.mul(u, a) == r.mul(a, u)) return no("u and a commute");
    return yes("u*a != a*u");
  }
  if (id == "quasi-duo-left" || id == "quasi-duo-right") {
    const Side side = id == "quasi-duo-left" ? Side::left : Side::right;
    ESet gens;
    for (std::size_t k = 1;; ++k) {
      const Element* e = v.find("g" + std::to_string(k));
      if (!e) break;
      const ESet s = g.side_ideal(*e, side);
      gens.insert(s.begin(), s.end());
    }
    if (gens.empty()) return no("no ideal generators");
    const ESet m = g.additive_closure(gens);
    if (g.is_everything(m)) return no("ideal is not proper");
    for (const Element& x : g.all()) {
      if (m.count(x)) continue;
      ESet bigger = m;
      const ESet s = g.side_ideal(x, side);
      bigger.insert(s.begin(), s.end());
      if (!g.is_everything(g.additive_closure(bigger))) return no("ideal is not maximal");
    }
    const Element &x = need(v, "m"), &y = need(v, "r");
    if (!m.count(x)) return no("m is not in the ideal");
    const Element p = side == Side::left ? r.mul(x, y) : r.mul(y, x);
    if (m.count(p)) return no("product stays in the ideal");
    return yes("maximal ideal is not two-sided");
  }
  if (id == "dubrovin") {
    const Element& a = need(v, "a");
    const ESet t = g.two_sided(a);
    for (const Element& b : g.all()) {
      if (g.side_ideal(b, Side::right) == t && g.side_ideal(b, Side::left) == t) {
        return no("b = " + r.format(b) + " satisfies RaR = bR = Rb");
      }
    }
    return yes("no b with RaR = bR = Rb");
  }
  if (id == "idempotent-unit") {
    const Element &e = need(v, "e"), &f = need(v, "f");
    if (r.mul(e, e) != e || r.mul(f, f) != f) return no("not idempotent");
    if (!g.comaximal_right(e, f)) return no("not comaximal");
    for (const Element& u : g.unit_list()) {
      for (const Element& w : g.unit_list()) {
        if (r.add(r.mul(e, u), r.mul(f, w)) == r.one()) return no("e*u + f*v = 1 solvable");
      }
    }
    return yes("e*u + f*v = 1 has no unit solution");
  }
  if (id == "edr-small") {
    std::size_t rows = 1, cols = 1;
    for (const auto& w : v.witness) {
      rows = std::max<std::size_t>(rows, w.name.at(1) - '0');
      cols = std::max<std::size_t>(cols, w.name.at(2) - '0');
    }
    std::vector<Element> entries;
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < cols; ++j) {
        const std::string name = "A" + std::to_string(i + 1) + std::to_string(j + 1);
        entries.push_back(need(v, name.c_str()));
      }
    }
    const MatrixOverRing a(g.handle(), rows, cols, std::move(entries));
    if (orbit_reaches_chain_diagonal(g, a, true, true)) return no("matrix reduces");
    return yes("orbit contains no chain-condition diagonal");
  }
  return no("no replay rule for " + id);
}

// c = b*t for some t (commutative Z or Z[w]).
bool divides(const Ring& r, const Element& b, const Element& c) {
  if (r.descriptor().kind() == RingKind::Integer) {
    if (sgn(b.integer()) == 0) return sgn(c.integer()) == 0;
    return mpz_divisible_p(c.integer().get_mpz_t(), b.integer().get_mpz_t()) != 0;
  }
  const QuadraticValue bv = to_field(b.quadratic_integer());
  const QuadraticValue cv = to_field(c.quadratic_integer());
  if (bv.is_zero()) return cv.is_zero();
  return (cv / bv).is_integral();
}

ReplayResult replay_infinite(const PropertyVerdict& v, const Generic& g) {
  const Ring& r = g.r();
  const std::string& id = v.property;
  const RingKind kind = v.ring.kind();
  const bool integer_like = kind == RingKind::Integer || kind == RingKind::QuadraticInteger;
  if (integer_like && (id == "sr1" || id == "unit-sr1")) {
    const Element &a = need(v, "a"), &b = need(v, "b"), &x = need(v, "x"), &y = need(v, "y");
    if (r.add(r.mul(a, x), r.mul(b, y)) != r.one()) return no("a*x + b*y != 1");
    for (const Element& u : g.unit_list()) {
      if (id == "sr1") {
        if (divides(r, b, r.sub(u, a))) return no("a + b*t = " + r.format(u) + " is solvable");
      } else {
        if (g.is_unit(r.add(a, r.mul(b, u)))) return no("a + b*u is a unit");
      }
    }
    return yes(id == "sr1" ? "a + b*t = +-1 has no solution" : "a + b*u is never a unit");
  }
  if (integer_like && id == "idempotent-unit") {
    const Element &e = need(v, "e"), &f = need(v, "f");
    if (r.mul(e, e) != e || r.mul(f, f) != f) return no("not idempotent");
    if (!g.is_unit(e) && !g.is_unit(f)) return no("comaximality not certified");
    for (const Element& u : g.unit_list()) {
      for (const Element& w : g.unit_list()) {
        if (r.add(r.mul(e, u), r.mul(f, w)) == r.one()) return no("e*u + f*v = 1 solvable");
      }
    }
    return yes("e*u + f*v = 1 has no unit solution");
  }
  if (kind == RingKind::SkewS && id == "unit-central") {
    const Element &u = need(v, "u"), &a = need(v, "a");
    if (!g.is_unit(u)) return no("u is not a unit");
    if (r.mul(u, a) == r.mul(a, u)) return no("u and a commute");
    return yes("u*a != a*u");
  }
  return no("no replay rule for " + id + " over " + v.ring.to_string());
}

}  // namespace

ReplayResult replay_verdict(const PropertyVerdict& verdict) {
  if (verdict.verdict != Verdict::fails) {
    if (verdict.witness.empty()) return yes("nothing to replay");
    return no("witness attached to a non-failing verdict");
  }
  if (verdict.witness.empty()) return no("fails verdict without a witness");
  try {
    const Generic g(verdict.ring);
    for (const auto& w : verdict.witness) {
      if (!g.r().contains(w.value)) return no("witness " + w.name + " is not a ring element");
    }
    return g.finite() ? replay_finite(verdict, g) : replay_infinite(verdict, g);
  } catch (const Missing& m) {
    return no("witness lacks " + m.name);
  } catch (const RingError& e) {
    return no(std::string("replay error: ") + e.what());
  }
}

}  // namespace ringlab
