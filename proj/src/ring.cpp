#include "ringlab/ring.hpp"

#include <sstream>

#include "ringlab/error.hpp"
#include "ringlab/literal.hpp"

namespace ringlab {

bool operator==(const Element& x, const Element& y) { return x.payload == y.payload; }
bool operator<(const Element& x, const Element& y) { return x.payload < y.payload; }

std::uint64_t Ring::order() const {
  const auto n = descriptor_.order();
  if (!n) throw RingError(ErrorKind::InfiniteRing, name() + " is infinite");
  if (*n > mpz_class(std::uint64_t{1} << 62)) {
    throw RingError(ErrorKind::BudgetExceeded, "order of " + name() + " exceeds 2^62");
  }
  return std::stoull(n->get_str());
}

std::uint64_t Ring::one_rank() const { return odometer_rank(one()); }

std::uint64_t Ring::index_of(const Element& x) const {
  const std::uint64_t rank = odometer_rank(x);
  const std::uint64_t one = one_rank();
  if (rank == 0) return 0;
  if (rank == one) return 1;
  return rank < one ? rank + 1 : rank;
}

Element Ring::element_at(std::uint64_t index) const {
  if (index >= order()) {
    throw RingError(ErrorKind::DimensionMismatch, "element index out of range");
  }
  const std::uint64_t one = one_rank();
  if (index == 0) return odometer_element(0);
  if (index == 1) return odometer_element(one);
  return odometer_element(index <= one ? index - 1 : index);
}

std::uint64_t Ring::odometer_rank(const Element&) const {
  throw RingError(ErrorKind::InfiniteRing, name() + " is infinite");
}

Element Ring::odometer_element(std::uint64_t) const {
  throw RingError(ErrorKind::InfiniteRing, name() + " is infinite");
}

namespace {

Element make(Element::Payload p) { return Element(std::move(p)); }

class IntegerRingImpl final : public Ring {
 public:
  using Ring::Ring;
  Element zero() const override { return make(mpz_class(0)); }
  Element one() const override { return make(mpz_class(1)); }
  Element add(const Element& x, const Element& y) const override {
    return make(mpz_class(x.integer() + y.integer()));
  }
  Element neg(const Element& x) const override { return make(mpz_class(-x.integer())); }
  Element mul(const Element& x, const Element& y) const override {
    return make(mpz_class(x.integer() * y.integer()));
  }
  Element from_integer(long n) const override { return make(mpz_class(n)); }
  bool contains(const Element& x) const override {
    return std::holds_alternative<mpz_class>(x.payload);
  }
  std::string format(const Element& x) const override { return x.integer().get_str(); }
  Element parse_literal(LiteralScanner& in) const override {
    return make(in.integer());
  }
  bool known_commutative() const override { return true; }
};

class ModularRingImpl final : public Ring {
 public:
  explicit ModularRingImpl(RingDescriptor d) : Ring(d), n_(d.modulus()) {}
  Element zero() const override { return make(std::uint64_t{0}); }
  Element one() const override { return make(std::uint64_t{1}); }
  Element add(const Element& x, const Element& y) const override {
    const auto s = static_cast<unsigned __int128>(x.residue()) + y.residue();
    return make(static_cast<std::uint64_t>(s % n_));
  }
  Element neg(const Element& x) const override {
    return make(x.residue() == 0 ? std::uint64_t{0} : n_ - x.residue());
  }
  Element mul(const Element& x, const Element& y) const override {
    const auto p = static_cast<unsigned __int128>(x.residue()) * y.residue();
    return make(static_cast<std::uint64_t>(p % n_));
  }
  Element from_integer(long n) const override { return reduce(mpz_class(n)); }
  bool contains(const Element& x) const override {
    return std::holds_alternative<std::uint64_t>(x.payload) && x.residue() < n_;
  }
  std::string format(const Element& x) const override {
    return std::to_string(x.residue());
  }
  Element parse_literal(LiteralScanner& in) const override { return reduce(in.integer()); }
  bool known_commutative() const override { return true; }

 protected:
  std::uint64_t odometer_rank(const Element& x) const override { return x.residue(); }
  Element odometer_element(std::uint64_t rank) const override { return make(rank); }

 private:
  Element reduce(const mpz_class& v) const {
    mpz_class r;
    const mpz_class m(std::to_string(n_));
    mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
    return make(std::stoull(r.get_str()));
  }

  std::uint64_t n_;
};

class QuadraticIntegerRingImpl final : public Ring {
 public:
  using Ring::Ring;
  Element zero() const override { return make(QuadraticInteger{0, 0}); }
  Element one() const override { return make(QuadraticInteger{1, 0}); }
  Element add(const Element& x, const Element& y) const override {
    const auto& p = x.quadratic_integer();
    const auto& q = y.quadratic_integer();
    return make(QuadraticInteger{p.a + q.a, p.b + q.b});
  }
  Element neg(const Element& x) const override {
    const auto& p = x.quadratic_integer();
    return make(QuadraticInteger{-p.a, -p.b});
  }
  Element mul(const Element& x, const Element& y) const override {
    const auto& p = x.quadratic_integer();
    const auto& q = y.quadratic_integer();
    return make(QuadraticInteger{p.a * q.a + kQuadraticD * p.b * q.b, p.a * q.b + p.b * q.a});
  }
  Element from_integer(long n) const override { return make(QuadraticInteger{n, 0}); }
  bool contains(const Element& x) const override {
    return std::holds_alternative<QuadraticInteger>(x.payload);
  }
  std::string format(const Element& x) const override {
    return format_quadratic(to_field(x.quadratic_integer()));
  }
  Element parse_literal(LiteralScanner& in) const override {
    const std::size_t start = in.offset();
    const QuadraticValue v = parse_quadratic_literal(in);
    if (!v.is_integral()) {
      throw ParseError("value is not in Z[sqrt(-7)]", start, {"integer parts"});
    }
    return make(to_integral(v));
  }
  bool known_commutative() const override { return true; }
};

class QuadraticFieldImpl final : public Ring {
 public:
  using Ring::Ring;
  Element zero() const override { return make(QuadraticValue(0)); }
  Element one() const override { return make(QuadraticValue(1)); }
  Element add(const Element& x, const Element& y) const override {
    return make(x.quadratic() + y.quadratic());
  }
  Element neg(const Element& x) const override { return make(-x.quadratic()); }
  Element mul(const Element& x, const Element& y) const override {
    return make(x.quadratic() * y.quadratic());
  }
  Element from_integer(long n) const override { return make(QuadraticValue(n)); }
  bool contains(const Element& x) const override {
    return std::holds_alternative<QuadraticValue>(x.payload);
  }
  std::string format(const Element& x) const override { return format_quadratic(x.quadratic()); }
  Element parse_literal(LiteralScanner& in) const override {
    return make(parse_quadratic_literal(in));
  }
  bool known_commutative() const override { return true; }
};

class SkewSubringImpl final : public Ring {
 public:
  using Ring::Ring;
  Element zero() const override { return make(SkewPolynomial{}); }
  Element one() const override { return make(SkewPolynomial::constant(QuadraticValue(1))); }
  Element add(const Element& x, const Element& y) const override {
    return make(x.skew() + y.skew());
  }
  Element neg(const Element& x) const override { return make(-x.skew()); }
  Element mul(const Element& x, const Element& y) const override {
    return make(skew_mul(x.skew(), y.skew()));
  }
  Element from_integer(long n) const override {
    return make(SkewPolynomial::constant(QuadraticValue(n)));
  }
  bool contains(const Element& x) const override {
    return std::holds_alternative<SkewPolynomial>(x.payload) && x.skew().in_s();
  }
  std::string format(const Element& x) const override {
    std::string out = "[";
    const auto& cs = x.skew().coeffs();
    for (std::size_t i = 0; i < cs.size(); ++i) {
      if (i) out += ",";
      out += format_quadratic(cs[i]);
    }
    return out + "]";
  }
  Element parse_literal(LiteralScanner& in) const override {
    if (in.starts_integer()) return from_integer_text(in);
    const std::size_t start = in.offset();
    in.expect('[');
    std::vector<QuadraticValue> coeffs;
    if (!in.accept(']')) {
      do {
        coeffs.push_back(parse_quadratic_literal(in));
      } while (in.accept(','));
      in.expect(']');
    }
    SkewPolynomial f(std::move(coeffs));
    if (!f.in_s()) {
      throw ParseError("constant coefficient must lie in Z[sqrt(-7)]", start,
                       {"integral constant term"});
    }
    return make(std::move(f));
  }
  bool known_commutative() const override { return false; }

 private:
  Element from_integer_text(LiteralScanner& in) const {
    return make(SkewPolynomial::constant(QuadraticValue(mpq_class(in.integer()), 0)));
  }
};

class MatrixRingImpl final : public Ring {
 public:
  MatrixRingImpl(RingDescriptor d, RingHandle base)
      : Ring(d),
        base_(std::move(base)),
        k_(static_cast<std::size_t>(d.size())),
        triangular_(d.kind() == RingKind::UpperTriangular) {}

  Element zero() const override {
    return make(Element::Composite(k_ * k_, base_->zero()));
  }
  Element one() const override { return from_integer(1); }
  Element add(const Element& x, const Element& y) const override {
    Element::Composite out(k_ * k_);
    for (std::size_t i = 0; i < k_ * k_; ++i) out[i] = base_->add(x.parts()[i], y.parts()[i]);
    return make(std::move(out));
  }
  Element neg(const Element& x) const override {
    Element::Composite out(k_ * k_);
    for (std::size_t i = 0; i < k_ * k_; ++i) out[i] = base_->neg(x.parts()[i]);
    return make(std::move(out));
  }
  Element mul(const Element& x, const Element& y) const override {
    const auto& a = x.parts();
    const auto& b = y.parts();
    Element::Composite out(k_ * k_, base_->zero());
    for (std::size_t i = 0; i < k_; ++i) {
      for (std::size_t j = 0; j < k_; ++j) {
        Element acc = base_->zero();
        for (std::size_t l = 0; l < k_; ++l) {
          acc = base_->add(acc, base_->mul(a[i * k_ + l], b[l * k_ + j]));
        }
        out[i * k_ + j] = std::move(acc);
      }
    }
    return make(std::move(out));
  }
  Element from_integer(long n) const override {
    Element::Composite out(k_ * k_, base_->zero());
    const Element d = base_->from_integer(n);
    for (std::size_t i = 0; i < k_; ++i) out[i * k_ + i] = d;
    return make(std::move(out));
  }
  bool contains(const Element& x) const override {
    if (!std::holds_alternative<Element::Composite>(x.payload)) return false;
    const auto& p = x.parts();
    if (p.size() != k_ * k_) return false;
    const Element z = base_->zero();
    for (std::size_t i = 0; i < k_; ++i) {
      for (std::size_t j = 0; j < k_; ++j) {
        const Element& e = p[i * k_ + j];
        if (!base_->contains(e)) return false;
        if (triangular_ && j < i && e != z) return false;
      }
    }
    return true;
  }
  std::string format(const Element& x) const override {
    std::string out = "[";
    for (std::size_t i = 0; i < k_; ++i) {
      out += i ? ",[" : "[";
      for (std::size_t j = 0; j < k_; ++j) {
        if (j) out += ",";
        out += base_->format(x.parts()[i * k_ + j]);
      }
      out += "]";
    }
    return out + "]";
  }
  Element parse_literal(LiteralScanner& in) const override {
    if (in.starts_integer()) return from_integer_literal(in);
    const std::size_t start = in.offset();
    Element::Composite out;
    in.expect('[');
    for (std::size_t i = 0; i < k_; ++i) {
      if (i) in.expect(',');
      in.expect('[');
      for (std::size_t j = 0; j < k_; ++j) {
        if (j) in.expect(',');
        out.push_back(base_->parse_literal(in));
      }
      in.expect(']');
    }
    in.expect(']');
    Element e = make(std::move(out));
    if (!contains(e)) {
      throw ParseError("entries below the diagonal must be zero", start, {"upper triangular matrix"});
    }
    return e;
  }
  bool known_commutative() const override {
    return k_ == 1 && base_->known_commutative();
  }

 protected:
  std::uint64_t odometer_rank(const Element& x) const override {
    const std::uint64_t radix = base_->order();
    std::uint64_t rank = 0;
    std::uint64_t weight = 1;
    for (std::size_t i = 0; i < k_; ++i) {
      for (std::size_t j = triangular_ ? i : 0; j < k_; ++j) {
        rank += base_->index_of(x.parts()[i * k_ + j]) * weight;
        weight *= radix;
      }
    }
    return rank;
  }
  Element odometer_element(std::uint64_t rank) const override {
    const std::uint64_t radix = base_->order();
    Element::Composite out(k_ * k_, base_->zero());
    for (std::size_t i = 0; i < k_; ++i) {
      for (std::size_t j = triangular_ ? i : 0; j < k_; ++j) {
        out[i * k_ + j] = base_->element_at(rank % radix);
        rank /= radix;
      }
    }
    return make(std::move(out));
  }

 private:
  Element from_integer_literal(LiteralScanner& in) const {
    const mpz_class n = in.integer();
    if (!n.fits_slong_p()) throw ParseError("integer too large", in.offset(), {"small integer"});
    return from_integer(n.get_si());
  }

  RingHandle base_;
  std::size_t k_;
  bool triangular_;
};

class ProductRingImpl final : public Ring {
 public:
  ProductRingImpl(RingDescriptor d, std::vector<RingHandle> factors)
      : Ring(d), factors_(std::move(factors)) {}

  Element zero() const override {
    return map([](const Ring& r, std::size_t) { return r.zero(); });
  }
  Element one() const override {
    return map([](const Ring& r, std::size_t) { return r.one(); });
  }
  Element add(const Element& x, const Element& y) const override {
    return map([&](const Ring& r, std::size_t i) { return r.add(x.parts()[i], y.parts()[i]); });
  }
  Element neg(const Element& x) const override {
    return map([&](const Ring& r, std::size_t i) { return r.neg(x.parts()[i]); });
  }
  Element mul(const Element& x, const Element& y) const override {
    return map([&](const Ring& r, std::size_t i) { return r.mul(x.parts()[i], y.parts()[i]); });
  }
  Element from_integer(long n) const override {
    return map([&](const Ring& r, std::size_t) { return r.from_integer(n); });
  }
  bool contains(const Element& x) const override {
    if (!std::holds_alternative<Element::Composite>(x.payload)) return false;
    if (x.parts().size() != factors_.size()) return false;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      if (!factors_[i]->contains(x.parts()[i])) return false;
    }
    return true;
  }
  std::string format(const Element& x) const override {
    std::string out = "(";
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      if (i) out += ",";
      out += factors_[i]->format(x.parts()[i]);
    }
    return out + ")";
  }
  Element parse_literal(LiteralScanner& in) const override {
    if (in.starts_integer()) {
      const mpz_class n = in.integer();
      if (!n.fits_slong_p()) throw ParseError("integer too large", in.offset(), {"small integer"});
      return from_integer(n.get_si());
    }
    in.expect('(');
    Element::Composite out;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      if (i) in.expect(',');
      out.push_back(factors_[i]->parse_literal(in));
    }
    in.expect(')');
    return make(std::move(out));
  }
  bool known_commutative() const override {
    for (const auto& f : factors_) {
      if (!f->known_commutative()) return false;
    }
    return true;
  }

 protected:
  std::uint64_t odometer_rank(const Element& x) const override {
    std::uint64_t rank = 0;
    std::uint64_t weight = 1;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      rank += factors_[i]->index_of(x.parts()[i]) * weight;
      weight *= factors_[i]->order();
    }
    return rank;
  }
  Element odometer_element(std::uint64_t rank) const override {
    Element::Composite out;
    for (const auto& f : factors_) {
      const std::uint64_t n = f->order();
      out.push_back(f->element_at(rank % n));
      rank /= n;
    }
    return make(std::move(out));
  }

 private:
  template <class F>
  Element map(F&& f) const {
    Element::Composite out;
    out.reserve(factors_.size());
    for (std::size_t i = 0; i < factors_.size(); ++i) out.push_back(f(*factors_[i], i));
    return make(std::move(out));
  }

  std::vector<RingHandle> factors_;
};

}  // namespace

RingHandle make_ring(const RingDescriptor& d) {
  switch (d.kind()) {
    case RingKind::Integer:
      return std::make_shared<IntegerRingImpl>(d);
    case RingKind::Modular:
      return std::make_shared<ModularRingImpl>(d);
    case RingKind::Matrix:
    case RingKind::UpperTriangular:
      return std::make_shared<MatrixRingImpl>(d, make_ring(d.base()));
    case RingKind::Product: {
      std::vector<RingHandle> fs;
      for (const auto& f : d.factors()) fs.push_back(make_ring(f));
      return std::make_shared<ProductRingImpl>(d, std::move(fs));
    }
    case RingKind::QuadraticInteger:
      return std::make_shared<QuadraticIntegerRingImpl>(d);
    case RingKind::QuadraticField:
      return std::make_shared<QuadraticFieldImpl>(d);
    case RingKind::SkewS:
      return std::make_shared<SkewSubringImpl>(d);
  }
  throw RingError(ErrorKind::UnsupportedDescriptor, "unknown ring kind");
}

std::vector<Element> enumerate_elements(const RingDescriptor& d) {
  const RingHandle r = make_ring(d);
  const std::uint64_t n = r->order();
  std::vector<Element> out;
  out.reserve(n);
  for (std::uint64_t i = 0; i < n; ++i) out.push_back(r->element_at(i));
  return out;
}

}  // namespace ringlab
