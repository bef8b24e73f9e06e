#include "ringlab/quadratic.hpp"

#include <stdexcept>

namespace ringlab {

namespace {

std::string format_rational(const mpq_class& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace

QuadraticValue::QuadraticValue(mpq_class re, mpq_class im)
    : a(std::move(re)), b(std::move(im)) {
  a.canonicalize();
  b.canonicalize();
}

bool QuadraticValue::is_integral() const {
  return a.get_den() == 1 && b.get_den() == 1;
}

QuadraticValue operator+(const QuadraticValue& x, const QuadraticValue& y) {
  return {QuadraticValue::Canonical{}, x.a + y.a, x.b + y.b};
}

QuadraticValue operator-(const QuadraticValue& x, const QuadraticValue& y) {
  return {QuadraticValue::Canonical{}, x.a - y.a, x.b - y.b};
}

QuadraticValue operator-(const QuadraticValue& x) {
  return {QuadraticValue::Canonical{}, -x.a, -x.b};
}

// (a + b w)(c + d w) = (ac - 7bd) + (ad + bc) w
QuadraticValue operator*(const QuadraticValue& x, const QuadraticValue& y) {
  QuadraticValue out;
  multiply_accumulate(out, x, y, false);
  return out;
}

void multiply_accumulate(QuadraticValue& acc, const QuadraticValue& x, const QuadraticValue& y,
                         bool conjugate) {
  const bool xb = sgn(x.b) != 0;
  const bool yb = sgn(y.b) != 0;
  thread_local mpq_class t;
  // real part: x.a y.a - 7 x.b y.b (conjugation flips the sign of y.b)
  if (sgn(x.a) != 0 && sgn(y.a) != 0) {
    mpq_mul(t.get_mpq_t(), x.a.get_mpq_t(), y.a.get_mpq_t());
    acc.a += t;
  }
  if (xb && yb) {
    mpq_mul(t.get_mpq_t(), x.b.get_mpq_t(), y.b.get_mpq_t());
    t *= conjugate ? -kQuadraticD : kQuadraticD;
    acc.a += t;
  }
  // w part: x.a y.b + x.b y.a
  if (yb && sgn(x.a) != 0) {
    mpq_mul(t.get_mpq_t(), x.a.get_mpq_t(), y.b.get_mpq_t());
    if (conjugate) {
      acc.b -= t;
    } else {
      acc.b += t;
    }
  }
  if (xb && sgn(y.a) != 0) {
    mpq_mul(t.get_mpq_t(), x.b.get_mpq_t(), y.a.get_mpq_t());
    acc.b += t;
  }
}

QuadraticValue operator/(const QuadraticValue& x, const QuadraticValue& y) {
  if (y.is_zero()) throw std::domain_error("division by zero in Q(sqrt(-7))");
  const mpq_class n = quad_norm(y);
  const QuadraticValue num = x * sigma(y);
  return {num.a / n, num.b / n};
}

QuadraticValue sigma(const QuadraticValue& c) { return {QuadraticValue::Canonical{}, c.a, -c.b}; }

mpq_class quad_norm(const QuadraticValue& c) {
  return c.a * c.a - kQuadraticD * c.b * c.b;
}

std::string format_quadratic(const QuadraticValue& c) {
  if (sgn(c.b) == 0) return format_rational(c.a);
  std::string im = format_rational(abs(c.b)) + "*w";
  if (sgn(c.a) == 0) return sgn(c.b) < 0 ? "-" + im : im;
  return format_rational(c.a) + (sgn(c.b) < 0 ? "-" : "+") + im;
}

QuadraticValue to_field(const QuadraticInteger& z) {
  return {mpq_class(z.a), mpq_class(z.b)};
}

QuadraticInteger to_integral(const QuadraticValue& v) {
  if (!v.is_integral()) throw std::domain_error("value is not in Z[sqrt(-7)]");
  return {v.a.get_num(), v.b.get_num()};
}

}  // namespace ringlab
