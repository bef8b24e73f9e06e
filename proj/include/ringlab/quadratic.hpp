#pragma once

// Exact arithmetic in K = Q(w) with w^2 = -7, and in its order Z[w].

#include <gmpxx.h>

#include <string>
#include <utility>

namespace ringlab {

inline constexpr long kQuadraticD = -7;

/// a + b*w with a, b rational, w = sqrt(-7). mpq_class keeps both parts in
/// lowest terms with positive denominators after every operation.
struct QuadraticValue {
  mpq_class a;
  mpq_class b;

  QuadraticValue() = default;
  QuadraticValue(mpq_class re, mpq_class im);
  explicit QuadraticValue(long re) : a(re), b(0) {}
  /// Parts already canonical (results of mpq arithmetic); skips normalization.
  struct Canonical {};
  QuadraticValue(Canonical, mpq_class re, mpq_class im) : a(std::move(re)), b(std::move(im)) {}

  static QuadraticValue w() { return {mpq_class(0), mpq_class(1)}; }

  bool is_zero() const { return sgn(a) == 0 && sgn(b) == 0; }
  /// Both parts are integers, i.e. the value lies in Z[w].
  bool is_integral() const;

  friend bool operator==(const QuadraticValue& x, const QuadraticValue& y) {
    return x.a == y.a && x.b == y.b;
  }
  friend bool operator<(const QuadraticValue& x, const QuadraticValue& y) {
    if (x.a != y.a) return x.a < y.a;
    return x.b < y.b;
  }
};

QuadraticValue operator+(const QuadraticValue& x, const QuadraticValue& y);
QuadraticValue operator-(const QuadraticValue& x, const QuadraticValue& y);
QuadraticValue operator-(const QuadraticValue& x);
QuadraticValue operator*(const QuadraticValue& x, const QuadraticValue& y);
/// Throws std::domain_error on division by zero.
QuadraticValue operator/(const QuadraticValue& x, const QuadraticValue& y);

/// acc += x * (conjugate ? sigma(y) : y), in place.
void multiply_accumulate(QuadraticValue& acc, const QuadraticValue& x, const QuadraticValue& y,
                         bool conjugate);
/// The nontrivial automorphism a + b*w -> a - b*w.
QuadraticValue sigma(const QuadraticValue& c);
/// c * sigma(c) = a^2 + 7 b^2.
mpq_class quad_norm(const QuadraticValue& c);

/// Canonical literal: "a", "b*w", or "a+b*w" / "a-b*w"; parts print as
/// integers or p/q.
std::string format_quadratic(const QuadraticValue& c);

/// Element of Z[w]; a thin integral view used by the quadratic integer ring.
struct QuadraticInteger {
  mpz_class a;
  mpz_class b;

  friend bool operator==(const QuadraticInteger& x, const QuadraticInteger& y) {
    return x.a == y.a && x.b == y.b;
  }
  friend bool operator<(const QuadraticInteger& x, const QuadraticInteger& y) {
    if (x.a != y.a) return x.a < y.a;
    return x.b < y.b;
  }
};

QuadraticValue to_field(const QuadraticInteger& z);
/// Precondition: v.is_integral().
QuadraticInteger to_integral(const QuadraticValue& v);

}  // namespace ringlab
