#pragma once

// Skew polynomials over K = Q(sqrt(-7)) twisted by conjugation, and the
// subring S of those whose constant coefficient lies in Z[sqrt(-7)].
//
// Coefficients are written on the left; moving x past a coefficient
// conjugates it: x * c = sigma(c) * x.

#include <utility>
#include <vector>

#include "ringlab/quadratic.hpp"

namespace ringlab {

class SkewPolynomial {
 public:
  SkewPolynomial() = default;
  /// Lowest degree first; trailing zeros are stripped.
  explicit SkewPolynomial(std::vector<QuadraticValue> coeffs);

  static SkewPolynomial constant(QuadraticValue c);
  static SkewPolynomial x();

  const std::vector<QuadraticValue>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  QuadraticValue coeff(std::size_t i) const;

  /// Membership in S: constant coefficient in Z[sqrt(-7)].
  bool in_s() const;

  friend bool operator==(const SkewPolynomial&, const SkewPolynomial&) = default;
  friend bool operator<(const SkewPolynomial& f, const SkewPolynomial& g) {
    return f.coeffs_ < g.coeffs_;
  }

 private:
  std::vector<QuadraticValue> coeffs_;
};

SkewPolynomial operator+(const SkewPolynomial& f, const SkewPolynomial& g);
SkewPolynomial operator-(const SkewPolynomial& f);
SkewPolynomial skew_mul(const SkewPolynomial& f, const SkewPolynomial& g);

/// True iff f is the constant 1 or -1. Throws NotInS when f is not in S.
bool s_is_unit(const SkewPolynomial& f);

/// (x, sqrt(-7)); their products in the two orders differ.
std::pair<SkewPolynomial, SkewPolynomial> noncommutativity_witness();

/// The finite sample of S used for sweeps: degree <= max_degree, each
/// non-constant coefficient a + b*w with a, b drawn from rational_grid(height),
/// constant coefficient with a, b integers in [-height, height]. Elements are
/// addressed by a mixed-radix index (constant term fastest) so sweeps can be
/// partitioned.
class SkewGrid {
 public:
  SkewGrid(int max_degree, int height);

  std::size_t size() const { return size_; }
  SkewPolynomial at(std::size_t index) const;

 private:
  int max_degree_;
  std::vector<QuadraticValue> constants_;
  std::vector<QuadraticValue> coefficients_;
  std::size_t size_ = 0;
};

/// The rationals p/q with |p| <= height, 1 <= q <= height, sorted, no repeats.
std::vector<mpq_class> rational_grid(int height);

}  // namespace ringlab
