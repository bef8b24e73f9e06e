#include "ringlab/skew_poly.hpp"

#include <algorithm>

#include "ringlab/error.hpp"

namespace ringlab {

SkewPolynomial::SkewPolynomial(std::vector<QuadraticValue> coeffs)
    : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

SkewPolynomial SkewPolynomial::constant(QuadraticValue c) {
  return SkewPolynomial(std::vector<QuadraticValue>{std::move(c)});
}

SkewPolynomial SkewPolynomial::x() {
  return SkewPolynomial({QuadraticValue(0), QuadraticValue(1)});
}

QuadraticValue SkewPolynomial::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : QuadraticValue(0);
}

bool SkewPolynomial::in_s() const { return coeff(0).is_integral(); }

SkewPolynomial operator+(const SkewPolynomial& f, const SkewPolynomial& g) {
  const std::size_t n = std::max(f.coeffs().size(), g.coeffs().size());
  std::vector<QuadraticValue> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = f.coeff(i) + g.coeff(i);
  return SkewPolynomial(std::move(out));
}

SkewPolynomial operator-(const SkewPolynomial& f) {
  std::vector<QuadraticValue> out;
  out.reserve(f.coeffs().size());
  for (const auto& c : f.coeffs()) out.push_back(-c);
  return SkewPolynomial(std::move(out));
}

// (c x^i)(d x^j) = c sigma^i(d) x^(i+j); sigma is an involution.
SkewPolynomial skew_mul(const SkewPolynomial& f, const SkewPolynomial& g) {
  if (f.is_zero() || g.is_zero()) return {};
  const auto& fc = f.coeffs();
  const auto& gc = g.coeffs();
  std::vector<QuadraticValue> out(fc.size() + gc.size() - 1);
  for (std::size_t i = 0; i < fc.size(); ++i) {
    if (fc[i].is_zero()) continue;
    for (std::size_t j = 0; j < gc.size(); ++j) {
      multiply_accumulate(out[i + j], fc[i], gc[j], i % 2 == 1);
    }
  }
  return SkewPolynomial(std::move(out));
}

bool s_is_unit(const SkewPolynomial& f) {
  if (!f.in_s()) {
    throw RingError(ErrorKind::NotInS,
                    "constant coefficient is not in Z[sqrt(-7)]");
  }
  // deg(fg) = deg f + deg g over a field with an automorphism, so a unit has
  // degree 0; a constant c in Z[w] is invertible in S iff norm(c) = 1.
  if (f.degree() != 0) return false;
  return quad_norm(f.coeff(0)) == 1;
}

std::pair<SkewPolynomial, SkewPolynomial> noncommutativity_witness() {
  return {SkewPolynomial::x(), SkewPolynomial::constant(QuadraticValue::w())};
}

std::vector<mpq_class> rational_grid(int height) {
  std::vector<mpq_class> out;
  for (int p = -height; p <= height; ++p) {
    for (int q = 1; q <= std::max(height, 1); ++q) {
      mpq_class r(p, q);
      r.canonicalize();
      out.push_back(r);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

SkewGrid::SkewGrid(int max_degree, int height) : max_degree_(max_degree) {
  for (int a = -height; a <= height; ++a) {
    for (int b = -height; b <= height; ++b) {
      constants_.emplace_back(mpq_class(a), mpq_class(b));
    }
  }
  const auto rationals = rational_grid(height);
  for (const auto& a : rationals) {
    for (const auto& b : rationals) coefficients_.emplace_back(a, b);
  }
  size_ = constants_.size();
  for (int d = 0; d < max_degree_; ++d) size_ *= coefficients_.size();
}

SkewPolynomial SkewGrid::at(std::size_t index) const {
  std::vector<QuadraticValue> coeffs;
  coeffs.reserve(static_cast<std::size_t>(max_degree_) + 1);
  coeffs.push_back(constants_[index % constants_.size()]);
  index /= constants_.size();
  for (int d = 0; d < max_degree_; ++d) {
    coeffs.push_back(coefficients_[index % coefficients_.size()]);
    index /= coefficients_.size();
  }
  return SkewPolynomial(std::move(coeffs));
}

}  // namespace ringlab
