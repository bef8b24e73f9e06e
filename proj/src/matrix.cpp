#include "ringlab/matrix.hpp"

#include "ringlab/error.hpp"
#include "ringlab/finite_ring.hpp"
#include "ringlab/kernels.hpp"

namespace ringlab {

MatrixOverRing::MatrixOverRing(RingHandle ring, std::size_t rows, std::size_t cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols) {
  if (rows == 0 || cols == 0) {
    throw RingError(ErrorKind::DimensionMismatch, "matrix dimensions must be at least 1");
  }
  entries_.assign(rows * cols, ring_->zero());
}

MatrixOverRing::MatrixOverRing(RingHandle ring, std::size_t rows, std::size_t cols,
                               std::vector<Element> entries)
    : ring_(std::move(ring)), rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (rows == 0 || cols == 0 || entries_.size() != rows * cols) {
    throw RingError(ErrorKind::DimensionMismatch, "entry count does not match dimensions");
  }
}

MatrixOverRing MatrixOverRing::identity(RingHandle ring, std::size_t n) {
  MatrixOverRing m(ring, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, ring->one());
  return m;
}

bool MatrixOverRing::is_diagonal() const {
  const Element z = ring_->zero();
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (i != j && at(i, j) != z) return false;
    }
  }
  return true;
}

bool MatrixOverRing::is_identity() const {
  return square() && *this == identity(ring_, rows_);
}

std::vector<Element> MatrixOverRing::diagonal() const {
  std::vector<Element> out;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) out.push_back(at(i, i));
  return out;
}

MatrixOverRing mat_mul(const MatrixOverRing& x, const MatrixOverRing& y) {
  if (x.cols() != y.rows()) {
    throw RingError(ErrorKind::DimensionMismatch, "inner dimensions differ");
  }
  const Ring& r = *x.ring();
  MatrixOverRing out(x.ring(), x.rows(), y.cols());
  for (std::size_t i = 0; i < x.rows(); ++i) {
    for (std::size_t j = 0; j < y.cols(); ++j) {
      Element acc = r.zero();
      for (std::size_t l = 0; l < x.cols(); ++l) acc = r.add(acc, r.mul(x.at(i, l), y.at(l, j)));
      out.set(i, j, std::move(acc));
    }
  }
  return out;
}

MatrixOverRing mat_add(const MatrixOverRing& x, const MatrixOverRing& y) {
  if (x.rows() != y.rows() || x.cols() != y.cols()) {
    throw RingError(ErrorKind::DimensionMismatch, "shapes differ");
  }
  MatrixOverRing out(x.ring(), x.rows(), x.cols());
  for (std::size_t i = 0; i < x.rows(); ++i) {
    for (std::size_t j = 0; j < x.cols(); ++j) {
      out.set(i, j, x.ring()->add(x.at(i, j), y.at(i, j)));
    }
  }
  return out;
}

namespace {

MatrixOverRing minor_of(const MatrixOverRing& m, std::size_t row, std::size_t col) {
  const std::size_t k = m.rows();
  std::vector<Element> entries;
  for (std::size_t i = 0; i < k; ++i) {
    if (i == row) continue;
    for (std::size_t j = 0; j < k; ++j) {
      if (j != col) entries.push_back(m.at(i, j));
    }
  }
  return MatrixOverRing(m.ring(), k - 1, k - 1, std::move(entries));
}

MatrixOverRing adjugate(const MatrixOverRing& m) {
  const Ring& r = *m.ring();
  const std::size_t k = m.rows();
  MatrixOverRing adj(m.ring(), k, k);
  if (k == 1) {
    adj.set(0, 0, r.one());
    return adj;
  }
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      Element c = determinant(minor_of(m, i, j));
      if ((i + j) % 2) c = r.neg(c);
      adj.set(j, i, std::move(c));
    }
  }
  return adj;
}

MatrixOverRing scale(const Element& s, const MatrixOverRing& m) {
  MatrixOverRing out = m;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out.set(i, j, m.ring()->mul(s, m.at(i, j)));
  }
  return out;
}

std::optional<MatrixOverRing> search_inverse(const MatrixOverRing& m,
                                             const InvertOptions& options) {
  const auto f = compile_finite(m.ring()->descriptor());
  const std::size_t k = m.rows();
  const std::size_t cells = k * k;
  const std::uint64_t n = f->order();
  std::uint64_t candidates = 1;
  for (std::size_t c = 0; c < cells; ++c) {
    if (candidates > options.search_budget / n + 1) {
      candidates = options.search_budget + 1;
      break;
    }
    candidates *= n;
  }
  if (candidates > options.search_budget) {
    throw RingError(ErrorKind::BudgetExceeded,
                    "inverse search space exceeds budget of " +
                        std::to_string(options.search_budget));
  }
  std::vector<Index> a(cells);
  for (std::size_t c = 0; c < cells; ++c) a[c] = f->index_of(m.entries()[c]);

  auto decode = [&](std::uint64_t code) {
    std::vector<Index> x(cells);
    for (std::size_t c = 0; c < cells; ++c) {
      x[c] = static_cast<Index>(code % n);
      code /= n;
    }
    return x;
  };
  auto is_identity_product = [&](const std::vector<Index>& p, const std::vector<Index>& q) {
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        Index acc = FiniteRing::zero();
        for (std::size_t l = 0; l < k; ++l) acc = f->add(acc, f->mul(p[i * k + l], q[l * k + j]));
        if (acc != (i == j ? FiniteRing::one() : FiniteRing::zero())) return false;
      }
    }
    return true;
  };

  const auto hit = first_match(candidates, [&](std::uint64_t code) {
    const auto x = decode(code);
    return is_identity_product(a, x) && is_identity_product(x, a);
  });
  if (!hit) return std::nullopt;
  const auto x = decode(*hit);
  std::vector<Element> entries;
  for (Index i : x) entries.push_back(f->element(i));
  return MatrixOverRing(m.ring(), k, k, std::move(entries));
}

}  // namespace

Element determinant(const MatrixOverRing& m) {
  if (!m.square()) throw RingError(ErrorKind::DimensionMismatch, "determinant of non-square matrix");
  if (m.rows() > 8) throw RingError(ErrorKind::BudgetExceeded, "determinant limited to 8x8");
  const Ring& r = *m.ring();
  if (m.rows() == 1) return m.at(0, 0);
  Element acc = r.zero();
  for (std::size_t j = 0; j < m.cols(); ++j) {
    Element term = r.mul(m.at(0, j), determinant(minor_of(m, 0, j)));
    acc = j % 2 ? r.sub(acc, term) : r.add(acc, term);
  }
  return acc;
}

std::optional<MatrixOverRing> mat_invertible(const MatrixOverRing& m,
                                             const InvertOptions& options) {
  if (!m.square()) throw RingError(ErrorKind::DimensionMismatch, "inverse of non-square matrix");
  const Ring& r = *m.ring();
  const RingDescriptor& d = r.descriptor();

  if (d.kind() == RingKind::Integer) {
    const Element det = determinant(m);
    if (det != r.one() && det != r.neg(r.one())) return std::nullopt;
    // det^-1 = det for det = +-1.
    return scale(det, adjugate(m));
  }
  if (!d.is_finite()) {
    throw RingError(ErrorKind::UnsupportedDescriptor,
                    "matrix inversion over " + d.to_string() + " is not supported");
  }
  if (r.known_commutative()) {
    const auto f = compile_finite(d);
    const Index det = f->index_of(determinant(m));
    if (!f->is_unit(det)) return std::nullopt;
    return scale(f->element(f->inverse(det)), adjugate(m));
  }
  return search_inverse(m, options);
}

}  // namespace ringlab
