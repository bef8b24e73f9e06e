#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "ringlab/ring.hpp"

namespace ringlab {

/// Rectangular matrix (rows, cols >= 1) of elements of one ring, row-major.
class MatrixOverRing {
 public:
  /// Zero matrix.
  MatrixOverRing(RingHandle ring, std::size_t rows, std::size_t cols);
  /// Throws DimensionMismatch when entries.size() != rows * cols or a
  /// dimension is zero.
  MatrixOverRing(RingHandle ring, std::size_t rows, std::size_t cols,
                 std::vector<Element> entries);

  static MatrixOverRing identity(RingHandle ring, std::size_t n);

  const RingHandle& ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }
  const Element& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  void set(std::size_t i, std::size_t j, Element e) { entries_[i * cols_ + j] = std::move(e); }
  const std::vector<Element>& entries() const { return entries_; }

  bool is_diagonal() const;
  bool is_identity() const;
  /// d_1 ... d_min(rows, cols).
  std::vector<Element> diagonal() const;

  friend bool operator==(const MatrixOverRing& x, const MatrixOverRing& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.entries_ == y.entries_;
  }

 private:
  RingHandle ring_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Element> entries_;
};

MatrixOverRing mat_mul(const MatrixOverRing& x, const MatrixOverRing& y);
MatrixOverRing mat_add(const MatrixOverRing& x, const MatrixOverRing& y);

/// Laplace expansion; the base ring must be commutative (k <= 8).
Element determinant(const MatrixOverRing& m);

struct InvertOptions {
  /// Candidate limit for the exhaustive search used over noncommutative
  /// finite base rings.
  std::uint64_t search_budget = std::uint64_t{1} << 20;
};

/// Two-sided inverse, or nullopt when M is not invertible.
///   IntegerRing        det in {1, -1}, inverse = det * adj(M)
///   commutative finite det a unit, inverse = det^-1 * adj(M)
///   other finite       exhaustive search over Mat(k, R); BudgetExceeded when
///                      |R|^(k*k) exceeds the budget
/// Throws DimensionMismatch for non-square input and UnsupportedDescriptor
/// for other infinite bases.
std::optional<MatrixOverRing> mat_invertible(const MatrixOverRing& m,
                                             const InvertOptions& options = {});

}  // namespace ringlab
