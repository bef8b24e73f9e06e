#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace ringlab {

enum class RingKind {
  Integer,
  Modular,
  Matrix,
  UpperTriangular,
  Product,
  QuadraticInteger,
  QuadraticField,
  SkewS,
};

/// Symbolic, composable description of a ring. Immutable and cheap to copy
/// (shared node). Factories validate parameters and throw
/// RingError(UnsupportedDescriptor) on malformed input.
class RingDescriptor {
 public:
  static RingDescriptor integers();
  static RingDescriptor modular(std::uint64_t modulus);
  static RingDescriptor matrix(int size, RingDescriptor base);
  static RingDescriptor upper_triangular(int size, RingDescriptor base);
  /// A single factor collapses to that factor.
  static RingDescriptor product(std::vector<RingDescriptor> factors);
  static RingDescriptor quadratic_integers();
  static RingDescriptor quadratic_field();
  static RingDescriptor skew_s(int max_degree = 3, int height = 2);

  RingKind kind() const { return node_->kind; }
  std::uint64_t modulus() const { return node_->modulus; }
  int size() const { return node_->size; }
  const RingDescriptor& base() const { return node_->children.front(); }
  const std::vector<RingDescriptor>& factors() const { return node_->children; }
  int max_degree() const { return node_->max_degree; }
  int height() const { return node_->height; }

  bool is_finite() const { return node_->finite; }
  /// |R| for finite rings.
  std::optional<mpz_class> order() const;

  /// Canonical text in the ring DSL, e.g. "Mat(2,Zn(2))" or "Zn(2)xZn(3)".
  std::string to_string() const;

  friend bool operator==(const RingDescriptor& x, const RingDescriptor& y) {
    return x.to_string() == y.to_string();
  }

 private:
  struct Node {
    RingKind kind;
    std::uint64_t modulus = 0;
    int size = 0;
    std::vector<RingDescriptor> children;
    int max_degree = 0;
    int height = 0;
    bool finite = false;
  };

  explicit RingDescriptor(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

}  // namespace ringlab
