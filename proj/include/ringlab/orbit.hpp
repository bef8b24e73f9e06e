#pragma once

// Breadth-first search over the orbit of a matrix under the group generated
// by elementary transvections I + r*E_ij (i != j) and invertible diagonal
// matrices, acting on the left (P*A) and/or on the right (A*Q). Matrices
// over a compiled finite ring are encoded as integers: entry (i, j) in
// row-major position t contributes index * |R|^t.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "ringlab/finite_ring.hpp"

namespace ringlab {

/// Row-major square or rectangular matrix of element indices.
struct IndexMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Index> cells;

  Index at(std::size_t i, std::size_t j) const { return cells[i * cols + j]; }
  friend bool operator==(const IndexMatrix&, const IndexMatrix&) = default;
};

IndexMatrix index_identity(std::size_t n);
IndexMatrix index_mul(const FiniteRing& f, const IndexMatrix& x, const IndexMatrix& y);

/// Transforms found by an orbit search: P * A * Q = D, with the inverses
/// accumulated alongside as invertibility evidence.
struct IndexCertificate {
  IndexMatrix p;
  IndexMatrix q;
  IndexMatrix p_inverse;
  IndexMatrix q_inverse;
  IndexMatrix d;
};

struct OrbitShape {
  std::size_t rows = 1;
  std::size_t cols = 1;
  bool left_ops = true;
  bool right_ops = true;
};

/// D diagonal with R d_{i+1} R contained in R d_i and d_i R.
bool is_chain_diagonal(const FiniteRing& f, const IndexMatrix& d);

class OrbitSpace {
 public:
  /// Throws BudgetExceeded when |R|^(rows*cols) exceeds `budget`.
  OrbitSpace(FiniteRingHandle ring, OrbitShape shape, std::uint64_t budget);

  const FiniteRing& ring() const { return *ring_; }
  const OrbitShape& shape() const { return shape_; }
  std::uint64_t state_count() const { return states_; }
  std::size_t generator_count() const { return generators_.size(); }

  std::uint64_t encode(const IndexMatrix& m) const;
  IndexMatrix decode(std::uint64_t state) const;
  bool is_target(std::uint64_t state) const;

  /// Forward BFS from one matrix to the nearest chain-diagonal matrix.
  /// `orbit_size` receives the number of states visited.
  std::optional<IndexCertificate> search(const IndexMatrix& a, std::uint64_t* orbit_size) const;

  struct Generator {
    bool left;
    IndexMatrix matrix;
    std::size_t inverse;  // position of the inverse generator
  };
  const std::vector<Generator>& generators() const { return generators_; }
  std::uint64_t apply(std::size_t generator, std::uint64_t state) const;

 private:
  void add_generators(bool left, std::size_t n);

  FiniteRingHandle ring_;
  OrbitShape shape_;
  std::uint64_t states_ = 1;
  std::vector<ElementSet> two_sided_;
  std::vector<Generator> generators_;
};

/// Multi-source BFS from every chain-diagonal matrix of a shape, recording
/// for each reachable state the generator step that moves it one step closer.
/// Certificates for every matrix of the shape then come from walking steps.
class OrbitAtlas {
 public:
  explicit OrbitAtlas(const OrbitSpace& space);

  const OrbitSpace& space() const { return space_; }
  bool reachable(std::uint64_t state) const { return step_[state] != kUnreached; }
  /// Precondition: reachable(state).
  IndexCertificate certificate(std::uint64_t state) const;

 private:
  static constexpr std::uint32_t kUnreached = ~std::uint32_t{0};
  static constexpr std::uint32_t kTarget = kUnreached - 1;

  const OrbitSpace& space_;
  std::vector<std::uint32_t> step_;
};

/// P * A * Q == D and P, Q invertible by their recorded inverses, D chain
/// diagonal. Independent of how the certificate was produced.
bool verify_index_certificate(const FiniteRing& f, const IndexMatrix& a,
                              const IndexCertificate& cert);

}  // namespace ringlab
