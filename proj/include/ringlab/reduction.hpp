#pragma once

// Diagonal reduction with certified transforms: Hermite reduction of 1x2 and
// 2x1 matrices, Smith normal form over Z, and elementary-divisor reduction
// over Z, Z/n and small finite rings.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ringlab/matrix.hpp"
#include "ringlab/properties.hpp"

namespace ringlab {

struct CertificateFlags {
  bool paq_equals_d = false;
  bool p_invertible = false;
  bool q_invertible = false;
  bool d_diagonal = false;
  bool chain_condition = false;
};

/// P * A * Q = D. Inverses, when present, are the invertibility evidence;
/// otherwise invertibility is decided by mat_invertible.
struct ReductionCertificate {
  MatrixOverRing p;
  MatrixOverRing q;
  MatrixOverRing d;
  std::optional<MatrixOverRing> p_inverse;
  std::optional<MatrixOverRing> q_inverse;
  /// d_1 ... d_min(rows, cols)
  std::vector<Element> diagonal;
  CertificateFlags flags;
  /// "smith", "smith-mod-n" or "orbit-search".
  std::string method;
  /// States visited by an orbit search (0 otherwise).
  std::uint64_t orbit_size = 0;
};

struct VerifyResult {
  bool ok = false;
  /// First failing clause: "PAQ = D", "P invertible", "Q invertible",
  /// "D diagonal" or "chain condition". Empty when ok.
  std::string clause;
  CertificateFlags flags;
};

/// Recomputes every clause. Throws DimensionMismatch when shapes disagree.
VerifyResult verify_certificate(const MatrixOverRing& a, const ReductionCertificate& cert);

/// R d_{i+1} R inside R d_i and d_i R for consecutive entries. Over Z this is
/// d_i >= 0 and d_i | d_{i+1}.
bool chain_condition(const RingDescriptor& ring, const std::vector<Element>& diagonal);

enum class Orientation { row, column };

struct HermiteResult {
  /// row: (a, b) * transform = (d, 0); column: transform * (a, b)^T = (d, 0)^T.
  MatrixOverRing transform;
  MatrixOverRing transform_inverse;
  Element d;
  std::uint64_t orbit_size = 0;
};

struct ReduceOptions {
  std::uint64_t budget = std::uint64_t{1} << 20;
};

/// Z by the extended Euclidean construction (d = gcd(a, b) >= 0); finite
/// rings by breadth-first search over one-sided elementary operations.
/// Throws NotHermite (detail = orbit size) or BudgetExceeded.
HermiteResult hermite_reduce(const RingDescriptor& ring, const Element& a, const Element& b,
                             Orientation orientation, const ReduceOptions& options = {});

enum class PivotRule {
  /// Entry of least absolute value, division with remainder.
  smallest_entry,
  /// First nonzero entry in column-major order, 2x2 gcd combinations.
  gcd_combination,
};

/// Smith normal form over Z with d_i >= 0, d_i | d_{i+1}, zeros last.
ReductionCertificate smith_form_integers(const MatrixOverRing& a,
                                         PivotRule rule = PivotRule::smallest_entry);

/// Z: Smith form. Z/n: Smith form of the integer lift reduced mod n. Other
/// finite rings: orbit search. Throws NotReducible (detail = orbit size),
/// BudgetExceeded, or UnsupportedDescriptor for infinite rings other than Z.
/// Every returned certificate has passed verify_certificate.
ReductionCertificate diagonal_reduce(const MatrixOverRing& a, const ReduceOptions& options = {});

/// Every matrix of shapes 1x2, 2x1 and 2x2 (bounded by max_rows, max_cols)
/// reduces with a verified certificate. Witness entries are named A11, A12,
/// ... Throws InfiniteRing for infinite rings.
PropertyVerdict check_edr_small(const RingDescriptor& ring, std::size_t max_rows,
                                std::size_t max_cols, const CheckOptions& options = {});

}  // namespace ringlab
