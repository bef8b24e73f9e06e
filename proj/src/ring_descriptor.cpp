#include "ringlab/ring_descriptor.hpp"

#include <algorithm>

#include "ringlab/error.hpp"

namespace ringlab {

namespace {

// Moduli are multiplied in 128-bit arithmetic.
constexpr std::uint64_t kMaxModulus = std::uint64_t{1} << 62;

[[noreturn]] void unsupported(const std::string& what) {
  throw RingError(ErrorKind::UnsupportedDescriptor, what);
}

}  // namespace

RingDescriptor RingDescriptor::integers() {
  return RingDescriptor(std::make_shared<Node>(Node{RingKind::Integer, 0, 0, {}, 0, 0, false}));
}

RingDescriptor RingDescriptor::modular(std::uint64_t modulus) {
  if (modulus < 2) unsupported("modulus must be at least 2 (1 != 0)");
  if (modulus > kMaxModulus) unsupported("modulus too large");
  Node n{RingKind::Modular, 0, 0, {}, 0, 0, false};
  n.modulus = modulus;
  n.finite = true;
  return RingDescriptor(std::make_shared<Node>(std::move(n)));
}

RingDescriptor RingDescriptor::matrix(int size, RingDescriptor base) {
  if (size < 1) unsupported("matrix size must be at least 1");
  Node n{RingKind::Matrix, 0, 0, {}, 0, 0, false};
  n.size = size;
  n.finite = base.is_finite();
  n.children.push_back(std::move(base));
  return RingDescriptor(std::make_shared<Node>(std::move(n)));
}

RingDescriptor RingDescriptor::upper_triangular(int size, RingDescriptor base) {
  if (size < 2) unsupported("upper triangular size must be at least 2");
  Node n{RingKind::UpperTriangular, 0, 0, {}, 0, 0, false};
  n.size = size;
  n.finite = base.is_finite();
  n.children.push_back(std::move(base));
  return RingDescriptor(std::make_shared<Node>(std::move(n)));
}

RingDescriptor RingDescriptor::product(std::vector<RingDescriptor> factors) {
  if (factors.empty()) unsupported("product needs at least one factor");
  // Products are kept flat so the canonical text re-parses to the same ring.
  std::vector<RingDescriptor> flat;
  for (auto& f : factors) {
    if (f.kind() == RingKind::Product) {
      flat.insert(flat.end(), f.factors().begin(), f.factors().end());
    } else {
      flat.push_back(std::move(f));
    }
  }
  factors = std::move(flat);
  if (factors.size() == 1) return factors.front();
  Node n{RingKind::Product, 0, 0, {}, 0, 0, false};
  n.finite = std::all_of(factors.begin(), factors.end(),
                         [](const RingDescriptor& f) { return f.is_finite(); });
  n.children = std::move(factors);
  return RingDescriptor(std::make_shared<Node>(std::move(n)));
}

RingDescriptor RingDescriptor::quadratic_integers() {
  return RingDescriptor(std::make_shared<Node>(Node{RingKind::QuadraticInteger, 0, 0, {}, 0, 0, false}));
}

RingDescriptor RingDescriptor::quadratic_field() {
  return RingDescriptor(std::make_shared<Node>(Node{RingKind::QuadraticField, 0, 0, {}, 0, 0, false}));
}

RingDescriptor RingDescriptor::skew_s(int max_degree, int height) {
  if (max_degree < 0 || height < 0) unsupported("sampling bounds must be nonnegative");
  Node n{RingKind::SkewS, 0, 0, {}, 0, 0, false};
  n.max_degree = max_degree;
  n.height = height;
  return RingDescriptor(std::make_shared<Node>(std::move(n)));
}

std::optional<mpz_class> RingDescriptor::order() const {
  if (!is_finite()) return std::nullopt;
  switch (kind()) {
    case RingKind::Modular:
      return mpz_class(std::to_string(modulus()));
    case RingKind::Matrix:
    case RingKind::UpperTriangular: {
      const mpz_class b = *base().order();
      const unsigned long k = static_cast<unsigned long>(size());
      const unsigned long cells =
          kind() == RingKind::Matrix ? k * k : k * (k + 1) / 2;
      mpz_class out;
      mpz_pow_ui(out.get_mpz_t(), b.get_mpz_t(), cells);
      return out;
    }
    case RingKind::Product: {
      mpz_class out = 1;
      for (const auto& f : factors()) out *= *f.order();
      return out;
    }
    default:
      return std::nullopt;
  }
}

std::string RingDescriptor::to_string() const {
  switch (kind()) {
    case RingKind::Integer:
      return "Z";
    case RingKind::Modular:
      return "Zn(" + std::to_string(modulus()) + ")";
    case RingKind::Matrix:
      return "Mat(" + std::to_string(size()) + "," + base().to_string() + ")";
    case RingKind::UpperTriangular:
      return "Tri(" + std::to_string(size()) + "," + base().to_string() + ")";
    case RingKind::Product: {
      std::string out;
      for (std::size_t i = 0; i < factors().size(); ++i) {
        if (i) out += "x";
        out += factors()[i].to_string();
      }
      return out;
    }
    case RingKind::QuadraticInteger:
      return "Zi7";
    case RingKind::QuadraticField:
      return "Qi7";
    case RingKind::SkewS:
      return "SkewS(" + std::to_string(max_degree()) + "," + std::to_string(height()) + ")";
  }
  return "?";
}

}  // namespace ringlab
