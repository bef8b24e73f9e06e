#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace ringlab {

enum class ErrorKind {
  InfiniteRing,
  DimensionMismatch,
  UnsupportedDescriptor,
  NotInS,
  BudgetExceeded,
  NotHermite,
  NotReducible,
  NotComaximal,
  NoWitness,
  ConstructionFailed,
  HypothesisFailed,
  NotUnit,
  ZeroInput,
  NoDecomposition,
  NoFactorization,
  ParseError,
  SemanticError,
};

const char* to_string(ErrorKind kind);

/// Every failure raised by the library. `detail` carries a kind-specific
/// integer: the failing step for ConstructionFailed, the orbit size for
/// NotHermite / NotReducible, otherwise 0.
class RingError : public std::runtime_error {
 public:
  RingError(ErrorKind kind, const std::string& what, long long detail = 0)
      : std::runtime_error(what), kind_(kind), detail_(detail) {}

  ErrorKind kind() const noexcept { return kind_; }
  long long detail() const noexcept { return detail_; }

 private:
  ErrorKind kind_;
  long long detail_;
};

class ParseError : public RingError {
 public:
  ParseError(const std::string& what, std::size_t offset,
             std::vector<std::string> expected)
      : RingError(ErrorKind::ParseError, what,
                  static_cast<long long>(offset)),
        offset_(offset),
        expected_(std::move(expected)) {}

  std::size_t offset() const noexcept { return offset_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  std::size_t offset_;
  std::vector<std::string> expected_;
};

}  // namespace ringlab
