#include "ringlab/error.hpp"

namespace ringlab {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InfiniteRing: return "InfiniteRing";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::UnsupportedDescriptor: return "UnsupportedDescriptor";
    case ErrorKind::NotInS: return "NotInS";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::NotHermite: return "NotHermite";
    case ErrorKind::NotReducible: return "NotReducible";
    case ErrorKind::NotComaximal: return "NotComaximal";
    case ErrorKind::NoWitness: return "NoWitness";
    case ErrorKind::ConstructionFailed: return "ConstructionFailed";
    case ErrorKind::HypothesisFailed: return "HypothesisFailed";
    case ErrorKind::NotUnit: return "NotUnit";
    case ErrorKind::ZeroInput: return "ZeroInput";
    case ErrorKind::NoDecomposition: return "NoDecomposition";
    case ErrorKind::NoFactorization: return "NoFactorization";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::SemanticError: return "SemanticError";
  }
  return "unknown";
}

}  // namespace ringlab
