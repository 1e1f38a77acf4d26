#include "torusbb/errors.hpp"

namespace torusbb {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::EmptyGenerators: return "EmptyGenerators";
    case ErrorCode::MonoidHasUnits: return "MonoidHasUnits";
    case ErrorCode::Inhomogeneous: return "InhomogeneousError";
    case ErrorCode::NotMinimalPresentation: return "NotMinimalPresentation";
    case ErrorCode::WeightOutsideMonoid: return "WeightOutsideMonoid";
    case ErrorCode::InfiniteComponent: return "InfiniteComponent";
    case ErrorCode::NonGenericWeight: return "NonGenericWeight";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::UnknownVariable: return "UnknownVariable";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::InvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

}  // namespace torusbb
