#include "bratteli/error.hpp"

namespace bratteli {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::ZeroColumn: return "ZeroColumn";
    case ErrorCode::NegativeSlack: return "NegativeSlack";
    case ErrorCode::EmptyLevel: return "EmptyLevel";
    case ErrorCode::NonPositiveSize: return "NonPositiveSize";
    case ErrorCode::NegativeEntry: return "NegativeEntry";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::NoTail: return "NoTail";
    case ErrorCode::NoExcessSlack: return "NoExcessSlack";
    case ErrorCode::TailSlackUnsupported: return "TailSlackUnsupported";
    case ErrorCode::NotNormalized: return "NotNormalized";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::NoNextLevel: return "NoNextLevel";
    case ErrorCode::MixedLevel: return "MixedLevel";
    case ErrorCode::MultiplicityMismatch: return "MultiplicityMismatch";
    case ErrorCode::NotHomomorphism: return "NotHomomorphism";
    case ErrorCode::NotExactlyRepresentable: return "NotExactlyRepresentable";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::SemanticError: return "SemanticError";
  }
  return "Unknown";
}

}  // namespace bratteli
