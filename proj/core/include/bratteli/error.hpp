#ifndef BRATTELI_ERROR_HPP
#define BRATTELI_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace bratteli {

enum class ErrorCode {
  // diagram_model
  DimensionMismatch,
  ZeroColumn,
  NegativeSlack,
  EmptyLevel,
  NonPositiveSize,
  NegativeEntry,
  IndexOutOfRange,
  NoTail,
  // normalization
  NoExcessSlack,
  TailSlackUnsupported,
  NotNormalized,
  // path_space / cylinder_algebra
  CapExceeded,
  NoNextLevel,
  MixedLevel,
  MultiplicityMismatch,
  NotHomomorphism,
  NotExactlyRepresentable,
  // frontend
  SyntaxError,
  SemanticError,
};

std::string_view to_string(ErrorCode code);

/// The single exception type thrown by the library. `code()` identifies
/// the failure class; `what()` carries a human-readable location.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace bratteli

#endif  // BRATTELI_ERROR_HPP
