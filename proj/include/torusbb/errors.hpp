#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace torusbb {

enum class ErrorCode {
  DimensionMismatch,
  EmptyGenerators,
  MonoidHasUnits,
  Inhomogeneous,
  NotMinimalPresentation,
  WeightOutsideMonoid,
  InfiniteComponent,
  NonGenericWeight,
  SyntaxError,
  UnknownVariable,
  Overflow,
  InvalidArgument,
  InvalidInput,
};

std::string_view error_code_name(ErrorCode code);

/// Domain error raised by every library operation. `location` is free-form
/// context (a byte offset, a variable name, a partition) and may be empty.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& message, std::string location = {})
      : std::runtime_error(message), code_(code), location_(std::move(location)) {}

  ErrorCode code() const noexcept { return code_; }
  const std::string& location() const noexcept { return location_; }

private:
  ErrorCode code_;
  std::string location_;
};

}  // namespace torusbb
