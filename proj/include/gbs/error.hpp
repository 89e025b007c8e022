#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gbs {

enum class ErrorCode {
  MalformedInput,
  ZeroLabel,
  Disconnected,
  EmptyGraph,
  DuplicateId,
  ZeroInput,
  EmptyInput,
  DividesModulus,
  NotPrime,
  IsLoop,
  LabelNotUnit,
  UnknownTarget,
  NotDefined,
  ModularImageTooBig,
  Elementary,
  ConditionFails,
  NotAPath,
  PreconditionViolated,
  UsageError,
};

std::string_view to_string(ErrorCode code);

// Every library failure carries a machine-readable code; the CLI maps these
// onto {"error": code, "detail": ...}.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail),
        code_(code),
        detail_(detail) {}

  ErrorCode code() const noexcept { return code_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

}  // namespace gbs
