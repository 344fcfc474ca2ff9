#pragma once

#include <stdexcept>
#include <string>

namespace arrlab {

enum class ErrorCode {
  ParseError,
  BadParam,
  AmbientMismatch,
  NotContained,
  CapExceeded,
  PreconditionViolated,
  NotRealizable,
  BadExplicitForms,
  EmptyArrangement,
  AmbientNotPreserved,
  BadElement,
  ImproperMeasure,
  DegenerateProjection,
  Singular,
  Internal,
};

const char* error_code_name(ErrorCode code);

// Single exception type for all domain errors; the code keeps the C API and
// the CLI diagnostics structured.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace arrlab
