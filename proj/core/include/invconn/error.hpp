#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace invconn {

enum class ErrorCode {
  NonSymmetric,
  NoConvergence,
  NonAntisymmetric,
  NotInAlgebra,
  InvalidLift,
  NotTraceless,
  NotSymmetric,
  NotInSolutionSpace,
  NotEquivariant,
  InvalidArgument,
};

std::string_view to_string(ErrorCode code) noexcept;

// Base of every error thrown by the library. Carries a stable code so that
// callers (the CLI in particular) can map failures without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace invconn
