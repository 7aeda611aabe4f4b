#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lpt {

enum class Errc {
  InvalidArgument,
  InvalidRational,
  DivisionByZero,
  NonPositiveMass,
  NonPositiveFrequency,
  NegativeQuantumNumber,
  IndexNotReady,
  OrderTooLarge,
  DomainError,
  DegenerateSystem,
  SingularPadeSystem,
  BracketingFailure,
  NotConverged,
};

std::string_view errc_name(Errc code) noexcept;

/// Single exception type for the library; `code()` identifies the failure.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace lpt
