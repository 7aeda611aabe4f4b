#include "lpt/error.hpp"

namespace lpt {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::InvalidRational: return "InvalidRational";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::NonPositiveMass: return "NonPositiveMass";
    case Errc::NonPositiveFrequency: return "NonPositiveFrequency";
    case Errc::NegativeQuantumNumber: return "NegativeQuantumNumber";
    case Errc::IndexNotReady: return "IndexNotReady";
    case Errc::OrderTooLarge: return "OrderTooLarge";
    case Errc::DomainError: return "DomainError";
    case Errc::DegenerateSystem: return "DegenerateSystem";
    case Errc::SingularPadeSystem: return "SingularPadeSystem";
    case Errc::BracketingFailure: return "BracketingFailure";
    case Errc::NotConverged: return "NotConverged";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

}  // namespace lpt
