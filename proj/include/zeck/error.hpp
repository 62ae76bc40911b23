#pragma once

#include <stdexcept>
#include <string>

namespace zeck {

enum class errc {
  empty_coeffs,
  leading_coeff_zero,
  trailing_coeff_zero,
  negative_coeff,
  non_positive_input,
  negative_input,
  too_large,
  duplicate_value,
  division_by_zero,
  out_of_domain,
  parse_error,
  invalid_argument,
};

constexpr const char* errc_name(errc code) noexcept {
  switch (code) {
    case errc::empty_coeffs: return "EmptyCoeffs";
    case errc::leading_coeff_zero: return "LeadingCoeffZero";
    case errc::trailing_coeff_zero: return "TrailingCoeffZero";
    case errc::negative_coeff: return "NegativeCoeff";
    case errc::non_positive_input: return "NonPositiveInput";
    case errc::negative_input: return "NegativeInput";
    case errc::too_large: return "TooLarge";
    case errc::duplicate_value: return "DuplicateValue";
    case errc::division_by_zero: return "DivisionByZero";
    case errc::out_of_domain: return "OutOfDomain";
    case errc::parse_error: return "ParseError";
    case errc::invalid_argument: return "InvalidArgument";
  }
  return "Unknown";
}

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

}  // namespace zeck
