#pragma once

#include <stdexcept>
#include <string>

namespace volrisk {

/// Machine-checkable failure codes.  Every throwing operation documents which
/// codes it can raise; tests assert on the code, messages are for humans.
enum class Errc {
  missing_column,
  unparseable_date,
  non_positive_value,
  duplicate_date,
  empty_intersection,
  too_short,
  non_positive,
  window_too_small,
  window_too_large,
  zero_variance,
  length_mismatch,
  zero_price_volatility,
  zero_volatility,
  degenerate_combined_volatility,
  non_positive_sigma_tilde,
  risk_aversion_unity,
  non_positive_sigma,
  coverage_gap,
  empty_input,
  invalid_config,
  io_failure,
};

const char* to_string(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

inline const char* to_string(Errc code) noexcept {
  switch (code) {
    case Errc::missing_column: return "MissingColumn";
    case Errc::unparseable_date: return "UnparseableDate";
    case Errc::non_positive_value: return "NonPositiveValue";
    case Errc::duplicate_date: return "DuplicateDate";
    case Errc::empty_intersection: return "EmptyIntersection";
    case Errc::too_short: return "TooShort";
    case Errc::non_positive: return "NonPositive";
    case Errc::window_too_small: return "WindowTooSmall";
    case Errc::window_too_large: return "WindowTooLarge";
    case Errc::zero_variance: return "ZeroVariance";
    case Errc::length_mismatch: return "LengthMismatch";
    case Errc::zero_price_volatility: return "ZeroPriceVolatility";
    case Errc::zero_volatility: return "ZeroVolatility";
    case Errc::degenerate_combined_volatility: return "DegenerateCombinedVolatility";
    case Errc::non_positive_sigma_tilde: return "NonPositiveSigmaTilde";
    case Errc::risk_aversion_unity: return "RiskAversionUnity";
    case Errc::non_positive_sigma: return "NonPositiveSigma";
    case Errc::coverage_gap: return "CoverageGap";
    case Errc::empty_input: return "Empty";
    case Errc::invalid_config: return "InvalidConfig";
    case Errc::io_failure: return "IoFailure";
  }
  return "UnknownError";
}

}  // namespace volrisk
