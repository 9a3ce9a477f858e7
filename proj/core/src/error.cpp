#include "discrete_remez/error.hpp"

namespace discrete_remez {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kInvalidParameter: return "invalid-parameter";
    case ErrorCode::kInsufficientPoints: return "insufficient-points";
    case ErrorCode::kTooLarge: return "too-large";
    case ErrorCode::kParseError: return "parse-error";
    case ErrorCode::kNotApplicable: return "not-applicable";
    case ErrorCode::kIndefiniteSet: return "indefinite-set";
    case ErrorCode::kDivergent: return "divergent";
    case ErrorCode::kFalsificationFound: return "falsification-found";
  }
  return "unknown";
}

void fail(ErrorCode code, const std::string& what) {
  throw Error(code, std::string(to_string(code)) + ": " + what);
}

}  // namespace discrete_remez
