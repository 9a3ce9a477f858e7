#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace discrete_remez {

enum class ErrorCode {
  kInvalidParameter,
  kInsufficientPoints,
  kTooLarge,
  kParseError,
  kNotApplicable,
  kIndefiniteSet,
  kDivergent,
  kFalsificationFound,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above; the
/// CLI maps them onto process exit statuses.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& what);

inline void require(bool condition, ErrorCode code, const std::string& what) {
  if (!condition) fail(code, what);
}

}  // namespace discrete_remez
