#include "discrete_remez/chebyshev.hpp"

#include <cmath>

#include "discrete_remez/error.hpp"

namespace discrete_remez {

double chebyshev_eval(int d, double x) {
  require(d >= 0, ErrorCode::kInvalidParameter, "Chebyshev degree must be >= 0");
  if (d == 0) return 1.0;
  if (x == 1.0) return 1.0;
  if (x == -1.0) return d % 2 == 0 ? 1.0 : -1.0;
  if (std::abs(x) < 1.0) return std::cos(d * std::acos(x));
  const double v = std::cosh(d * std::acosh(std::abs(x)));
  return (x < 0.0 && d % 2 == 1) ? -v : v;
}

double chebyshev_log(int d, double x) {
  require(d >= 0, ErrorCode::kInvalidParameter, "Chebyshev degree must be >= 0");
  require(x >= 1.0, ErrorCode::kInvalidParameter, "chebyshev_log needs x >= 1");
  // cosh(t) = e^t (1 + e^{-2t}) / 2.
  const double t = d * std::acosh(x);
  return t + std::log1p(std::exp(-2.0 * t)) - std::log(2.0);
}

double chebyshev_recurrence(int d, double x) {
  require(d >= 0, ErrorCode::kInvalidParameter, "Chebyshev degree must be >= 0");
  if (d == 0) return 1.0;
  double prev = 1.0, cur = x;
  for (int k = 1; k < d; ++k) {
    const double next = 2.0 * x * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

}  // namespace discrete_remez
