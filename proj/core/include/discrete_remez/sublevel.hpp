#pragma once

#include "discrete_remez/polynomial.hpp"

namespace discrete_remez {

/// Lebesgue measure of {x in box : |P(x)| <= rho} for a one-dimensional P.
double sublevel_measure_1d(const Polynomial& p, double rho);

}  // namespace discrete_remez
