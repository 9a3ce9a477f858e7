#pragma once

namespace discrete_remez {

/// T_d(x): cos(d arccos x) on [-1, 1], cosh(d arccosh |x|) with the parity
/// sign outside.
double chebyshev_eval(int d, double x);

/// log T_d(x) for x >= 1, finite even where T_d(x) overflows.
double chebyshev_log(int d, double x);

/// T_d(x) by the three-term recurrence; reference path for tests and small d.
double chebyshev_recurrence(int d, double x);

}  // namespace discrete_remez
