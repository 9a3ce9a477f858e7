#include "discrete_remez/sublevel.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "discrete_remez/error.hpp"

namespace discrete_remez {

namespace {

constexpr double kRootTol = 1e-12;
constexpr int kSamplesPerDegree = 4 * 64;

double bisect(const Polynomial& p, double level, double a, double b) {
  double fa = p(a) - level;
  while (b - a > kRootTol) {
    const double m = 0.5 * (a + b);
    const double fm = p(m) - level;
    if (fm == 0.0) return m;
    if ((fm < 0.0) == (fa < 0.0)) {
      a = m;
      fa = fm;
    } else {
      b = m;
    }
  }
  return 0.5 * (a + b);
}

}  // namespace

double sublevel_measure_1d(const Polynomial& p, double rho) {
  require(p.dim() == 1, ErrorCode::kInvalidParameter, "sub-level measure is one-dimensional");
  require(rho > 0.0, ErrorCode::kInvalidParameter, "rho must be positive");
  const double lo = p.box().lo()[0], hi = p.box().hi()[0];
  const int samples = kSamplesPerDegree * std::max(1, p.degree());
  std::vector<double> cuts{lo, hi};
  // Crossings of P = rho and P = -rho bound every piece of the sub-level set.
  for (double level : {rho, -rho}) {
    double xa = lo, fa = p(lo) - level;
    for (int k = 1; k <= samples; ++k) {
      const double xb = k == samples ? hi : lo + (hi - lo) * k / samples;
      const double fb = p(xb) - level;
      if (fb == 0.0) {
        cuts.push_back(xb);
      } else if (fa != 0.0 && (fa < 0.0) != (fb < 0.0)) {
        cuts.push_back(bisect(p, level, xa, xb));
      }
      xa = xb;
      fa = fb;
    }
  }
  std::sort(cuts.begin(), cuts.end());
  double measure = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double a = cuts[i], b = cuts[i + 1];
    if (b <= a) continue;
    if (std::abs(p(0.5 * (a + b))) <= rho) measure += b - a;
  }
  return measure;
}

}  // namespace discrete_remez
