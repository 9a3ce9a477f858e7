#include "discrete_remez/analytic_bounds.hpp"

#include <cmath>
#include <limits>

#include <fmt/format.h>

#include "discrete_remez/error.hpp"

namespace discrete_remez {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Root of h(e) = sum_{i<n-1} C_i e^(n-1-i) = target. h is increasing with
// h(0) = 0, so bracket by doubling and bisect.
double lower_terms_root(const VitushkinModel& model, double target) {
  const auto& c = model.coeffs();
  const int n = model.n();
  auto h = [&](double e) {
    double acc = 0.0;
    for (int i = 0; i < n - 1; ++i) {
      acc += c[static_cast<std::size_t>(i)] * std::pow(e, n - 1 - i);
    }
    return acc;
  };
  if (n == 1 || h(1.0) == 0.0) return kInf;
  double hi = 1.0;
  while (h(hi) <= target) {
    hi *= 2.0;
    if (hi > 1e300) return kInf;
  }
  double lo = 0.0;
  while (hi - lo > 1e-15 * hi) {
    const double mid = 0.5 * (lo + hi);
    if (h(mid) <= target) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

double epsilon1_any(const VitushkinModel& model) {
  return model.n() == 1 ? kInf : lower_terms_root(model, model.leading());
}

void check_positive(double v, const char* name) {
  require(std::isfinite(v) && v > 0.0, ErrorCode::kInvalidParameter,
          fmt::format("{} must be positive, got {}", name, v));
}

double sigma_of(const VitushkinModel& model, double s) {
  const double sigma = s - (model.n() - 1);
  require(sigma > 0.0, ErrorCode::kInvalidParameter,
          fmt::format("need s > n - 1 (sigma > 0), got s = {} for n = {}", s, model.n()));
  return sigma;
}

}  // namespace

double epsilon1(const VitushkinModel& model, double cap) {
  require(model.n() >= 2, ErrorCode::kNotApplicable, "epsilon1 needs n >= 2");
  const double e = epsilon1_any(model);
  return cap > 0.0 ? std::min(e, cap) : e;
}

AnalyticBound hausdorff_span_bound(const VitushkinModel& model, const HausdorffInput& in) {
  const double sigma = sigma_of(model, in.s);
  check_positive(in.hausdorff, "Hausdorff measure");
  check_positive(in.injectivity_radius, "injectivity radius");
  const double n = model.n();
  const double alpha_hat = in.injectivity_radius / std::sqrt(n);
  const double eps2 =
      std::pow(in.hausdorff / (8.0 * model.leading() * std::sqrt(std::pow(n, in.s))), 1.0 / sigma);
  const double eps_hat = std::min({alpha_hat, epsilon1_any(model), eps2});
  return {0.25 * std::pow(eps_hat, 1.0 - sigma) * in.hausdorff, eps_hat};
}

AnalyticBound covering_growth_span_bound(const VitushkinModel& model, const CoveringGrowthInput& in) {
  const double sigma = sigma_of(model, in.s);
  check_positive(in.growth, "covering growth constant");
  check_positive(in.injectivity_radius, "covering injectivity radius");
  check_positive(in.eps2_denominator, "eps2 denominator factor");
  const double eps2 =
      std::pow(in.growth / (in.eps2_denominator * model.leading()), 1.0 / in.s);
  const double eps_hat = std::min({in.injectivity_radius, epsilon1_any(model), eps2});
  return {0.25 * std::pow(eps_hat, 1.0 - sigma) * in.growth, eps_hat};
}

double epsilon1_prime(const VitushkinModel& model, double growth) {
  const double lead = model.leading();
  require(growth > lead, ErrorCode::kNotApplicable,
          fmt::format("need C > C_(n-1)(n, d) = {}, got {}", lead, growth));
  return lower_terms_root(model, 0.5 * (growth - lead));
}

AnalyticBound hypersurface_span_bound(const VitushkinModel& model, const HypersurfaceInput& in) {
  check_positive(in.injectivity_radius, "injectivity radius");
  const double eps1p = epsilon1_prime(model, in.growth);
  const double eps_hat = std::min(in.injectivity_radius, eps1p);
  return {0.5 * eps_hat * (in.growth - model.leading()), eps_hat};
}

AnalyticBound hypersurface_measure_span_bound(const VitushkinModel& model, double hausdorff,
                                double injectivity_radius) {
  check_positive(hausdorff, "Hausdorff measure");
  check_positive(injectivity_radius, "injectivity radius");
  const double n = model.n();
  const double scale = 2.0 * std::sqrt(std::pow(n, n - 1.0));
  require(hausdorff > scale * model.leading(), ErrorCode::kNotApplicable,
          fmt::format("need H_(n-1) > {}", scale * model.leading()));
  return hypersurface_span_bound(model, {hausdorff / scale, injectivity_radius / std::sqrt(n)});
}

double definite_measure_threshold(const VitushkinModel& model) {
  const double n = model.n();
  return 2.0 * std::sqrt(std::pow(n, n - 1.0)) * model.leading();
}

bool hypersurface_is_definite(const VitushkinModel& model, double area) {
  return area > model.leading();
}

double dense_subset_span_bound(int n, double full_set_bound) {
  require(n >= 1, ErrorCode::kInvalidParameter, "dimension must be >= 1");
  return std::ldexp(full_set_bound, -n);
}

}  // namespace discrete_remez
