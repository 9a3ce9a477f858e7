#include "discrete_remez/remez_bounds.hpp"

#include <cmath>
#include <limits>

#include <fmt/format.h>

#include "discrete_remez/chebyshev.hpp"
#include "discrete_remez/error.hpp"

namespace discrete_remez {

namespace {

constexpr double kLogSpaceThreshold = 700.0;

void fill_factor(BoundReport& r, double x) {
  if (r.d * std::acosh(x) > kLogSpaceThreshold) {
    r.log_space = true;
    r.log_factor = chebyshev_log(r.d, x);
    r.factor = std::numeric_limits<double>::infinity();
  } else {
    r.factor = chebyshev_eval(r.d, x);
    r.log_factor = std::log(r.factor);
  }
}

}  // namespace

std::string_view to_string(BoundSource source) noexcept {
  switch (source) {
    case BoundSource::kClassical: return "classical-remez";
    case BoundSource::kBrudnyiGanzburg: return "brudnyi-ganzburg";
    case BoundSource::kSpan: return "metric-span";
    case BoundSource::kGridProduct: return "grid-product";
  }
  return "unknown";
}

BoundReport remez_factor_1d(double mu, int d) {
  require(mu > 0.0 && mu <= 2.0, ErrorCode::kInvalidParameter,
          fmt::format("measure must lie in (0, 2], got {}", mu));
  require(d >= 0, ErrorCode::kInvalidParameter, "degree must be >= 0");
  BoundReport r;
  r.n = 1;
  r.d = d;
  r.lambda = mu / 2.0;
  r.source = BoundSource::kClassical;
  fill_factor(r, (4.0 - mu) / mu);
  return r;
}

BoundReport brudnyi_ganzburg_factor(int n, int d, double lambda) {
  require(n >= 1, ErrorCode::kInvalidParameter, "dimension must be >= 1");
  require(d >= 0, ErrorCode::kInvalidParameter, "degree must be >= 0");
  require(lambda > 0.0 && lambda <= 1.0, ErrorCode::kInvalidParameter,
          fmt::format("lambda must lie in (0, 1], got {}", lambda));
  BoundReport r;
  r.n = n;
  r.d = d;
  r.lambda = lambda;
  r.source = BoundSource::kBrudnyiGanzburg;
  if (lambda == 1.0) return r;
  double x;
  if (n == 1) {
    // (1 + (1 - l)) / (1 - (1 - l)) without the cancellation in 1 - (1 - l).
    x = (2.0 - lambda) / lambda;
  } else {
    const double root = std::pow(1.0 - lambda, 1.0 / n);
    x = (1.0 + root) / (1.0 - root);
  }
  fill_factor(r, x);
  return r;
}

BoundReport remez_span_bound(const PointSet& z, const SpanResult& span, int d,
                             LambdaNormalization norm) {
  require(span.omega_lo > 0.0, ErrorCode::kNotApplicable,
          "certified span is zero; no bound from omega");
  const double scale = norm == LambdaNormalization::kBoxVolume ? z.box().volume() : 1.0;
  const double lambda = std::min(1.0, span.omega_lo / scale);
  BoundReport r = brudnyi_ganzburg_factor(static_cast<int>(z.dim()), d, lambda);
  r.source = BoundSource::kSpan;
  r.omega_used = span.omega_lo;
  return r;
}

BoundReport remez_span_bound(const PointSet& z, int d, const VitushkinModel& model,
                             LambdaNormalization norm) {
  return remez_span_bound(z, omega_nd(z, d, model), d, norm);
}

BoundReport grid_product_bound(int n, int s, int d) {
  require(n >= 1, ErrorCode::kInvalidParameter, "dimension must be >= 1");
  require(s > d, ErrorCode::kNotApplicable, fmt::format("need s > d, got s = {}, d = {}", s, d));
  const auto grid = make_grid_1d(s);
  BoundReport r = remez_span_bound(grid, d, VitushkinModel::builtin(1, d));
  r.n = n;
  r.source = BoundSource::kGridProduct;
  r.log_factor *= n;
  if (r.log_space || r.log_factor > kLogSpaceThreshold) {
    r.log_space = true;
    r.factor = std::numeric_limits<double>::infinity();
  } else {
    r.factor = std::pow(r.factor, n);
  }
  return r;
}

}  // namespace discrete_remez
