#include "discrete_remez/span.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <fmt/format.h>

#include "discrete_remez/error.hpp"

namespace discrete_remez {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kRootTol = 1e-12;

// One maximal eps-range on which the certified counts are constant.
struct Piece {
  double a = 0.0;
  double b = 0.0;  // may be +inf
  std::size_t m_lo = 0;
  std::size_t m_hi = 0;
};

std::vector<Piece> pieces_of(const PointSet& z) {
  const CoveringTable t = covering_table(z);
  std::vector<Piece> out;
  const std::size_t all = z.size();
  if (t.scales.empty()) {
    out.push_back({0.0, kInf, all, all});
    return out;
  }
  out.push_back({0.0, t.scales.front(), all, all});
  for (std::size_t i = 0; i < t.scales.size(); ++i) {
    const double b = i + 1 < t.scales.size() ? t.scales[i + 1] : kInf;
    out.push_back({t.scales[i], b, t.m_lo[i], t.m_hi[i]});
  }
  return out;
}

double power(double x, int n) {
  double r = 1.0;
  for (int i = 0; i < n; ++i) r *= x;
  return r;
}

// g(eps) = eps^n (k - M_d(eps)) = (k - C_0) eps^n - sum_{i>=1} C_i eps^(n-i).
double piece_value(const VitushkinModel& model, std::size_t k, double eps) {
  if (eps <= 0.0) return 0.0;
  return power(eps, model.n()) * (static_cast<double>(k) - model(eps));
}

double piece_slope(const VitushkinModel& model, std::size_t k, double eps) {
  const auto& c = model.coeffs();
  const int n = model.n();
  double s = n * (static_cast<double>(k) - c[0]) * power(eps, n - 1);
  for (int i = 1; i < n; ++i) {
    s -= (n - i) * c[static_cast<std::size_t>(i)] * power(eps, n - i - 1);
  }
  return s;
}

struct PieceMax {
  double value = 0.0;
  double eps = 0.0;
  bool attained = true;
};

// Supremum of g over [a, b): endpoints, the left limit at b, and interior
// roots of g' located by bisection on a sign change.
PieceMax piece_sup(const VitushkinModel& model, std::size_t k, double a, double b) {
  PieceMax best{-kInf, a, true};
  auto consider = [&](double eps, bool attained) {
    const double v = piece_value(model, k, eps);
    if (v > best.value) best = {v, eps, attained};
  };
  if (a > 0.0) consider(a, true);
  consider(b, false);
  const double lo = std::max(a, std::numeric_limits<double>::min());
  double sa = piece_slope(model, k, lo);
  double sb = piece_slope(model, k, b);
  if ((sa < 0.0) != (sb < 0.0)) {
    double x0 = lo, x1 = b;
    while (x1 - x0 > kRootTol * std::max(1.0, x1)) {
      const double mid = 0.5 * (x0 + x1);
      if ((piece_slope(model, k, mid) < 0.0) == (sa < 0.0)) {
        x0 = mid;
      } else {
        x1 = mid;
      }
    }
    consider(0.5 * (x0 + x1), true);
  }
  return best;
}

void check_model(const PointSet& z, int d, const VitushkinModel& model) {
  require(model.n() == static_cast<int>(z.dim()), ErrorCode::kInvalidParameter,
          fmt::format("model dimension {} does not match point set dimension {}", model.n(),
                      z.dim()));
  require(model.d() == d, ErrorCode::kInvalidParameter,
          fmt::format("model degree {} does not match d = {}", model.d(), d));
}

}  // namespace

SpanResult omega_1d(const PointSet& z, int d) {
  require(z.dim() == 1, ErrorCode::kInvalidParameter, "omega_1d needs dim 1");
  require(d >= 1, ErrorCode::kInvalidParameter, "degree must be >= 1");
  SpanResult r;
  r.mode = SpanMode::kExact;
  const auto profile = covering_profile_1d(z);
  const auto dd = static_cast<std::size_t>(d);
  for (const auto& p : profile.pieces()) {
    if (p.count <= dd || !std::isfinite(p.eps_max)) continue;
    // eps (k - d) increases on the piece; the sup is the left limit at eps_max.
    const double v = p.eps_max * static_cast<double>(p.count - dd);
    if (v > r.omega_lo) {
      r.omega_lo = r.omega_hi = v;
      r.witness_eps = p.eps_max;
      r.attained = false;
    }
  }
  if (r.omega_lo == 0.0) {
    // Zero is reached on the piece with count d, if any, or only as eps -> 0.
    r.attained = false;
    for (const auto& p : profile.pieces()) {
      if (p.count == dd) {
        r.attained = true;
        r.witness_eps = p.eps_min;
        break;
      }
    }
  }
  return r;
}

SpanResult omega_nd(const PointSet& z, int d, const VitushkinModel& model) {
  check_model(z, d, model);
  if (z.dim() == 1) return omega_1d(z, d);
  SpanResult r;
  r.mode = SpanMode::kInterval;
  PieceMax best_lo{0.0, 0.0, false};
  double best_hi = 0.0;
  for (const auto& p : pieces_of(z)) {
    if (!std::isfinite(p.b)) {
      // g grows without bound iff its leading coefficient is positive.
      require(static_cast<double>(p.m_hi) <= model.coeffs()[0], ErrorCode::kInvalidParameter,
              "model constant term is below the coarse-scale count; the span is unbounded");
      if (p.a > 0.0) {
        const double vlo = piece_value(model, p.m_lo, p.a);
        if (vlo > best_lo.value) best_lo = {vlo, p.a, true};
        best_hi = std::max(best_hi, piece_value(model, p.m_hi, p.a));
      }
      continue;
    }
    const PieceMax lo = piece_sup(model, p.m_lo, p.a, p.b);
    if (lo.value > best_lo.value) best_lo = lo;
    best_hi = std::max(best_hi, piece_sup(model, p.m_hi, p.a, p.b).value);
  }
  r.omega_lo = std::max(0.0, best_lo.value);
  r.omega_hi = std::max(r.omega_lo, best_hi);
  r.witness_eps = best_lo.eps;
  r.attained = best_lo.attained;
  return r;
}

PositivityWitness omega_positive(const PointSet& z, int d, const VitushkinModel& model) {
  check_model(z, d, model);
  std::vector<Piece> pieces;
  if (z.dim() == 1) {
    const auto profile = covering_profile_1d(z);
    for (const auto& p : profile.pieces()) {
      pieces.push_back({p.eps_min, p.eps_max, p.count, p.count});
    }
  } else {
    pieces = pieces_of(z);
  }
  for (const auto& p : pieces) {
    const double k = static_cast<double>(p.m_lo);
    const double top = std::isfinite(p.b) ? p.b : std::max(2.0 * p.a, 1.0);
    // M_d is nonincreasing, so k - M_d is best near the right end.
    if (!(k > model(top))) continue;
    double eps;
    if (p.a > 0.0 && k > model(p.a)) {
      eps = p.a;
    } else {
      double x0 = p.a, x1 = top;  // M_d(x0) >= k > M_d(x1)
      for (int it = 0; it < 200 && x1 - x0 > kRootTol * x1; ++it) {
        const double mid = 0.5 * (x0 + x1);
        if (k > model(mid)) {
          x1 = mid;
        } else {
          x0 = mid;
        }
      }
      eps = 0.5 * (x1 + top);
      if (!(eps < top) || !(k > model(eps))) eps = x1;
    }
    return {true, eps, p.m_lo, model(eps)};
  }
  return {};
}

double omega_min_distance_bound(const PointSet& z, int d, const VitushkinModel& model) {
  check_model(z, d, model);
  const double eps0 = min_pairwise_distance(z);
  return std::max(0.0, piece_value(model, z.size(), eps0));
}

std::vector<CurveSample> span_curve(const PointSet& z, const VitushkinModel& model) {
  require(model.n() == static_cast<int>(z.dim()), ErrorCode::kInvalidParameter,
          "model dimension does not match point set dimension");
  std::vector<Piece> pieces;
  if (z.dim() == 1) {
    const auto profile = covering_profile_1d(z);
    for (const auto& p : profile.pieces()) {
      pieces.push_back({p.eps_min, p.eps_max, p.count, p.count});
    }
  } else {
    pieces = pieces_of(z);
  }
  std::vector<CurveSample> out;
  auto sample = [&](const Piece& p, double eps, bool left) {
    const double md = model(eps);
    out.push_back({eps, left, p.m_lo, p.m_hi, md, piece_value(model, p.m_lo, eps),
                   piece_value(model, p.m_hi, eps)});
  };
  for (const auto& p : pieces) {
    if (p.a > 0.0) sample(p, p.a, false);
    if (std::isfinite(p.b)) sample(p, p.b, true);
  }
  return out;
}

std::string curve_to_csv(const std::vector<CurveSample>& curve) {
  std::string out = "eps,left_limit,m_lo,m_hi,m_d,value_lo,value_hi\n";
  for (const auto& s : curve) {
    out += fmt::format("{:.17g},{},{},{},{:.17g},{:.17g},{:.17g}\n", s.eps, s.left_limit ? 1 : 0,
                       s.m_lo, s.m_hi, s.vitushkin, s.value_lo, s.value_hi);
  }
  return out;
}

}  // namespace discrete_remez
