#include "commands.hpp"

#include <fstream>
#include <iostream>
#include <limits>
#include <optional>

#include <fmt/format.h>

#include <discrete_remez/covering.hpp>
#include <discrete_remez/error.hpp>
#include <discrete_remez/favard.hpp>
#include <discrete_remez/pointset.hpp>
#include <discrete_remez/pointset_io.hpp>
#include <discrete_remez/remez_bounds.hpp>
#include <discrete_remez/remez_span.hpp>
#include <discrete_remez/serialize.hpp>
#include <discrete_remez/span.hpp>
#include <discrete_remez/spread.hpp>

namespace cli {

using nlohmann::json;
namespace dr = discrete_remez;

namespace {

constexpr double kSoundnessSlack = 1e-6;

json span_json(const dr::SpanResult& s) { return parsed(dr::to_json(s)); }

dr::SpanResult span_of(const Context& ctx, const dr::PointSet& z, int d) {
  return dr::omega_nd(z, d, ctx.model(static_cast<int>(z.dim()), d));
}

}  // namespace

int cmd_gen(const GenArgs& a, const GlobalOptions& g) {
  const Context ctx("gen", {{"kind", a.kind}, {"s", a.s}, {"n", a.n}, {"r", a.r}, {"q", a.q}, {"k", a.k}}, g);
  std::optional<dr::PointSet> z;
  if (a.kind == "grid1d") {
    z = dr::make_grid_1d(a.s);
  } else if (a.kind == "grid") {
    z = dr::make_grid_nd(a.n, a.s);
  } else if (a.kind == "power") {
    z = dr::make_power_set(a.r, a.k);
  } else if (a.kind == "geometric") {
    z = dr::make_geometric_set(a.q, a.k);
  } else {
    dr::fail(dr::ErrorCode::kInvalidParameter,
             fmt::format("unknown kind '{}'; expected grid1d, grid, power or geometric", a.kind));
  }
  const bool csv = g.csv || (!g.out.empty() && g.out.size() > 4 && g.out.ends_with(".csv"));
  if (csv) {
    ctx.write("# manifest " + ctx.manifest().dump() + "\n" + dr::pointset_to_csv(*z));
  } else {
    json doc = parsed(dr::pointset_to_json(*z));
    doc["manifest"] = ctx.manifest();
    ctx.write(doc.dump(1) + "\n");
  }
  return kExitOk;
}

int cmd_covering(const CoveringArgs& a, const GlobalOptions& g) {
  const Context ctx("covering", {{"input", a.input}, {"eps", a.eps}}, g);
  const dr::PointSet z = dr::load_pointset(a.input);
  json at = json::array();
  for (double e : a.eps) {
    const auto c = dr::covering_bounds_nd(z, e);
    at.push_back({{"eps", e}, {"m_lo", c.m_lo}, {"m_hi", c.m_hi}});
  }
  if (z.dim() == 1) {
    const auto profile = dr::covering_profile_1d(z);
    if (ctx.format() == Format::kCsv) {
      ctx.emit_csv(dr::profile_to_csv(profile));
      return kExitOk;
    }
    json pieces = json::array();
    for (const auto& p : profile.pieces()) {
      pieces.push_back({{"k", p.count}, {"eps_min", p.eps_min}, {"eps_max", p.eps_max}});
    }
    ctx.emit_json({{"exact", true}, {"profile", pieces}, {"at", at}});
    return kExitOk;
  }
  const auto table = dr::covering_table(z);
  if (ctx.format() == Format::kCsv) {
    std::string csv = "eps,m_lo,m_hi\n";
    for (std::size_t i = 0; i < table.scales.size(); ++i) {
      csv += fmt::format("{:.17g},{},{}\n", table.scales[i], table.m_lo[i], table.m_hi[i]);
    }
    ctx.emit_csv(csv);
    return kExitOk;
  }
  json rows = json::array();
  for (std::size_t i = 0; i < table.scales.size(); ++i) {
    rows.push_back({{"eps", table.scales[i]}, {"m_lo", table.m_lo[i]}, {"m_hi", table.m_hi[i]}});
  }
  ctx.emit_json({{"exact", false}, {"table", rows}, {"at", at}});
  return kExitOk;
}

int cmd_omega(const OmegaArgs& a, const GlobalOptions& g) {
  const Context ctx("omega", {{"input", a.input}, {"d", a.d}, {"curve", a.curve}}, g);
  const dr::PointSet z = dr::load_pointset(a.input);
  const auto model = ctx.model(static_cast<int>(z.dim()), a.d);
  const auto span = dr::omega_nd(z, a.d, model);
  const auto curve = dr::curve_to_csv(dr::span_curve(z, model));
  if (!a.curve.empty()) {
    std::ofstream out(a.curve, std::ios::binary);
    dr::require(out.good(), dr::ErrorCode::kParseError, "cannot write " + a.curve);
    out << "# manifest " << ctx.manifest().dump() << "\n" << curve;
  }
  if (ctx.format() == Format::kCsv) {
    ctx.emit_csv(curve);
    return kExitOk;
  }
  const auto pos = dr::omega_positive(z, a.d, model);
  json result = span_json(span);
  result["positive"] = {{"positive", pos.positive}, {"eps", pos.eps}, {"count", pos.count},
                        {"vitushkin", pos.vitushkin}};
  if (z.size() >= 2) result["min_distance_bound"] = dr::omega_min_distance_bound(z, a.d, model);
  ctx.emit_json(std::move(result));
  return kExitOk;
}

int cmd_bound(const BoundArgs& a, const GlobalOptions& g) {
  const Context ctx("bound", {{"input", a.input}, {"d", a.d}, {"unit_volume", a.unit_volume}}, g);
  const dr::PointSet z = dr::load_pointset(a.input);
  const auto span = span_of(ctx, z, a.d);
  const auto norm = a.unit_volume ? dr::LambdaNormalization::kUnitVolume : dr::LambdaNormalization::kBoxVolume;
  const auto bound = dr::remez_span_bound(z, span, a.d, norm);
  ctx.emit_json({{"span", span_json(span)}, {"bound", parsed(dr::to_json(bound))}});
  return kExitOk;
}

int cmd_exact(const ExactArgs& a, const GlobalOptions& g) {
  const Context ctx("exact", {{"input", a.input}, {"d", a.d}, {"resolution", a.resolution},
                              {"falsify", a.falsify}}, g);
  const dr::PointSet z = dr::load_pointset(a.input);
  const auto est = dr::exact_remez_span(z, a.d, a.resolution, g.threads);
  json result = {{"estimate", parsed(dr::to_json(est))}};
  int status = kExitOk;
  if (a.falsify > 0) {
    const auto span = span_of(ctx, z, a.d);
    double bound = est.value;
    std::string source = "exact";
    if (span.omega_lo > 0.0) {
      const auto chain = dr::remez_span_bound(z, span, a.d);
      if (!chain.log_space) {
        bound = chain.factor;
        source = "span";
      }
    }
    const auto rep = dr::falsify(z, a.d, bound, a.falsify, g.seed, a.resolution, g.threads);
    result["falsify"] = parsed(dr::to_json(rep));
    result["falsify"]["bound_source"] = source;
    if (rep.violations > 0) status = kExitVerification;
  }
  ctx.emit_json(std::move(result));
  return status;
}

int cmd_favard(const FavardArgs& a, const GlobalOptions& g) {
  const Context ctx("favard", {{"input", a.input}, {"d", a.d}, {"heuristic", a.heuristic}}, g);
  const dr::PointSet z = dr::load_pointset(a.input);
  const auto r = dr::favard_bound(z, a.d, a.heuristic ? dr::FavardMode::kHeuristic : dr::FavardMode::kExact);
  ctx.emit_json(parsed(dr::to_json(r)));
  return kExitOk;
}

int cmd_spread(const SpreadArgs& a, const GlobalOptions& g) {
  const Context ctx("spread", {{"input", a.input}, {"beta", a.beta}, {"p_max", a.p_max},
                               {"euclidean", a.euclidean}, {"heuristic", a.heuristic},
                               {"d", a.d}, {"cprime", a.cprime}}, g);
  const dr::PointSet z = dr::load_pointset(a.input);
  const auto metric = a.euclidean ? dr::Metric::kEuclidean : dr::Metric::kLinf;
  const auto mode = a.heuristic ? dr::SpreadMode::kHeuristic : dr::SpreadMode::kExact;
  const auto report = dr::beta_spread(z, a.beta, mode, metric, a.p_max);
  if (ctx.format() == Format::kCsv) {
    ctx.emit_csv(dr::eta_table_to_csv(report));
    return kExitOk;
  }
  json result = parsed(dr::to_json(report));
  if (a.d > 0 && z.dim() >= 2) {
    const int n = static_cast<int>(z.dim());
    const double cprime = a.cprime > 0.0 ? a.cprime : ctx.model(n, a.d).coefficient_sum();
    const auto v = dr::spread_positivity_check(z, a.beta, cprime, metric);
    result["positivity"] = {{"positive", v.positive}, {"v_lo", v.v_lo}, {"threshold", v.threshold},
                            {"cprime", cprime}, {"exact_spread", v.exact_spread}};
  }
  ctx.emit_json(std::move(result));
  return kExitOk;
}

int cmd_verify(const VerifyArgs& a, const GlobalOptions& g) {
  const Context ctx("verify", {{"input", a.input}, {"d", a.d}, {"resolution", a.resolution},
                               {"trials", a.trials}}, g);
  const dr::PointSet z = dr::load_pointset(a.input);
  const auto span = span_of(ctx, z, a.d);
  const auto est = dr::exact_remez_span(z, a.d, a.resolution, g.threads);
  json result = {{"span", span_json(span)}, {"estimate", parsed(dr::to_json(est))}};
  if (z.dim() == 1 && z.size() > static_cast<std::size_t>(a.d)) {
    const auto fav = dr::favard_bound(z, a.d);
    result["favard"] = parsed(dr::to_json(fav));
    // Reported, not asserted: the per-subset inequality is not established.
    result["favard_below_exact"] = fav.value < est.value - kSoundnessSlack;
  }
  if (span.omega_lo <= 0.0) {
    result["bound"] = nullptr;
    result["pass"] = nullptr;
    ctx.emit_json(std::move(result));
    std::cerr << "verify: omega lower bound is 0, the span bound does not apply\n";
    return kExitNotApplicable;
  }
  const auto bound = dr::remez_span_bound(z, span, a.d);
  const double limit = bound.log_space ? std::numeric_limits<double>::max() : bound.factor;
  const auto rep = dr::falsify(z, a.d, limit, a.trials, g.seed, a.resolution, g.threads);
  const bool within = est.value <= limit + kSoundnessSlack;
  const bool clean = rep.violations == 0;
  result["bound"] = parsed(dr::to_json(bound));
  result["falsify"] = parsed(dr::to_json(rep));
  result["checks"] = {{"exact_within_bound", within}, {"falsifier_clean", clean}};
  result["pass"] = within && clean;
  ctx.emit_json(std::move(result));
  return within && clean ? kExitOk : kExitVerification;
}

}  // namespace cli
