#include "discrete_remez/serialize.hpp"

#include <fmt/format.h>
#include <nlohmann/json.hpp>

namespace discrete_remez {

namespace {

using nlohmann::json;

std::string dump(const json& j) { return j.dump(1); }

json polynomial_json(const Polynomial& p) { return json::parse(p.to_json()); }

}  // namespace

std::string to_json(const SpanResult& r) {
  return dump({{"mode", r.mode == SpanMode::kExact ? "exact" : "interval"},
               {"omega_lo", r.omega_lo},
               {"omega_hi", r.omega_hi},
               {"witness_eps", r.witness_eps},
               {"attained", r.attained}});
}

std::string to_json(const BoundReport& r) {
  json j = {{"n", r.n},
            {"d", r.d},
            {"lambda", r.lambda},
            {"factor", r.factor},
            {"log_factor", r.log_factor},
            {"log_space", r.log_space},
            {"source", to_string(r.source)}};
  j["omega_used"] = r.omega_used ? json(*r.omega_used) : json(nullptr);
  return dump(j);
}

std::string to_json(const RemezEstimate& r) {
  return dump({{"value", r.value},
               {"probe", r.probe},
               {"probe_index", r.probe_index},
               {"resolution", r.resolution},
               {"probe_count", r.probe_count},
               {"definite", r.definite},
               {"conditioning", r.conditioning},
               {"ill_conditioned", r.ill_conditioned},
               {"max_duality_gap", r.max_duality_gap},
               {"witness", polynomial_json(r.witness)}});
}

std::string to_json(const FalsifyReport& r) {
  json j = {{"trials", r.trials},
            {"bound", r.bound},
            {"max_ratio", r.max_ratio},
            {"worst_trial", r.worst_trial},
            {"violations", r.violations},
            {"seed", r.seed},
            {"resolution", r.resolution},
            {"worst_coeffs", r.worst_coeffs},
            {"worst_probe", r.worst_probe}};
  j["first_violation"] = r.first_violation ? json(*r.first_violation) : json(nullptr);
  return dump(j);
}

std::string to_json(const FavardResult& r) {
  return dump({{"value", r.value},
               {"subset", r.subset},
               {"heuristic", r.heuristic},
               {"subsets_examined", r.subsets_examined}});
}

std::string to_json(const SpreadReport& r) {
  json table = json::array();
  for (const auto& [p, e] : r.eta_table) {
    table.push_back({{"p", p}, {"eta_lo", e.lo}, {"eta_hi", e.hi}, {"exact", e.exact}});
  }
  return dump({{"beta", r.beta},
               {"metric", to_string(r.metric)},
               {"rho_full", r.rho_full},
               {"v_lo", r.v_lo},
               {"v_hi", r.v_hi},
               {"exact", r.exact},
               {"best_subset", r.best_subset},
               {"eta_table", std::move(table)}});
}

std::string to_json(const SpanningTree& t) {
  json edges = json::array();
  for (const auto& e : t.edges) edges.push_back({{"i", e.i}, {"j", e.j}, {"dist", e.dist}});
  return dump({{"metric", to_string(t.metric)}, {"edges", std::move(edges)}});
}

std::string eta_table_to_csv(const SpreadReport& r) {
  std::string out = "p,eta_lo,eta_hi,exact\n";
  for (const auto& [p, e] : r.eta_table) {
    out += fmt::format("{},{:.17g},{:.17g},{}\n", p, e.lo, e.hi, e.exact ? 1 : 0);
  }
  return out;
}

}  // namespace discrete_remez
