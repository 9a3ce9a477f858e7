#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>

#include <fmt/format.h>

#include <discrete_remez/chebyshev.hpp>
#include <discrete_remez/error.hpp>
#include <discrete_remez/favard.hpp>
#include <discrete_remez/pointset.hpp>
#include <discrete_remez/remez_bounds.hpp>
#include <discrete_remez/remez_span.hpp>
#include <discrete_remez/span.hpp>

#include "commands.hpp"

namespace cli {

using nlohmann::json;
namespace dr = discrete_remez;

namespace {

constexpr double kSoundnessSlack = 1e-6;

struct Table {
  std::string header;
  std::vector<std::string> rows;
  std::vector<std::string> failures;

  void add(const std::string& row, bool pass, const std::string& label) {
    rows.push_back(row + (pass ? ",1" : ",0"));
    if (!pass) failures.push_back(label);
  }
};

std::string num(double v) { return fmt::format("{:.17g}", v); }

Table grid_span() {
  Table t{"s,d,omega,closed_form,abs_err,pass", {}, {}};
  for (int d = 2; d <= 4; ++d) {
    for (int s = 5; s <= 41; ++s) {
      const double omega = dr::omega_1d(dr::make_grid_1d(s), d).omega_lo;
      const double closed = s > d ? 2.0 * (s - d) / (s - 1) : 0.0;
      const double err = std::abs(omega - closed);
      t.add(fmt::format("{},{},{},{},{}", s, d, num(omega), num(closed), num(err)), err <= 1e-10,
            fmt::format("s={} d={}", s, d));
    }
  }
  return t;
}

Table power_span() {
  Table t{"r,d,K,omega,reference,ratio,pass", {}, {}};
  for (int r = 1; r <= 2; ++r) {
    for (int d = 2; d <= 5; ++d) {
      const int k = 8 * d * d;
      const double omega = dr::omega_1d(dr::make_power_set(r, k), d).omega_lo;
      const double ref = std::pow(r, r) / std::pow(r + 1, r + 1) / std::pow(d, r);
      const double ratio = omega / ref;
      t.add(fmt::format("{},{},{},{},{},{}", r, d, k, num(omega), num(ref), num(ratio)),
            ratio >= 0.5 && ratio <= 2.0, fmt::format("r={} d={}", r, d));
    }
  }
  return t;
}

Table geometric_span() {
  Table t{"q,d,K,omega,reference,ratio,pass", {}, {}};
  for (double q : {0.5, 0.8}) {
    for (int d = 2; d <= 4; ++d) {
      const int k = 4 * d;
      const double omega = dr::omega_1d(dr::make_geometric_set(q, k), d).omega_lo;
      const double ref = std::pow(q, d) / std::log(1.0 / q);
      const double ratio = omega / ref;
      t.add(fmt::format("{},{},{},{},{},{}", num(q), d, k, num(omega), num(ref), num(ratio)),
            ratio >= 0.25 && ratio <= 4.0, fmt::format("q={} d={}", q, d));
    }
  }
  return t;
}

Table grid_bound(unsigned threads) {
  Table t{"s,d,mu,factor,closed_factor,exact,exact_within_factor,decreasing,pass", {}, {}};
  for (int d = 2; d <= 4; ++d) {
    double previous = std::numeric_limits<double>::infinity();
    for (int s : {11, 21, 41, 81}) {
      const auto z = dr::make_grid_1d(s);
      const auto span = dr::omega_1d(z, d);
      const auto bound = dr::remez_span_bound(z, span, d);
      const double mu = 2.0 * (s - d) / (s - 1);
      const double closed = dr::chebyshev_eval(d, (4.0 - mu) / mu);
      const double exact = dr::exact_remez_span(z, d, 513, threads).value;
      const bool within = exact <= bound.factor + kSoundnessSlack;
      const bool decreasing = bound.factor < previous;
      const bool matches = std::abs(bound.factor - closed) <= 1e-9 * closed;
      previous = bound.factor;
      t.add(fmt::format("{},{},{},{},{},{},{},{}", s, d, num(span.omega_lo), num(bound.factor),
                        num(closed), num(exact), within ? 1 : 0, decreasing ? 1 : 0),
            within && decreasing && matches, fmt::format("s={} d={}", s, d));
    }
  }
  return t;
}

Table sparse_sets(unsigned threads) {
  Table t{"set,param,d,K,omega,factor_box,factor_unit,exact,favard,favard_reference,"
          "favard_below_exact,unit_form_sound,pass",
          {}, {}};
  struct Case {
    std::string name;
    double param;
    std::function<dr::PointSet(int)> make;
    std::function<int(int)> count;
  };
  const std::vector<Case> cases = {
      {"power", 1.0, [](int k) { return dr::make_power_set(1.0, k); }, [](int d) { return 8 * d * d; }},
      {"power", 2.0, [](int k) { return dr::make_power_set(2.0, k); }, [](int d) { return 8 * d * d; }},
      {"geometric", 0.5, [](int k) { return dr::make_geometric_set(0.5, k); }, [](int d) { return 4 * d; }},
      {"geometric", 0.8, [](int k) { return dr::make_geometric_set(0.8, k); }, [](int d) { return 4 * d; }},
  };
  for (const auto& c : cases) {
    for (int d = 2; d <= 4; ++d) {
      const int k = c.count(d);
      const auto z = c.make(k);
      const auto span = dr::omega_1d(z, d);
      const auto box = dr::remez_span_bound(z, span, d, dr::LambdaNormalization::kBoxVolume);
      const auto unit = dr::remez_span_bound(z, span, d, dr::LambdaNormalization::kUnitVolume);
      const double exact = dr::exact_remez_span(z, d, 513, threads).value;
      const double favard = dr::favard_bound(z, d).value;
      double reference = std::nan("");
      if (c.name == "power" && c.param == 1.0) reference = std::pow(2.0 * d, d);
      if (c.name == "geometric" && c.param == 0.5) {
        reference = (d + 1) * std::pow(2.0, (d * d + 3.0 * d - 2.0) / 2.0);
      }
      const bool within = exact <= box.factor + kSoundnessSlack;
      t.add(fmt::format("{},{},{},{},{},{},{},{},{},{},{},{}", c.name, num(c.param), d, k,
                        num(span.omega_lo), num(box.factor), num(unit.factor), num(exact),
                        num(favard), std::isnan(reference) ? std::string() : num(reference),
                        favard < exact - kSoundnessSlack ? 1 : 0,
                        exact <= unit.factor + kSoundnessSlack ? 1 : 0),
            within, fmt::format("{} {} d={}", c.name, c.param, d));
    }
  }
  return t;
}

Table grid_product(unsigned threads) {
  Table t{"n,s,d,one_dim_factor,product_bound,exact_one_dim,exact,pass", {}, {}};
  for (int s : {5, 11}) {
    for (int d = 2; d <= 3; ++d) {
      const auto product = dr::grid_product_bound(2, s, d);
      const auto one = dr::remez_span_bound(dr::make_grid_1d(s), d, dr::VitushkinModel::builtin(1, d));
      const double exact1 = dr::exact_remez_span(dr::make_grid_1d(s), d, 513, threads).value;
      const double exact2 = dr::exact_remez_span(dr::make_grid_nd(2, s), d, 65, threads).value;
      t.add(fmt::format("2,{},{},{},{},{},{}", s, d, num(one.factor), num(product.factor),
                        num(exact1), num(exact2)),
            exact2 <= product.factor + kSoundnessSlack, fmt::format("s={} d={}", s, d));
    }
  }
  return t;
}

}  // namespace

int cmd_reproduce(const ReproduceArgs& a, const GlobalOptions& g) {
  const Context ctx("reproduce", {{"section", a.section}, {"out", a.out_dir}}, g);
  const std::map<std::string, std::function<Table()>> sections = {
      {"grid-span", [] { return grid_span(); }},
      {"power-span", [] { return power_span(); }},
      {"geometric-span", [] { return geometric_span(); }},
      {"grid-bound", [&] { return grid_bound(g.threads); }},
      {"sparse-bound", [&] { return sparse_sets(g.threads); }},
      {"grid-product", [&] { return grid_product(g.threads); }},
  };
  std::vector<std::string> wanted;
  if (a.section == "all") {
    for (const auto& [name, fn] : sections) wanted.push_back(name);
  } else {
    dr::require(sections.count(a.section) != 0, dr::ErrorCode::kInvalidParameter,
                fmt::format("unknown section '{}'", a.section));
    wanted.push_back(a.section);
  }
  std::filesystem::create_directories(a.out_dir);
  json summary = json::array();
  bool ok = true;
  for (const auto& name : wanted) {
    const Table t = sections.at(name)();
    const auto path = std::filesystem::path(a.out_dir) / (name + ".csv");
    std::ofstream out(path, std::ios::binary);
    dr::require(out.good(), dr::ErrorCode::kParseError, "cannot write " + path.string());
    out << "# manifest " << ctx.manifest().dump() << "\n" << t.header << "\n";
    for (const auto& row : t.rows) out << row << "\n";
    summary.push_back({{"section", name}, {"file", path.string()}, {"rows", t.rows.size()},
                       {"failures", t.failures}});
    ok = ok && t.failures.empty();
  }
  ctx.emit_json({{"sections", summary}, {"pass", ok}});
  return ok ? kExitOk : kExitVerification;
}

}  // namespace cli
