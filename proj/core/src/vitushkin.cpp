#include "discrete_remez/vitushkin.hpp"

#include <cmath>
#include <numeric>

#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "discrete_remez/error.hpp"

namespace discrete_remez {

VitushkinModel::VitushkinModel(int n, int d, std::vector<double> coeffs)
    : n_(n), d_(d), coeffs_(std::move(coeffs)) {
  require(n_ >= 1, ErrorCode::kInvalidParameter, "model dimension must be >= 1");
  require(d_ >= 1, ErrorCode::kInvalidParameter, "model degree must be >= 1");
  require(coeffs_.size() == static_cast<std::size_t>(n_), ErrorCode::kInvalidParameter,
          fmt::format("model needs {} coefficients, got {}", n_, coeffs_.size()));
  for (double c : coeffs_) {
    require(std::isfinite(c) && c >= 0.0, ErrorCode::kInvalidParameter,
            "model coefficients must be finite and nonnegative");
  }
  if (n_ == 1) {
    require(coeffs_[0] == static_cast<double>(d_), ErrorCode::kInvalidParameter,
            "one-dimensional model must be M_d = d");
  }
}

VitushkinModel VitushkinModel::builtin(int n, int d) {
  require(d >= 1, ErrorCode::kInvalidParameter, "model degree must be >= 1");
  if (n == 1) return VitushkinModel(1, d, {static_cast<double>(d)});
  if (n == 2) {
    const double a = 2.0 * d - 1.0;
    return VitushkinModel(2, d, {a * a, 8.0 * d});
  }
  fail(ErrorCode::kNotApplicable,
       fmt::format("no built-in constants for n = {}; supply a constants table", n));
}

VitushkinModel VitushkinModel::from_table(int n, int d, std::span<const double> cprime) {
  require(cprime.size() == static_cast<std::size_t>(n), ErrorCode::kInvalidParameter,
          fmt::format("constants row for n = {} needs {} entries", n, n));
  std::vector<double> coeffs(cprime.size());
  for (int i = 0; i < n; ++i) {
    coeffs[static_cast<std::size_t>(i)] =
        cprime[static_cast<std::size_t>(i)] * std::pow(2.0 * d, n - i);
  }
  return VitushkinModel(n, d, std::move(coeffs));
}

double VitushkinModel::coefficient_sum() const noexcept {
  return std::accumulate(coeffs_.begin(), coeffs_.end(), 0.0);
}

double VitushkinModel::operator()(double eps) const {
  require(eps > 0.0, ErrorCode::kInvalidParameter, fmt::format("eps must be > 0, got {}", eps));
  const double inv = 1.0 / eps;
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * inv + *it;
  return acc;
}

double vitushkin_eval(const VitushkinModel& model, double eps) { return model(eps); }

ConstantsTable ConstantsTable::parse_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(ErrorCode::kParseError, fmt::format("constants table: malformed JSON at byte {}", e.byte));
  }
  require(doc.is_object(), ErrorCode::kParseError, "constants table must be an object");
  ConstantsTable table;
  for (const auto& [key, row] : doc.items()) {
    int n = 0;
    try {
      n = std::stoi(key);
    } catch (const std::exception&) {
      fail(ErrorCode::kParseError, "constants table key '" + key + "' is not a dimension");
    }
    require(row.is_array(), ErrorCode::kParseError, "constants row '" + key + "' must be an array");
    std::vector<double> values;
    for (const auto& v : row) {
      require(v.is_number(), ErrorCode::kParseError, "constants row '" + key + "' has a non-number");
      values.push_back(v.get<double>());
    }
    table.set(n, std::move(values));
  }
  return table;
}

void ConstantsTable::set(int n, std::vector<double> cprime) {
  require(n >= 1 && cprime.size() == static_cast<std::size_t>(n), ErrorCode::kInvalidParameter,
          fmt::format("constants row for n = {} needs {} entries", n, n));
  rows_[n] = std::move(cprime);
}

VitushkinModel ConstantsTable::model(int n, int d) const {
  if (n <= 2) return VitushkinModel::builtin(n, d);
  auto it = rows_.find(n);
  require(it != rows_.end(), ErrorCode::kNotApplicable,
          fmt::format("constants table has no row for n = {}", n));
  return VitushkinModel::from_table(n, d, it->second);
}

}  // namespace discrete_remez
