#include "discrete_remez/polynomial.hpp"

#include <algorithm>
#include <map>

#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "discrete_remez/error.hpp"

namespace discrete_remez {

namespace {

void indices_of_degree(int n, int total, std::size_t axis, MultiIndex& cur,
                       std::vector<MultiIndex>& out) {
  if (axis + 1 == static_cast<std::size_t>(n)) {
    cur[axis] = total;
    out.push_back(cur);
    return;
  }
  for (int k = total; k >= 0; --k) {
    cur[axis] = k;
    indices_of_degree(n, total - k, axis + 1, cur, out);
  }
}

double to_unit(const Box& box, std::size_t axis, double x) {
  return (2.0 * x - box.lo()[axis] - box.hi()[axis]) / box.side(axis);
}

}  // namespace

std::vector<MultiIndex> total_degree_indices(int n, int d) {
  require(n >= 1 && d >= 0, ErrorCode::kInvalidParameter, "need n >= 1 and d >= 0");
  std::vector<MultiIndex> out;
  MultiIndex cur(static_cast<std::size_t>(n), 0);
  for (int total = 0; total <= d; ++total) indices_of_degree(n, total, 0, cur, out);
  return out;
}

std::size_t polynomial_space_dim(int n, int d) {
  // C(n + d, n) built up multiplicatively; exact for the sizes used here.
  std::size_t r = 1;
  for (int i = 1; i <= n; ++i) r = r * static_cast<std::size_t>(d + i) / static_cast<std::size_t>(i);
  return r;
}

ChebyshevBasis::ChebyshevBasis(Box box, int degree)
    : box_(std::move(box)),
      degree_(degree),
      indices_(total_degree_indices(static_cast<int>(box_.dim()), degree)) {}

namespace {

template <class T>
void evaluate_tensor(const Box& box, int degree, const std::vector<MultiIndex>& indices,
                     std::span<const double> x, std::span<T> out) {
  const std::size_t n = box.dim();
  require(x.size() == n, ErrorCode::kInvalidParameter,
          fmt::format("point has arity {}, basis expects {}", x.size(), n));
  const auto stride = static_cast<std::size_t>(degree) + 1;
  // Per-axis T_0..T_d at the mapped coordinate.
  std::vector<T> t(n * stride);
  for (std::size_t a = 0; a < n; ++a) {
    const T lo = box.lo()[a], hi = box.hi()[a];
    const T u = (T(2) * T(x[a]) - lo - hi) / (hi - lo);
    T* row = t.data() + a * stride;
    row[0] = T(1);
    if (degree >= 1) row[1] = u;
    for (std::size_t k = 2; k < stride; ++k) row[k] = T(2) * u * row[k - 1] - row[k - 2];
  }
  for (std::size_t j = 0; j < indices.size(); ++j) {
    T v = T(1);
    for (std::size_t a = 0; a < n; ++a) v *= t[a * stride + static_cast<std::size_t>(indices[j][a])];
    out[j] = v;
  }
}

}  // namespace

void ChebyshevBasis::evaluate(std::span<const double> x, std::span<double> out) const {
  evaluate_tensor(box_, degree_, indices_, x, out);
}

void ChebyshevBasis::evaluate_extended(std::span<const double> x, std::span<long double> out) const {
  evaluate_tensor(box_, degree_, indices_, x, out);
}

std::vector<double> ChebyshevBasis::matrix(std::span<const double> coords) const {
  const std::size_t n = box_.dim();
  const std::size_t rows = coords.size() / n;
  std::vector<double> m(rows * size());
  for (std::size_t i = 0; i < rows; ++i) {
    evaluate(coords.subspan(i * n, n), std::span<double>(m.data() + i * size(), size()));
  }
  return m;
}

std::vector<double> ChebyshevBasis::matrix(const PointSet& z) const {
  return matrix(std::span<const double>(z.coords()));
}

Polynomial::Polynomial(Box box, int degree, std::vector<double> coeffs)
    : basis_(std::move(box), degree), coeffs_(std::move(coeffs)) {
  require(coeffs_.size() == basis_.size(), ErrorCode::kInvalidParameter,
          fmt::format("polynomial needs {} coefficients, got {}", basis_.size(), coeffs_.size()));
}

Polynomial Polynomial::constant(Box box, double value) {
  return Polynomial(std::move(box), 0, {value});
}

double Polynomial::operator()(std::span<const double> x) const {
  if (dim() == 1) {
    require(x.size() == 1, ErrorCode::kInvalidParameter, "point arity does not match");
    // In one dimension the graded order is just T_0, T_1, ..., T_d.
    const double u = to_unit(box(), 0, x[0]);
    double b1 = 0.0, b2 = 0.0;
    for (std::size_t k = coeffs_.size(); k-- > 1;) {
      const double b0 = coeffs_[k] + 2.0 * u * b1 - b2;
      b2 = b1;
      b1 = b0;
    }
    return coeffs_[0] + u * b1 - b2;
  }
  std::vector<double> values(basis_.size());
  basis_.evaluate(x, values);
  double acc = 0.0;
  for (std::size_t j = 0; j < values.size(); ++j) acc += coeffs_[j] * values[j];
  return acc;
}

double eval_poly(const Polynomial& p, std::span<const double> x) { return p(x); }

std::string Polynomial::to_json() const {
  nlohmann::json doc;
  doc["dim"] = dim();
  doc["degree"] = degree();
  doc["basis"] = "chebyshev-box";
  doc["box"] = {{"lo", box().lo()}, {"hi", box().hi()}};
  nlohmann::json terms = nlohmann::json::array();
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    terms.push_back({{"idx", basis_.indices()[j]}, {"c", coeffs_[j]}});
  }
  doc["coeffs"] = std::move(terms);
  return doc.dump(1);
}

Polynomial Polynomial::from_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(ErrorCode::kParseError, fmt::format("polynomial: malformed JSON at byte {}", e.byte));
  }
  try {
    require(doc.value("basis", std::string()) == "chebyshev-box", ErrorCode::kParseError,
            "polynomial basis must be 'chebyshev-box'");
    const int dim = doc.at("dim").get<int>();
    const int degree = doc.at("degree").get<int>();
    Box box(doc.at("box").at("lo").get<std::vector<double>>(),
            doc.at("box").at("hi").get<std::vector<double>>());
    require(static_cast<int>(box.dim()) == dim, ErrorCode::kParseError,
            "polynomial box arity does not match 'dim'");
    ChebyshevBasis basis(box, degree);
    std::map<MultiIndex, std::size_t> slot;
    for (std::size_t j = 0; j < basis.size(); ++j) slot[basis.indices()[j]] = j;
    std::vector<double> coeffs(basis.size(), 0.0);
    const auto& terms = doc.at("coeffs");
    for (std::size_t t = 0; t < terms.size(); ++t) {
      auto idx = terms[t].at("idx").get<MultiIndex>();
      auto it = slot.find(idx);
      require(it != slot.end(), ErrorCode::kParseError,
              fmt::format("coeffs[{}] has a multi-index outside total degree {}", t, degree));
      coeffs[it->second] += terms[t].at("c").get<double>();
    }
    return Polynomial(box, degree, std::move(coeffs));
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::kParseError, std::string("polynomial: ") + e.what());
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kParseError) throw;
    fail(ErrorCode::kParseError, e.what());
  }
}

}  // namespace discrete_remez
