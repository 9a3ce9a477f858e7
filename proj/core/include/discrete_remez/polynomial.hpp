#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "discrete_remez/pointset.hpp"

namespace discrete_remez {

using MultiIndex = std::vector<int>;

/// All multi-indices in n variables with total degree <= d, graded and then
/// reverse-lexicographic within a degree: (0,0), (1,0), (0,1), (2,0), ...
std::vector<MultiIndex> total_degree_indices(int n, int d);

/// C(n + d, n), the dimension of the degree-d polynomial space.
std::size_t polynomial_space_dim(int n, int d);

/// Tensor Chebyshev basis T_a1(t_1) ... T_an(t_n), where t maps the box onto
/// [-1, 1]^n, truncated to total degree d.
class ChebyshevBasis {
 public:
  ChebyshevBasis(Box box, int degree);

  const Box& box() const noexcept { return box_; }
  int degree() const noexcept { return degree_; }
  std::size_t size() const noexcept { return indices_.size(); }
  const std::vector<MultiIndex>& indices() const noexcept { return indices_; }

  /// Basis values at x written to `out` (size()).
  void evaluate(std::span<const double> x, std::span<double> out) const;
  /// Same values in extended precision, for refining solutions of ill-conditioned systems.
  void evaluate_extended(std::span<const double> x, std::span<long double> out) const;

  /// Row-major |Z| x size() matrix of basis values at the points of Z.
  std::vector<double> matrix(const PointSet& z) const;
  std::vector<double> matrix(std::span<const double> coords) const;

 private:
  Box box_;
  int degree_;
  std::vector<MultiIndex> indices_;
};

/// Real polynomial of total degree <= d in the box-scaled Chebyshev basis.
class Polynomial {
 public:
  Polynomial(Box box, int degree, std::vector<double> coeffs);

  static Polynomial constant(Box box, double value);

  std::size_t dim() const noexcept { return basis_.box().dim(); }
  int degree() const noexcept { return basis_.degree(); }
  const Box& box() const noexcept { return basis_.box(); }
  const ChebyshevBasis& basis() const noexcept { return basis_; }
  /// Coefficients in the order of basis().indices().
  const std::vector<double>& coeffs() const noexcept { return coeffs_; }

  /// Clenshaw in one dimension, per-axis recurrences otherwise.
  double operator()(std::span<const double> x) const;
  double operator()(double x) const { return (*this)(std::span<const double>(&x, 1)); }

  std::string to_json() const;
  static Polynomial from_json(std::string_view text);

 private:
  ChebyshevBasis basis_;
  std::vector<double> coeffs_;
};

double eval_poly(const Polynomial& p, std::span<const double> x);

}  // namespace discrete_remez
