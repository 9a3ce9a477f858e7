#pragma once

#include <map>
#include <span>
#include <string_view>
#include <vector>

namespace discrete_remez {

/// Covering bound for degree-d sub-level sets without the volume term:
///   M_d(eps) = sum_i C_i(n, d) (1/eps)^i,  i = 0..n-1.
/// Built-in constants exist for n = 1 (M_d = d) and n = 2
/// (M_d = (2d-1)^2 + 8d/eps); higher dimensions use a C'_i(n) table with
/// C_i = C'_i(n) (2d)^(n-i).
class VitushkinModel {
 public:
  VitushkinModel(int n, int d, std::vector<double> coeffs);

  static VitushkinModel builtin(int n, int d);
  static VitushkinModel from_table(int n, int d, std::span<const double> cprime);

  int n() const noexcept { return n_; }
  int d() const noexcept { return d_; }
  const std::vector<double>& coeffs() const noexcept { return coeffs_; }
  double leading() const noexcept { return coeffs_.back(); }
  /// C'(n, d) = sum_i C_i, so that M_d(eps) <= C'(n, d) (1/eps)^(n-1) for eps <= 1.
  double coefficient_sum() const noexcept;

  /// Horner in 1/eps.
  double operator()(double eps) const;

 private:
  int n_;
  int d_;
  std::vector<double> coeffs_;
};

double vitushkin_eval(const VitushkinModel& model, double eps);

/// User-supplied C'_i(n) rows keyed by dimension, read from JSON such as
///   {"3": [c0, c1, c2], "4": [c0, c1, c2, c3]}.
class ConstantsTable {
 public:
  ConstantsTable() = default;
  static ConstantsTable parse_json(std::string_view text);

  void set(int n, std::vector<double> cprime);
  bool has(int n) const { return rows_.count(n) != 0; }

  /// Built-in model for n <= 2, table row otherwise.
  VitushkinModel model(int n, int d) const;

 private:
  std::map<int, std::vector<double>> rows_;
};

}  // namespace discrete_remez
