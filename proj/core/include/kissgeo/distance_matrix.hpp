#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "kissgeo/numkernel.hpp"

namespace kissgeo {

/// Symmetric, nonnegative matrix with zero diagonal holding squared
/// distances d(i,j)^2.
class SquaredDistanceMatrix {
 public:
  /// Throws std::invalid_argument on a nonzero diagonal or negative entry.
  explicit SquaredDistanceMatrix(SymMatrix m,
                                 std::optional<std::vector<std::string>> labels = {});

  static SquaredDistanceMatrix from_rows(
      std::initializer_list<std::initializer_list<double>> rows);

  int order() const { return m_.order(); }
  double operator()(int i, int j) const { return m_(i, j); }
  const SymMatrix& sym() const { return m_; }
  const Eigen::MatrixXd& matrix() const { return m_.matrix(); }
  const std::optional<std::vector<std::string>>& labels() const { return labels_; }

  SquaredDistanceMatrix principal(std::span<const int> indices) const;

  bool is_zero() const { return m_.max_abs() == 0.0; }

 private:
  SymMatrix m_;
  std::optional<std::vector<std::string>> labels_;
};

/// Largest |a_ij - b_ij| divided by max(|b|_max, tiny); the comparison used
/// for distance-matrix round trips.
double relative_max_deviation(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b);

}  // namespace kissgeo
