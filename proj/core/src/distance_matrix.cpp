#include "kissgeo/distance_matrix.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace kissgeo {

SquaredDistanceMatrix::SquaredDistanceMatrix(
    SymMatrix m, std::optional<std::vector<std::string>> labels)
    : m_(std::move(m)), labels_(std::move(labels)) {
  for (int i = 0; i < m_.order(); ++i) {
    if (m_(i, i) != 0.0) {
      throw std::invalid_argument("distance matrix diagonal must be zero");
    }
    for (int j = 0; j < m_.order(); ++j) {
      if (m_(i, j) < 0.0) {
        throw std::invalid_argument("distance matrix entries must be nonnegative");
      }
    }
  }
  if (labels_ && static_cast<int>(labels_->size()) != m_.order()) {
    throw std::invalid_argument("label count does not match matrix order");
  }
}

SquaredDistanceMatrix SquaredDistanceMatrix::from_rows(
    std::initializer_list<std::initializer_list<double>> rows) {
  const auto k = static_cast<Eigen::Index>(rows.size());
  Eigen::MatrixXd m(k, k);
  Eigen::Index i = 0;
  for (const auto& row : rows) {
    if (static_cast<Eigen::Index>(row.size()) != k) {
      throw std::invalid_argument("distance matrix rows must be square");
    }
    Eigen::Index j = 0;
    for (double v : row) m(i, j++) = v;
    ++i;
  }
  return SquaredDistanceMatrix(SymMatrix(std::move(m)));
}

SquaredDistanceMatrix SquaredDistanceMatrix::principal(
    std::span<const int> indices) const {
  std::optional<std::vector<std::string>> sub_labels;
  if (labels_) {
    sub_labels.emplace();
    for (int i : indices) sub_labels->push_back((*labels_)[i]);
  }
  return SquaredDistanceMatrix(m_.principal(indices), std::move(sub_labels));
}

double relative_max_deviation(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("matrix shape mismatch");
  }
  if (a.size() == 0) return 0.0;
  const double scale =
      std::max(b.cwiseAbs().maxCoeff(), std::numeric_limits<double>::min());
  return (a - b).cwiseAbs().maxCoeff() / scale;
}

}  // namespace kissgeo
