#include "minors.hpp"

#include <algorithm>
#include <cmath>

#include "kissgeo/numkernel.hpp"

namespace kissgeo::detail {

namespace {

Eigen::MatrixXd principal_block(const Eigen::MatrixXd& m, std::span<const int> subset) {
  const auto s = static_cast<Eigen::Index>(subset.size());
  Eigen::MatrixXd out(s, s);
  for (Eigen::Index i = 0; i < s; ++i) {
    for (Eigen::Index j = 0; j < s; ++j) out(i, j) = m(subset[i], subset[j]);
  }
  return out;
}

template <class Breaks>
std::optional<MinorHit> first_hit(const Eigen::MatrixXd& m, std::span<const int> required,
                                  int min_size, Breaks breaks) {
  MinorHit hit;
  const auto found = scan_subsets(static_cast<int>(m.rows()), required, min_size,
                                  [&](const std::vector<int>& subset) {
                                    const double v = signed_minor(m, subset);
                                    if (!breaks(v, hadamard_bound(m, subset))) return false;
                                    hit.signed_det = v;
                                    return true;
                                  });
  if (!found) return std::nullopt;
  hit.subset = *found;
  return hit;
}

}  // namespace

double hadamard_bound(const Eigen::MatrixXd& m, std::span<const int> subset) {
  double bound = 1.0;
  for (int i : subset) {
    double row = 0.0;
    for (int j : subset) row += m(i, j) * m(i, j);
    bound *= std::sqrt(row);
  }
  return bound;
}

double signed_minor(const Eigen::MatrixXd& m, std::span<const int> subset) {
  const double det = determinant(principal_block(m, subset));
  return subset.size() % 2 == 0 ? det : -det;
}

std::optional<MinorHit> first_positive_signed_minor(const Eigen::MatrixXd& m,
                                                    std::span<const int> required,
                                                    int min_size, double eig_zero) {
  return first_hit(m, required, min_size,
                   [eig_zero](double v, double bound) { return v > eig_zero * bound; });
}

std::optional<MinorHit> first_negative_signed_minor(const Eigen::MatrixXd& m,
                                                    std::span<const int> required,
                                                    int min_size, double eig_zero) {
  return first_hit(m, required, min_size,
                   [eig_zero](double v, double bound) { return v < -eig_zero * bound; });
}

}  // namespace kissgeo::detail
