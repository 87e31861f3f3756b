#pragma once

// Principal-minor scans shared by the certification routines.

#include <algorithm>
#include <optional>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace kissgeo::detail {

struct MinorHit {
  std::vector<int> subset;
  /// (-1)^{|subset|} det M_subset
  double signed_det = 0.0;
};

/// Product of the Euclidean row norms of M restricted to `subset`, the
/// Hadamard bound on |det M_subset|; the scale for sign decisions.
double hadamard_bound(const Eigen::MatrixXd& m, std::span<const int> subset);

double signed_minor(const Eigen::MatrixXd& m, std::span<const int> subset);

/// Visits subsets of {0..order-1} that contain `required`, with size at
/// least `min_size`, ordered by size and then lexicographically. Stops when
/// `visit` returns true and returns that subset.
template <class Visit>
std::optional<std::vector<int>> scan_subsets(int order, std::span<const int> required,
                                             int min_size, Visit&& visit) {
  std::vector<bool> is_required(order, false);
  for (int r : required) is_required[r] = true;
  std::vector<int> free;
  for (int i = 0; i < order; ++i) {
    if (!is_required[i]) free.push_back(i);
  }
  const int base = static_cast<int>(required.size());
  const int nfree = static_cast<int>(free.size());
  for (int extra = std::max(0, min_size - base); extra <= nfree; ++extra) {
    std::vector<int> pick(extra);
    for (int i = 0; i < extra; ++i) pick[i] = i;
    while (true) {
      std::vector<int> subset(required.begin(), required.end());
      for (int p : pick) subset.push_back(free[p]);
      std::sort(subset.begin(), subset.end());
      if (visit(subset)) return subset;
      int pos = extra - 1;
      while (pos >= 0 && pick[pos] == nfree - extra + pos) --pos;
      if (pos < 0) break;
      ++pick[pos];
      for (int i = pos + 1; i < extra; ++i) pick[i] = pick[i - 1] + 1;
    }
  }
  return std::nullopt;
}

/// First subset S (containing `required`, |S| >= min_size) with
/// (-1)^{|S|} det M_S > eig_zero * hadamard_bound(M, S).
std::optional<MinorHit> first_positive_signed_minor(const Eigen::MatrixXd& m,
                                                    std::span<const int> required,
                                                    int min_size, double eig_zero);

/// First subset S with (-1)^{|S|} det M_S < -eig_zero * hadamard_bound(M, S),
/// i.e. the first principal minor breaking negative semidefiniteness.
std::optional<MinorHit> first_negative_signed_minor(const Eigen::MatrixXd& m,
                                                    std::span<const int> required,
                                                    int min_size, double eig_zero);

}  // namespace kissgeo::detail
