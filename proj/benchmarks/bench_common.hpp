#pragma once

#include <random>
#include <vector>

#include "kissgeo/kissing.hpp"

namespace kissgeo::bench {

inline std::vector<KissingSphere> random_spheres(std::mt19937_64& rng, int count, int n) {
  std::uniform_real_distribution<double> coord(-2.0, 2.0), diam(0.3, 2.0);
  std::vector<KissingSphere> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) {
    Eigen::VectorXd t(n - 1);
    for (int j = 0; j < n - 1; ++j) t[j] = coord(rng);
    out.push_back(KissingSphere::finite(t, diam(rng)));
  }
  return out;
}

}  // namespace kissgeo::bench
