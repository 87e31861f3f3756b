#include "kissgeo/spheres.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "kissgeo/errors.hpp"
#include "minors.hpp"

namespace kissgeo {

namespace {

constexpr double kHalfSqrt2 = 0.70710678118654752440;

}  // namespace

EuclideanSphere::EuclideanSphere(Eigen::VectorXd center, double radius)
    : center_(std::move(center)), radius_(radius) {
  if (!(radius_ > 0.0) || !std::isfinite(radius_)) {
    throw std::invalid_argument("sphere radius must be positive and finite");
  }
  if (!center_.allFinite()) throw std::invalid_argument("sphere center must be finite");
}

double separation(const EuclideanSphere& p, const EuclideanSphere& q) {
  if (p.dim() != q.dim()) {
    throw std::invalid_argument("spheres live in different dimensions (" +
                                std::to_string(p.dim()) + " vs " + std::to_string(q.dim()) +
                                ")");
  }
  const double d2 = (p.center() - q.center()).squaredNorm();
  return (d2 - p.radius() * p.radius() - q.radius() * q.radius()) /
         (2.0 * p.radius() * q.radius());
}

SeparationMatrix::SeparationMatrix(SymMatrix m) : m_(std::move(m)) {
  for (int i = 0; i < m_.order(); ++i) {
    if (m_(i, i) != -1.0) {
      throw std::invalid_argument("separation matrix diagonal must be -1 (entry " +
                                  std::to_string(i) + ")");
    }
  }
}

SeparationMatrix separation_matrix(std::span<const EuclideanSphere> spheres) {
  if (spheres.empty()) throw std::invalid_argument("empty sphere list");
  const auto k = static_cast<Eigen::Index>(spheres.size());
  Eigen::MatrixXd s(k, k);
  for (Eigen::Index i = 0; i < k; ++i) {
    s(i, i) = -1.0;
    for (Eigen::Index j = i + 1; j < k; ++j) {
      s(i, j) = s(j, i) = separation(spheres[i], spheres[j]);
    }
  }
  return SeparationMatrix(SymMatrix(std::move(s)));
}

MinkowskiVector hyperboloid_embed(const EuclideanSphere& p) {
  const int n = p.dim();
  const double r = p.radius();
  const double c2 = p.center().squaredNorm();
  const double f = 1.0 / (2.0 * r);
  MinkowskiVector x(n + 1);
  x[0] = f * (1.0 - c2 + r * r);
  for (int i = 0; i < n; ++i) x[i + 1] = f * 2.0 * p.center()[i];
  x[n + 1] = f * (1.0 + c2 - r * r);
  return x;
}

Certificate check_spheres(const SeparationMatrix& s, int n, Method method,
                          const Tolerance& tol) {
  if (n < 1) throw std::invalid_argument("dimension n must be >= 1");
  tol.validate();
  switch (method) {
    case Method::Inertia: {
      const Inertia in = inertia(s.sym(), tol);
      if (in.positive <= 1 && in.negative <= n + 1) {
        return {Verdict::Embeddable, method, std::nullopt};
      }
      return {Verdict::NotEmbeddable, method, in};
    }
    case Method::Minors: {
      if (s.order() > kMinorsMaxOrder) {
        throw std::invalid_argument("minor enumeration is limited to " +
                                    std::to_string(kMinorsMaxOrder) +
                                    " spheres (use the inertia method)");
      }
      const auto anchor = detail::first_negative_signed_minor(s.matrix(), {}, 1, tol.eig_zero);
      int bound = n + 1;
      if (anchor) {
        bound = n + 2;
        const auto hit = detail::first_positive_signed_minor(
            s.matrix(), anchor->subset, static_cast<int>(anchor->subset.size()), tol.eig_zero);
        if (hit) {
          return {Verdict::NotEmbeddable, method, MinorWitness{hit->subset, hit->signed_det}};
        }
      }
      const int r = rank(s.sym(), tol);
      if (r > bound) return {Verdict::NotEmbeddable, method, RankWitness{r, bound}};
      return {Verdict::Embeddable, method, std::nullopt};
    }
    case Method::DistanceInertia:
      break;
  }
  throw std::invalid_argument("the distance-inertia test applies to Euclidean checks only");
}

MinkowskiVector kissing_cone_embed(const MinkowskiVector& x_p, const MinkowskiVector& x,
                                   const Tolerance& tol) {
  tol.validate();
  const double scale =
      std::max(x_p.coordinates().squaredNorm(), x.coordinates().squaredNorm());
  const auto near = [&](double value, double target) {
    return std::abs(value - target) <= tol.residual * std::max(1.0, scale);
  };
  if (!near(minkowski_inner(x_p, x_p), 1.0)) {
    throw PreconditionError("reference vector is not on the unit hyperboloid");
  }
  if (!near(minkowski_inner(x, x), 1.0)) {
    throw PreconditionError("sphere vector is not on the unit hyperboloid");
  }
  if (!near(minkowski_inner(x, x_p), -1.0)) {
    throw PreconditionError("sphere does not kiss the reference sphere (<x, x_p> != -1)");
  }
  return (x + x_p) * kHalfSqrt2;
}

}  // namespace kissgeo
