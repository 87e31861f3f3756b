#pragma once

// Round spheres of R^n, their signed separation
//   (|c_p - c_q|^2 - r_p^2 - r_q^2) / (2 r_p r_q),
// the hyperboloid model in R^{n+1,1} and the map from spheres kissing a
// fixed sphere to the light cone.

#include <span>
#include <vector>

#include <Eigen/Dense>

#include "kissgeo/embed.hpp"
#include "kissgeo/minkowski.hpp"
#include "kissgeo/numkernel.hpp"

namespace kissgeo {

class EuclideanSphere {
 public:
  /// Throws std::invalid_argument unless radius > 0 and all values finite.
  EuclideanSphere(Eigen::VectorXd center, double radius);

  const Eigen::VectorXd& center() const { return center_; }
  double radius() const { return radius_; }
  int dim() const { return static_cast<int>(center_.size()); }

 private:
  Eigen::VectorXd center_;
  double radius_;
};

/// 1 for external tangency, -1 for internal tangency, 0 for orthogonal
/// intersection, -cos(angle) for intersecting spheres, below -1 when nested.
double separation(const EuclideanSphere& p, const EuclideanSphere& q);

/// Symmetric matrix of separations; the diagonal is exactly -1.
class SeparationMatrix {
 public:
  /// Throws std::invalid_argument unless every diagonal entry equals -1.
  explicit SeparationMatrix(SymMatrix m);

  int order() const { return m_.order(); }
  double operator()(int i, int j) const { return m_(i, j); }
  const SymMatrix& sym() const { return m_; }
  const Eigen::MatrixXd& matrix() const { return m_.matrix(); }

 private:
  SymMatrix m_;
};

SeparationMatrix separation_matrix(std::span<const EuclideanSphere> spheres);

/// (1/2r) (1 - |c|^2 + r^2, 2c, 1 + |c|^2 - r^2) in R^{n+1,1}: a unit
/// spacelike vector with -<x_p, x_q> = separation(p, q). The time coordinate
/// is negative for spheres enclosing a large enough region around the
/// origin (|c|^2 < r^2 - 1).
MinkowskiVector hyperboloid_embed(const EuclideanSphere& p);

/// Realizability of a separation matrix by spheres of R^n.
///
/// Inertia: at most one positive and at most n+1 negative eigenvalues.
/// Minors: locate the first principal submatrix S_T (size, then lexicographic
/// order) with (-1)^{|T|} det S_T < 0; require (-1)^{|J|} det S_J <= 0 for
/// every J containing T and rank <= n+2. Without such T the matrix is
/// negative semidefinite and needs rank <= n+1.
Certificate check_spheres(const SeparationMatrix& s, int n, Method method,
                          const Tolerance& tol = {});

/// sqrt(2)/2 (x + x_p), a future null vector for a sphere x kissing p.
/// Throws PreconditionError unless <x_p,x_p> = <x,x> = 1 and <x,x_p> = -1
/// within tol.residual relative to the squared lengths.
MinkowskiVector kissing_cone_embed(const MinkowskiVector& x_p, const MinkowskiVector& x,
                                   const Tolerance& tol = {});

}  // namespace kissgeo
