#pragma once

// The isometry between kissing spheres and future-directed null vectors of
// R^{n,1}, its inverse, the curved-reference-ball variant, and orthochronous
// Lorentz maps used to move configurations on the cone.

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "kissgeo/kissing.hpp"
#include "kissgeo/minkowski.hpp"
#include "kissgeo/numkernel.hpp"

namespace kissgeo {

/// Null vector of a kissing sphere in R^{n,1}, where n is the ambient
/// dimension (finite spheres must have n - 1 tangent coordinates):
///   finite      sqrt(2)/(2 phi) * (1 - |t|^2, 2t, 1 + |t|^2)
///   hyperplane  sqrt(2)/2 * (-h, 0, ..., 0, h)
MinkowskiVector psi(const KissingSphere& p, int n);

std::vector<MinkowskiVector> psi_all(std::span<const KissingSphere> spheres, int n);

/// Inverse of psi. With w = x_0 + t: w > 0 gives phi = sqrt(2)/w and
/// tangent = (x_1..x_{n-1})/w; w = 0 (relative to t, within tol.residual)
/// gives the hyperplane at height sqrt(2) t.
///
/// Throws PreconditionError when x is not null (relative tol.residual) or
/// not future-directed.
KissingSphere psi_inverse(const MinkowskiVector& x, const Tolerance& tol = {});

struct CurvedImage {
  MinkowskiVector vector;
  /// Set when the scalar factor vanishes (kappa * phi = -2); the vector is
  /// then zero and carries no sphere.
  bool degenerate = false;
};

/// Embedding for spheres kissing a reference ball of curvature kappa != 0:
///   (sqrt(2)/2 + sqrt(2)/(kappa phi)) * (direction, 1)
/// with `signed_diameter` negative for spheres surrounding the ball
/// (+-infinity allowed) and `direction` the unit vector from the ball's
/// centre to the tangent point.
///
/// Throws std::invalid_argument for kappa == 0, zero diameter or a
/// direction whose norm differs from 1 by more than 1e-12.
CurvedImage psi_curved(double kappa, double signed_diameter,
                       const Eigen::VectorXd& direction);

/// Linear map of R^{n,1}. Construction does not check that the matrix
/// preserves the form; use is_lorentz.
class LorentzMap {
 public:
  explicit LorentzMap(Eigen::MatrixXd matrix);

  static LorentzMap identity(int spatial_dim);

  int spatial_dim() const { return static_cast<int>(m_.rows()) - 1; }
  const Eigen::MatrixXd& matrix() const { return m_; }

  /// eta L^T eta, the inverse of an exact Lorentz map.
  LorentzMap lorentz_inverse() const;

 private:
  Eigen::MatrixXd m_;
};

/// Checks L^T eta L = eta within tol.residual * max(1, |L|_max^2) and that L
/// keeps the time direction (L_tt > 0).
bool is_lorentz(const LorentzMap& l, const Tolerance& tol = {});

MinkowskiVector apply(const LorentzMap& l, const MinkowskiVector& x);

/// outer after inner: apply(compose(a, b), x) == apply(a, apply(b, x)).
LorentzMap compose(const LorentzMap& outer, const LorentzMap& inner);

class AlignmentError : public std::runtime_error {
 public:
  explicit AlignmentError(const std::string& what) : std::runtime_error(what) {}
};

/// Orthochronous Lorentz map L with L x_i = y_i.
///
/// Inputs must be non-empty lists of equal length whose entries are zero or
/// future-directed null vectors, zeros matched with zeros, with equal
/// pairwise inner products (relative tol.residual).
///
/// The map is fixed on span(X). A span holding a single null direction is
/// completed by the dual null vector (-x_s, x_t) / (2 x_t^2) on both sides;
/// on the remaining (spacelike) complement the map is the polar factor of
/// the form-orthogonal projection between the two complements. The
/// construction depends only on each side's own vectors, so
/// lorentz_align(Y, X) is the inverse of lorentz_align(X, Y).
///
/// Throws AlignmentError on Gram mismatch, inconsistent linear relations,
/// mismatched time orientation, or a result failing is_lorentz.
LorentzMap lorentz_align(std::span<const MinkowskiVector> from,
                         std::span<const MinkowskiVector> to,
                         const Tolerance& tol = {});

}  // namespace kissgeo
