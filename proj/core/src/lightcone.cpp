#include "kissgeo/lightcone.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "kissgeo/errors.hpp"

namespace kissgeo {

namespace {

constexpr double kHalfSqrt2 = 0.70710678118654752440;
constexpr double kSqrt2 = 1.41421356237309504880;

Eigen::MatrixXd columns_of(std::span<const MinkowskiVector> xs, std::span<const int> idx) {
  Eigen::MatrixXd out(xs.front().coordinates().size(), idx.size());
  for (std::size_t c = 0; c < idx.size(); ++c) out.col(c) = xs[idx[c]].coordinates();
  return out;
}

// Dual null vector with <x, x'> = -1.
Eigen::VectorXd dual_null(const Eigen::VectorXd& x) {
  const Eigen::Index n = x.size() - 1;
  Eigen::VectorXd d(x.size());
  d.head(n) = -x.head(n);
  d[n] = x[n];
  return d / (2.0 * x[n] * x[n]);
}

// Form-orthonormal basis (columns) of the eta-orthogonal complement of the
// column span of `frame`. Requires the complement to be positive definite.
Eigen::MatrixXd spacelike_complement(const Eigen::MatrixXd& frame,
                                     const Eigen::MatrixXd& eta,
                                     const Tolerance& tol) {
  const Eigen::Index dim = eta.rows();
  const Eigen::Index r = frame.cols();
  if (r == dim) return Eigen::MatrixXd(dim, 0);

  const Eigen::MatrixXd constraints = frame.transpose() * eta;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(constraints, Eigen::ComputeFullV);
  const Eigen::MatrixXd kernel = svd.matrixV().rightCols(dim - r);

  const Eigen::MatrixXd form = kernel.transpose() * eta * kernel;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(0.5 * (form + form.transpose()));
  const Eigen::VectorXd& vals = es.eigenvalues();
  const double thr = std::max(tol.eig_zero * vals.cwiseAbs().maxCoeff(), kAbsoluteEigenFloor);
  if (vals.minCoeff() <= thr) {
    throw AlignmentError("span of the aligned vectors is not Lorentzian");
  }
  return kernel * es.eigenvectors() * vals.cwiseSqrt().cwiseInverse().asDiagonal();
}

}  // namespace

MinkowskiVector psi(const KissingSphere& p, int n) {
  if (n < 1) throw std::invalid_argument("ambient dimension must be >= 1");
  if (p.is_hyperplane()) {
    MinkowskiVector x(n);
    x[0] = -kHalfSqrt2 * p.height();
    x[n] = kHalfSqrt2 * p.height();
    return x;
  }
  const Eigen::VectorXd& t = p.tangent();
  if (t.size() != n - 1) {
    throw std::invalid_argument("tangent point has " + std::to_string(t.size()) +
                                " coordinates; ambient dimension " +
                                std::to_string(n) + " needs n-1");
  }
  const double factor = kHalfSqrt2 / p.diameter();
  const double t2 = t.squaredNorm();
  MinkowskiVector x(n);
  x[0] = factor * (1.0 - t2);
  for (int i = 0; i < n - 1; ++i) x[i + 1] = factor * 2.0 * t[i];
  x[n] = factor * (1.0 + t2);
  return x;
}

std::vector<MinkowskiVector> psi_all(std::span<const KissingSphere> spheres, int n) {
  std::vector<MinkowskiVector> out;
  out.reserve(spheres.size());
  for (const auto& s : spheres) out.push_back(psi(s, n));
  return out;
}

KissingSphere psi_inverse(const MinkowskiVector& x, const Tolerance& tol) {
  tol.validate();
  const int n = x.spatial_dim();
  if (n < 1) throw std::invalid_argument("ambient dimension must be >= 1");
  if (!(x.time() > 0.0)) {
    throw PreconditionError("psi_inverse needs a future-directed vector");
  }
  if (!is_null(x, tol.residual)) {
    throw PreconditionError("psi_inverse needs a null vector");
  }
  const double w = x[0] + x.time();
  if (w <= tol.residual * x.time()) return KissingSphere::hyperplane(kSqrt2 * x.time());
  Eigen::VectorXd tangent = x.coordinates().segment(1, n - 1) / w;
  return KissingSphere::finite(std::move(tangent), kSqrt2 / w);
}

CurvedImage psi_curved(double kappa, double signed_diameter,
                       const Eigen::VectorXd& direction) {
  if (kappa == 0.0) {
    throw std::invalid_argument("zero curvature: use psi for the half-space model");
  }
  if (signed_diameter == 0.0 || std::isnan(signed_diameter)) {
    throw std::invalid_argument("signed diameter must be nonzero");
  }
  if (std::abs(direction.norm() - 1.0) > 1e-12) {
    throw std::invalid_argument("tangent direction must be a unit vector");
  }
  // 1/inf == 0 covers the hyperplane limit.
  const double coef = kHalfSqrt2 + kSqrt2 / (kappa * signed_diameter);
  const bool degenerate = std::abs(coef) <= 1e-15;
  return {MinkowskiVector(degenerate ? Eigen::VectorXd(Eigen::VectorXd::Zero(direction.size()))
                                     : Eigen::VectorXd(coef * direction),
                          degenerate ? 0.0 : coef),
          degenerate};
}

LorentzMap::LorentzMap(Eigen::MatrixXd matrix) : m_(std::move(matrix)) {
  if (m_.rows() < 1 || m_.rows() != m_.cols()) {
    throw std::invalid_argument("Lorentz map must be a square matrix");
  }
}

LorentzMap LorentzMap::identity(int spatial_dim) {
  return LorentzMap(Eigen::MatrixXd::Identity(spatial_dim + 1, spatial_dim + 1));
}

LorentzMap LorentzMap::lorentz_inverse() const {
  const Eigen::MatrixXd eta = signature_form(spatial_dim());
  return LorentzMap(eta * m_.transpose() * eta);
}

bool is_lorentz(const LorentzMap& l, const Tolerance& tol) {
  const Eigen::MatrixXd eta = signature_form(l.spatial_dim());
  const Eigen::MatrixXd& m = l.matrix();
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff() * m.cwiseAbs().maxCoeff());
  const double drift = (m.transpose() * eta * m - eta).cwiseAbs().maxCoeff();
  const int t = l.spatial_dim();
  return drift <= tol.residual * scale && m(t, t) > 0.0;
}

MinkowskiVector apply(const LorentzMap& l, const MinkowskiVector& x) {
  if (x.spatial_dim() != l.spatial_dim()) {
    throw std::invalid_argument("Lorentz map dimension mismatch");
  }
  return MinkowskiVector::from_coordinates(l.matrix() * x.coordinates());
}

LorentzMap compose(const LorentzMap& outer, const LorentzMap& inner) {
  if (outer.spatial_dim() != inner.spatial_dim()) {
    throw std::invalid_argument("Lorentz map dimension mismatch");
  }
  return LorentzMap(outer.matrix() * inner.matrix());
}

LorentzMap lorentz_align(std::span<const MinkowskiVector> from,
                         std::span<const MinkowskiVector> to, const Tolerance& tol) {
  tol.validate();
  if (from.empty() || from.size() != to.size()) {
    throw std::invalid_argument("lorentz_align needs two non-empty lists of equal length");
  }
  const int n = from.front().spatial_dim();
  for (std::size_t i = 0; i < from.size(); ++i) {
    if (from[i].spatial_dim() != n || to[i].spatial_dim() != n) {
      throw std::invalid_argument("lorentz_align dimension mismatch");
    }
  }
  const Eigen::MatrixXd eta = signature_form(n);
  const std::size_t k = from.size();

  double scale = std::numeric_limits<double>::min();
  for (std::size_t i = 0; i < k; ++i) {
    scale = std::max({scale, from[i].coordinates().squaredNorm(),
                      to[i].coordinates().squaredNorm()});
  }

  // Classify entries and check orientation.
  std::vector<int> nonzero;
  for (std::size_t i = 0; i < k; ++i) {
    const bool x_zero = from[i].coordinates().squaredNorm() <= tol.residual * scale;
    const bool y_zero = to[i].coordinates().squaredNorm() <= tol.residual * scale;
    if (x_zero != y_zero) throw AlignmentError("zero vector matched with a nonzero one");
    if (x_zero) continue;
    if (!from[i].is_future_directed() || !to[i].is_future_directed()) {
      throw AlignmentError("irreconcilable time orientation");
    }
    nonzero.push_back(static_cast<int>(i));
  }

  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i; j < k; ++j) {
      const double gx = minkowski_inner(from[i], from[j]);
      const double gy = minkowski_inner(to[i], to[j]);
      if (std::abs(gx - gy) > tol.residual * scale) {
        throw AlignmentError("Gram mismatch at (" + std::to_string(i) + "," +
                             std::to_string(j) + ")");
      }
    }
  }
  if (nonzero.empty()) return LorentzMap::identity(n);

  // Greedy basis of span(from), first independent vectors in input order.
  std::vector<int> basis;
  Eigen::MatrixXd ortho(n + 1, 0);
  for (int i : nonzero) {
    const Eigen::VectorXd& x = from[i].coordinates();
    const Eigen::VectorXd resid = x - ortho * (ortho.transpose() * x);
    if (resid.norm() > std::sqrt(tol.residual) * x.norm()) {
      basis.push_back(i);
      ortho.conservativeResize(Eigen::NoChange, ortho.cols() + 1);
      ortho.col(ortho.cols() - 1) = resid.normalized();
    }
  }

  Eigen::MatrixXd src = columns_of(from, basis);
  Eigen::MatrixXd dst = columns_of(to, basis);
  if (basis.size() == 1) {
    src.conservativeResize(Eigen::NoChange, 2);
    dst.conservativeResize(Eigen::NoChange, 2);
    src.col(1) = dual_null(src.col(0));
    dst.col(1) = dual_null(dst.col(0));
  }

  const Eigen::MatrixXd src_perp = spacelike_complement(src, eta, tol);
  const Eigen::MatrixXd dst_perp = spacelike_complement(dst, eta, tol);

  Eigen::MatrixXd src_frame(n + 1, n + 1);
  Eigen::MatrixXd dst_frame(n + 1, n + 1);
  src_frame << src, src_perp;
  if (src_perp.cols() > 0) {
    const Eigen::MatrixXd proj = dst_perp.transpose() * eta * src_perp;
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(proj, Eigen::ComputeFullU | Eigen::ComputeFullV);
    dst_frame << dst, dst_perp * (svd.matrixU() * svd.matrixV().transpose());
  } else {
    dst_frame << dst;
  }

  // The frame inverse goes through its Gram matrix, F^{-1} = G^{-1} F^T eta.
  // G is well conditioned even when F is not (nearly null spans have
  // Euclidean-large complements), so no LU of F itself is formed.
  const Eigen::MatrixXd gram = src_frame.transpose() * eta * src_frame;
  Eigen::MatrixXd l = dst_frame * gram.fullPivLu().solve(src_frame.transpose() * eta);

  LorentzMap map(std::move(l));
  if (!is_lorentz(map, tol)) {
    throw AlignmentError(map.matrix()(n, n) > 0.0 ? "aligned map does not preserve the form"
                                                  : "aligned map reverses time");
  }
  for (std::size_t i = 0; i < k; ++i) {
    const Eigen::VectorXd diff = map.matrix() * from[i].coordinates() - to[i].coordinates();
    const double mag = std::max(from[i].coordinates().norm(), to[i].coordinates().norm());
    if (diff.norm() > std::sqrt(tol.residual) * std::max(mag, std::sqrt(scale) * 1e-3)) {
      throw AlignmentError("linear relations differ between the two vector lists");
    }
  }
  return map;
}

}  // namespace kissgeo
