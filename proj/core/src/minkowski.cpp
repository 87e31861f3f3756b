#include "kissgeo/minkowski.hpp"

#include <cmath>
#include <stdexcept>

namespace kissgeo {

MinkowskiVector::MinkowskiVector(int spatial_dim)
    : coords_(Eigen::VectorXd::Zero(spatial_dim + 1)) {
  if (spatial_dim < 0) throw std::invalid_argument("negative spatial dimension");
}

MinkowskiVector::MinkowskiVector(const Eigen::VectorXd& spatial, double time)
    : coords_(spatial.size() + 1) {
  coords_.head(spatial.size()) = spatial;
  coords_[spatial.size()] = time;
}

MinkowskiVector MinkowskiVector::from_coordinates(const Eigen::VectorXd& coords) {
  if (coords.size() < 1) {
    throw std::invalid_argument("Minkowski vector needs a time coordinate");
  }
  MinkowskiVector v;
  v.coords_ = coords;
  return v;
}

MinkowskiVector MinkowskiVector::operator+(const MinkowskiVector& other) const {
  if (other.coords_.size() != coords_.size()) {
    throw std::invalid_argument("Minkowski dimension mismatch");
  }
  return from_coordinates(coords_ + other.coords_);
}

MinkowskiVector MinkowskiVector::operator-(const MinkowskiVector& other) const {
  if (other.coords_.size() != coords_.size()) {
    throw std::invalid_argument("Minkowski dimension mismatch");
  }
  return from_coordinates(coords_ - other.coords_);
}

MinkowskiVector MinkowskiVector::operator*(double s) const {
  return from_coordinates(coords_ * s);
}

double minkowski_inner(const MinkowskiVector& x, const MinkowskiVector& y) {
  if (x.spatial_dim() != y.spatial_dim()) {
    throw std::invalid_argument("Minkowski dimension mismatch");
  }
  const int n = x.spatial_dim();
  return x.coordinates().head(n).dot(y.coordinates().head(n)) -
         x.time() * y.time();
}

double d_m_squared(const MinkowskiVector& x, const MinkowskiVector& y) {
  return -minkowski_inner(x, y);
}

Eigen::MatrixXd signature_form(int spatial_dim) {
  Eigen::MatrixXd eta = Eigen::MatrixXd::Identity(spatial_dim + 1, spatial_dim + 1);
  eta(spatial_dim, spatial_dim) = -1.0;
  return eta;
}

bool is_null(const MinkowskiVector& x, double rel_tol) {
  const double scale = x.coordinates().squaredNorm();
  return std::abs(minkowski_inner(x, x)) <= rel_tol * scale;
}

}  // namespace kissgeo
