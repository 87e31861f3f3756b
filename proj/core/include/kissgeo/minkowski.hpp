#pragma once

#include <Eigen/Dense>

namespace kissgeo {

/// A vector of R^{n,1} stored as (x_0, ..., x_{n-1}, t).
class MinkowskiVector {
 public:
  MinkowskiVector() = default;

  /// Zero vector with `spatial_dim` space coordinates.
  explicit MinkowskiVector(int spatial_dim);

  MinkowskiVector(const Eigen::VectorXd& spatial, double time);

  /// Wraps a full coordinate vector; the last entry is the time coordinate.
  static MinkowskiVector from_coordinates(const Eigen::VectorXd& coords);

  int spatial_dim() const { return static_cast<int>(coords_.size()) - 1; }
  double time() const { return coords_[coords_.size() - 1]; }
  double spatial(int i) const { return coords_[i]; }
  Eigen::VectorXd spatial() const { return coords_.head(coords_.size() - 1); }

  const Eigen::VectorXd& coordinates() const { return coords_; }

  double& operator[](int i) { return coords_[i]; }
  double operator[](int i) const { return coords_[i]; }

  MinkowskiVector operator+(const MinkowskiVector& other) const;
  MinkowskiVector operator-(const MinkowskiVector& other) const;
  MinkowskiVector operator*(double s) const;

  bool is_future_directed() const { return time() > 0.0; }

 private:
  Eigen::VectorXd coords_;
};

/// <x, y>_{n,1} = x_0 y_0 + ... + x_{n-1} y_{n-1} - t t'.
/// Throws std::invalid_argument on dimension mismatch.
double minkowski_inner(const MinkowskiVector& x, const MinkowskiVector& y);

/// Squared Minkowski pre-metric, the negated inner product.
double d_m_squared(const MinkowskiVector& x, const MinkowskiVector& y);

/// The signature form diag(1, ..., 1, -1) of size spatial_dim + 1.
Eigen::MatrixXd signature_form(int spatial_dim);

/// True when |<x,x>| is within `rel_tol` of the squared Euclidean length.
bool is_null(const MinkowskiVector& x, double rel_tol);

}  // namespace kissgeo
