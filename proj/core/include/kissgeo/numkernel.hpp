#pragma once

// Dense symmetric linear algebra with signature-aware helpers: eigenvalue
// counting (inertia), numerical rank, Schur complements and Gram
// factorization in Minkowski signature (n,1).
//
// Every sign decision made here uses one rule: an eigenvalue counts as zero
// when its magnitude is at most max(eig_zero * |lambda|_max, 1e-14).

#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "kissgeo/minkowski.hpp"

namespace kissgeo {

/// Absolute floor applied below the relative eigenvalue threshold so that
/// near-zero matrices still have a well-defined inertia.
inline constexpr double kAbsoluteEigenFloor = 1e-14;

struct Tolerance {
  /// Relative (to the largest |eigenvalue|) threshold for "zero".
  double eig_zero = 1e-9;
  /// Maximum relative factorization residual.
  double residual = 1e-8;

  /// Throws std::invalid_argument unless both fields are strictly positive.
  void validate() const;
};

/// Symmetric matrix with exact symmetry enforced at construction.
class SymMatrix {
 public:
  /// Throws std::invalid_argument if `m` is empty, non-square, or not
  /// exactly symmetric.
  explicit SymMatrix(Eigen::MatrixXd m);

  /// Builds from a matrix that is symmetric up to rounding by averaging it
  /// with its transpose. For results of our own computations only.
  static SymMatrix symmetrized(const Eigen::MatrixXd& m);

  static SymMatrix zero(int order);
  static SymMatrix diagonal(std::span<const double> diag);

  int order() const { return static_cast<int>(m_.rows()); }
  double operator()(int i, int j) const { return m_(i, j); }
  const Eigen::MatrixXd& matrix() const { return m_; }

  /// Principal submatrix on `indices` (in the given order).
  SymMatrix principal(std::span<const int> indices) const;

  double max_abs() const;

 private:
  Eigen::MatrixXd m_;
};

struct Inertia {
  int positive = 0;
  int negative = 0;
  int zero = 0;

  int order() const { return positive + negative + zero; }
  int rank() const { return positive + negative; }

  friend bool operator==(const Inertia&, const Inertia&) = default;
  friend Inertia operator+(const Inertia& a, const Inertia& b) {
    return {a.positive + b.positive, a.negative + b.negative, a.zero + b.zero};
  }
};

std::string to_string(const Inertia& in);

/// M = V diag(values) V^T with `values` in descending order and the columns
/// of V orthonormal.
struct EigenDecomposition {
  Eigen::VectorXd values;
  Eigen::MatrixXd vectors;
};

/// Throws NumericalError if the solver fails or the reconstruction and
/// orthonormality residuals exceed `tol.residual` (relative to |M|_max).
EigenDecomposition sym_eigen(const SymMatrix& m, const Tolerance& tol = {});

/// Threshold under which an eigenvalue is treated as zero.
double zero_threshold(const Eigen::VectorXd& eigenvalues, const Tolerance& tol);

Inertia inertia_of(const Eigen::VectorXd& eigenvalues, const Tolerance& tol);
Inertia inertia(const SymMatrix& m, const Tolerance& tol = {});
int rank(const SymMatrix& m, const Tolerance& tol = {});

/// Determinant via partial-pivot LU. The empty matrix has determinant 1.
double determinant(const Eigen::MatrixXd& m);

/// A - B D^{-1} C where D is the principal block on `pivot`, A the block on
/// the remaining indices (kept in increasing order).
///
/// Throws std::invalid_argument for bad or exhaustive pivot sets and
/// NumericalError when the pivot block is singular to tolerance. Singular
/// pivots are never regularized; callers pick another pivot instead.
SymMatrix schur_complement(const SymMatrix& m, std::span<const int> pivot,
                           const Tolerance& tol = {});

/// Indices not in `pivot`, increasing.
std::vector<int> complement_indices(int order, std::span<const int> pivot);

struct LorentzFactorization {
  bool feasible = false;
  Inertia inertia;
  /// On success x_i with -<x_i, x_j>_{n,1} = M_ij.
  std::vector<MinkowskiVector> vectors;
  /// Columns that came out (numerically) zero.
  std::vector<int> degenerate_columns;
  /// Names the violated inertia condition when infeasible.
  std::string diagnostic;
};

/// Factors M = -X^T eta X with X's columns in R^{n,1}. The positive
/// eigendirection becomes the time coordinate, negative ones the leading
/// space coordinates (largest magnitude first). Column time orientation is
/// left to the caller.
///
/// Infeasible when M has more than one positive eigenvalue, more than n
/// negative ones, or negative but no positive eigenvalues. The zero matrix
/// factors into zero vectors, all flagged degenerate.
LorentzFactorization gram_factor_lorentz(const SymMatrix& m, int n,
                                         const Tolerance& tol = {});

}  // namespace kissgeo
