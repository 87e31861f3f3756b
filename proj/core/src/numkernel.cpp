#include "kissgeo/numkernel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "kissgeo/errors.hpp"

namespace kissgeo {

void Tolerance::validate() const {
  if (!(eig_zero > 0.0) || !(residual > 0.0)) {
    throw std::invalid_argument("tolerances must be strictly positive");
  }
}

SymMatrix::SymMatrix(Eigen::MatrixXd m) : m_(std::move(m)) {
  if (m_.rows() < 1 || m_.rows() != m_.cols()) {
    throw std::invalid_argument("SymMatrix must be square with order >= 1");
  }
  for (Eigen::Index i = 0; i < m_.rows(); ++i) {
    for (Eigen::Index j = i + 1; j < m_.cols(); ++j) {
      if (m_(i, j) != m_(j, i)) {
        throw std::invalid_argument("SymMatrix input is not symmetric");
      }
    }
  }
  if (!m_.allFinite()) throw std::invalid_argument("SymMatrix has non-finite entries");
}

SymMatrix SymMatrix::symmetrized(const Eigen::MatrixXd& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("matrix is not square");
  Eigen::MatrixXd s = 0.5 * (m + m.transpose());
  return SymMatrix(std::move(s));
}

SymMatrix SymMatrix::zero(int order) {
  return SymMatrix(Eigen::MatrixXd::Zero(order, order));
}

SymMatrix SymMatrix::diagonal(std::span<const double> diag) {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return SymMatrix(std::move(m));
}

SymMatrix SymMatrix::principal(std::span<const int> indices) const {
  const auto k = static_cast<Eigen::Index>(indices.size());
  Eigen::MatrixXd sub(k, k);
  for (Eigen::Index a = 0; a < k; ++a) {
    for (Eigen::Index b = 0; b < k; ++b) sub(a, b) = m_(indices[a], indices[b]);
  }
  return SymMatrix(std::move(sub));
}

double SymMatrix::max_abs() const { return m_.cwiseAbs().maxCoeff(); }

std::string to_string(const Inertia& in) {
  return "(" + std::to_string(in.positive) + "," + std::to_string(in.negative) +
         "," + std::to_string(in.zero) + ")";
}

EigenDecomposition sym_eigen(const SymMatrix& m, const Tolerance& tol) {
  tol.validate();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m.matrix());
  if (solver.info() != Eigen::Success) {
    throw NumericalError("symmetric eigensolver did not converge");
  }
  const int k = m.order();
  // Eigen returns ascending order.
  EigenDecomposition out{solver.eigenvalues().reverse(),
                         solver.eigenvectors().rowwise().reverse()};

  const double scale = std::max(m.max_abs(), std::numeric_limits<double>::min());
  const Eigen::MatrixXd recon =
      out.vectors * out.values.asDiagonal() * out.vectors.transpose();
  const double recon_err = (recon - m.matrix()).cwiseAbs().maxCoeff();
  const double ortho_err =
      (out.vectors.transpose() * out.vectors - Eigen::MatrixXd::Identity(k, k))
          .cwiseAbs()
          .maxCoeff();
  if (recon_err > tol.residual * scale || ortho_err > tol.residual) {
    throw NumericalError("eigendecomposition residual exceeds tolerance");
  }
  return out;
}

double zero_threshold(const Eigen::VectorXd& eigenvalues, const Tolerance& tol) {
  const double largest =
      eigenvalues.size() == 0 ? 0.0 : eigenvalues.cwiseAbs().maxCoeff();
  return std::max(tol.eig_zero * largest, kAbsoluteEigenFloor);
}

Inertia inertia_of(const Eigen::VectorXd& eigenvalues, const Tolerance& tol) {
  const double thr = zero_threshold(eigenvalues, tol);
  Inertia in;
  for (double v : eigenvalues) {
    if (v > thr) {
      ++in.positive;
    } else if (v < -thr) {
      ++in.negative;
    } else {
      ++in.zero;
    }
  }
  return in;
}

Inertia inertia(const SymMatrix& m, const Tolerance& tol) {
  return inertia_of(sym_eigen(m, tol).values, tol);
}

int rank(const SymMatrix& m, const Tolerance& tol) { return inertia(m, tol).rank(); }

double determinant(const Eigen::MatrixXd& m) {
  if (m.rows() == 0) return 1.0;
  return m.partialPivLu().determinant();
}

std::vector<int> complement_indices(int order, std::span<const int> pivot) {
  std::vector<bool> in_pivot(order, false);
  for (int p : pivot) {
    if (p < 0 || p >= order) throw std::invalid_argument("pivot index out of range");
    if (in_pivot[p]) throw std::invalid_argument("duplicate pivot index");
    in_pivot[p] = true;
  }
  std::vector<int> rest;
  for (int i = 0; i < order; ++i) {
    if (!in_pivot[i]) rest.push_back(i);
  }
  return rest;
}

SymMatrix schur_complement(const SymMatrix& m, std::span<const int> pivot,
                           const Tolerance& tol) {
  tol.validate();
  if (pivot.empty()) throw std::invalid_argument("empty pivot set");
  const std::vector<int> rest = complement_indices(m.order(), pivot);
  if (rest.empty()) {
    throw std::invalid_argument("pivot covers every index; complement is empty");
  }

  const SymMatrix d = m.principal(pivot);
  const Eigen::VectorXd d_eigs =
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(d.matrix(),
                                                     Eigen::EigenvaluesOnly)
          .eigenvalues();
  const double scale = std::max(m.max_abs(), std::numeric_limits<double>::min());
  if (d_eigs.cwiseAbs().minCoeff() <= tol.residual * scale) {
    throw NumericalError("singular pivot block in Schur complement");
  }

  const auto p = static_cast<Eigen::Index>(pivot.size());
  const auto r = static_cast<Eigen::Index>(rest.size());
  Eigen::MatrixXd a(r, r);
  Eigen::MatrixXd b(r, p);
  for (Eigen::Index i = 0; i < r; ++i) {
    for (Eigen::Index j = 0; j < r; ++j) a(i, j) = m(rest[i], rest[j]);
    for (Eigen::Index j = 0; j < p; ++j) b(i, j) = m(rest[i], pivot[j]);
  }
  const Eigen::MatrixXd dinv_bt = d.matrix().fullPivLu().solve(b.transpose());
  return SymMatrix::symmetrized(a - b * dinv_bt);
}

LorentzFactorization gram_factor_lorentz(const SymMatrix& m, int n,
                                         const Tolerance& tol) {
  if (n < 0) throw std::invalid_argument("spatial dimension must be >= 0");
  const EigenDecomposition eig = sym_eigen(m, tol);
  const double thr = zero_threshold(eig.values, tol);

  LorentzFactorization out;
  out.inertia = inertia_of(eig.values, tol);
  const Inertia& in = out.inertia;
  if (in.positive > 1) {
    out.diagnostic = std::to_string(in.positive) +
                     " positive eigenvalues; exactly one is required";
    return out;
  }
  if (in.negative > n) {
    out.diagnostic = std::to_string(in.negative) +
                     " negative eigenvalues exceed the dimension bound " +
                     std::to_string(n);
    return out;
  }
  if (in.positive == 0 && in.negative > 0) {
    out.diagnostic = "no positive eigenvalue on a nonzero matrix";
    return out;
  }

  const int k = m.order();
  Eigen::MatrixXd coords = Eigen::MatrixXd::Zero(n + 1, k);
  // Descending order: the positive eigenvalue (if any) sits in slot 0, the
  // negative ones at the tail with the largest magnitude last.
  if (in.positive == 1) {
    coords.row(n) = std::sqrt(eig.values[0]) * eig.vectors.col(0).transpose();
  }
  int axis = 0;
  for (int c = k - 1; c >= 0 && eig.values[c] < -thr; --c, ++axis) {
    coords.row(axis) = std::sqrt(-eig.values[c]) * eig.vectors.col(c).transpose();
  }

  const double col_floor = tol.eig_zero * std::max(eig.values.cwiseAbs().maxCoeff(),
                                                   kAbsoluteEigenFloor);
  out.vectors.reserve(k);
  for (int i = 0; i < k; ++i) {
    out.vectors.push_back(MinkowskiVector::from_coordinates(coords.col(i)));
    if (coords.col(i).squaredNorm() <= col_floor) out.degenerate_columns.push_back(i);
  }
  out.feasible = true;
  return out;
}

}  // namespace kissgeo
