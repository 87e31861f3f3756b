#include "kissgeo/embed.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "kissgeo/errors.hpp"
#include "kissgeo/lightcone.hpp"
#include "minors.hpp"

namespace kissgeo {

namespace {

void require_dimension(int n) {
  if (n < 1) throw std::invalid_argument("dimension n must be >= 1");
}

void require_minor_cap(int order) {
  if (order > kMinorsMaxOrder) {
    throw std::invalid_argument("minor enumeration is limited to " +
                                std::to_string(kMinorsMaxOrder) + " points; got " +
                                std::to_string(order) + " (use the inertia method)");
  }
}

Certificate accept(Method m) { return {Verdict::Embeddable, m, std::nullopt}; }

Certificate reject(Method m, Witness w) { return {Verdict::NotEmbeddable, m, std::move(w)}; }

// Spheres sharing the tangent point 0 with distinct diameters.
EmbeddingResult coincident_spheres(int k, int n) {
  EmbeddingResult out;
  for (int i = 0; i < k; ++i) {
    out.spheres.push_back(KissingSphere::finite(Eigen::VectorXd::Zero(n - 1), i + 1.0));
  }
  out.vectors = psi_all(out.spheres, n);
  return out;
}

EmbeddingResult failure(EmbeddingStatus status, std::string why) {
  EmbeddingResult out;
  out.status = status;
  out.diagnostic = std::move(why);
  return out;
}

void finish_with_round_trip(EmbeddingResult& out, const SquaredDistanceMatrix& d, int n) {
  out.vectors = psi_all(out.spheres, n);
  out.round_trip_error =
      relative_max_deviation(distance_matrix(out.spheres).matrix(), d.matrix());
  if (!(out.round_trip_error <= kRoundTripTolerance)) {
    out.status = EmbeddingStatus::RealizationFailure;
    out.diagnostic = "reconstructed distances deviate by " +
                     std::to_string(out.round_trip_error) + " (relative)";
  }
}

// Form reflection x -> x - 2 <v,x>/<v,v> v applied to each column.
void reflect_columns(Eigen::MatrixXd& xs, const Eigen::VectorXd& v, const Eigen::MatrixXd& eta) {
  const double vv = v.dot(eta * v);
  const Eigen::RowVectorXd coeff = (2.0 / vv) * (eta * v).transpose() * xs;
  xs -= v * coeff;
}

// Moves future null columns into a frame where their timelike centroid is on
// the time axis and the boundary direction e_0 is as far as possible from
// every -direction, so that w = x_0 + t stays large (no tangent point near
// infinity unless forced).
void canonical_frame(Eigen::MatrixXd& xs) {
  const Eigen::Index dim = xs.rows();
  const Eigen::Index n = dim - 1;
  const Eigen::MatrixXd eta = signature_form(static_cast<int>(n));

  Eigen::VectorXd centroid = Eigen::VectorXd::Zero(dim);
  for (Eigen::Index c = 0; c < xs.cols(); ++c) {
    const double norm = xs.col(c).norm();
    if (norm > 0.0) centroid += xs.col(c) / norm;
  }
  const double cc = -centroid.dot(eta * centroid);
  if (cc > 1e-12 * centroid.squaredNorm()) {
    const Eigen::VectorXd u = centroid / std::sqrt(cc);
    if (u[n] - 1.0 > 1e-14) {
      Eigen::VectorXd v = u;
      v[n] -= 1.0;
      reflect_columns(xs, v, eta);
    }
  }

  std::vector<Eigen::VectorXd> dirs;
  for (Eigen::Index c = 0; c < xs.cols(); ++c) {
    if (xs(n, c) > 0.0) dirs.push_back(xs.col(c).head(n) / xs(n, c));
  }
  std::vector<Eigen::VectorXd> candidates;
  for (Eigen::Index k = 0; k < n; ++k) {
    candidates.push_back(Eigen::VectorXd::Unit(n, k));
    candidates.push_back(-Eigen::VectorXd::Unit(n, k));
  }
  for (const auto& s : dirs) {
    if (s.norm() > 0.0) candidates.push_back(s.normalized());
  }
  Eigen::VectorXd best = Eigen::VectorXd::Unit(n, 0);
  double best_score = -1.0;
  for (const auto& d : candidates) {
    double score = 2.0;
    for (const auto& s : dirs) score = std::min(score, 1.0 + s.dot(d));
    if (score > best_score + 1e-12) {
      best_score = score;
      best = d;
    }
  }
  Eigen::VectorXd v = best - Eigen::VectorXd::Unit(n, 0);
  if (v.norm() > 1e-14) {
    Eigen::VectorXd full = Eigen::VectorXd::Zero(dim);
    full.head(n) = v;
    reflect_columns(xs, full, eta);
  }
}

}  // namespace

const char* to_string(Verdict v) {
  return v == Verdict::Embeddable ? "Embeddable" : "NotEmbeddable";
}

const char* to_string(Method m) {
  switch (m) {
    case Method::Minors:
      return "Minors";
    case Method::Inertia:
      return "Inertia";
    case Method::DistanceInertia:
      return "DistanceInertia";
  }
  return "?";
}

const char* to_string(EmbeddingStatus s) {
  switch (s) {
    case EmbeddingStatus::Ok:
      return "Ok";
    case EmbeddingStatus::Infeasible:
      return "Infeasible";
    case EmbeddingStatus::RealizationFailure:
      return "RealizationFailure";
    case EmbeddingStatus::InadmissiblePivot:
      return "InadmissiblePivot";
    case EmbeddingStatus::NotSemidefinite:
      return "NotSemidefinite";
  }
  return "?";
}

CayleyMengerMatrix::CayleyMengerMatrix(const SquaredDistanceMatrix& d)
    : m_([&] {
        const int k = d.order();
        Eigen::MatrixXd m = Eigen::MatrixXd::Ones(k + 1, k + 1);
        m.topLeftCorner(k, k) = d.matrix();
        m(k, k) = 0.0;
        return SymMatrix(std::move(m));
      }()) {}

CayleyMengerMatrix cayley_menger(const SquaredDistanceMatrix& d) { return CayleyMengerMatrix(d); }

Certificate check_kissing(const SquaredDistanceMatrix& d, int n, Method method,
                          const Tolerance& tol) {
  require_dimension(n);
  tol.validate();
  switch (method) {
    case Method::Inertia: {
      const Inertia in = inertia(d.sym(), tol);
      if (in.positive <= 1 && in.negative <= n) return accept(method);
      return reject(method, in);
    }
    case Method::Minors: {
      require_minor_cap(d.order());
      if (auto hit = detail::first_positive_signed_minor(d.matrix(), {}, 2, tol.eig_zero)) {
        return reject(method, MinorWitness{hit->subset, hit->signed_det});
      }
      const int r = rank(d.sym(), tol);
      if (r > n + 1) return reject(method, RankWitness{r, n + 1});
      return accept(method);
    }
    case Method::DistanceInertia:
      break;
  }
  throw std::invalid_argument("the distance-inertia test applies to Euclidean checks only");
}

Certificate check_euclidean(const SquaredDistanceMatrix& d, int n, Method method,
                            const Tolerance& tol) {
  require_dimension(n);
  tol.validate();
  switch (method) {
    case Method::Minors: {
      require_minor_cap(d.order());
      const CayleyMengerMatrix cm(d);
      const int border = d.order();
      const int required[] = {border};
      if (auto hit =
              detail::first_positive_signed_minor(cm.matrix(), required, 2, tol.eig_zero)) {
        std::vector<int> points(hit->subset.begin(), hit->subset.end() - 1);
        return reject(method, MinorWitness{std::move(points), -hit->signed_det});
      }
      const int r = rank(cm.sym(), tol);
      if (r > n + 2) return reject(method, RankWitness{r, n + 2});
      return accept(method);
    }
    case Method::Inertia: {
      const Inertia in = inertia(CayleyMengerMatrix(d).sym(), tol);
      if (in.positive == 1 && in.negative <= n + 1) return accept(method);
      return reject(method, in);
    }
    case Method::DistanceInertia: {
      const Inertia in = inertia(d.sym(), tol);
      if (in.positive <= 1 && in.negative <= n + 1) return accept(method);
      return reject(method, in);
    }
  }
  throw std::invalid_argument("unknown method");
}

EmbeddingResult construct_embedding(const SquaredDistanceMatrix& d, int n,
                                    const Tolerance& tol) {
  require_dimension(n);
  tol.validate();
  const int k = d.order();
  if (d.is_zero()) return coincident_spheres(k, n);

  const LorentzFactorization f = gram_factor_lorentz(d.sym(), n, tol);
  if (!f.feasible) return failure(EmbeddingStatus::Infeasible, f.diagnostic);
  if (!f.degenerate_columns.empty()) {
    return failure(EmbeddingStatus::RealizationFailure,
                   "degenerate zero-distance pattern: point " +
                       std::to_string(f.degenerate_columns.front()) +
                       " factors to the zero vector");
  }

  Eigen::MatrixXd xs(n + 1, k);
  for (int i = 0; i < k; ++i) xs.col(i) = f.vectors[i].coordinates();
  const long future = (xs.row(n).array() > 0.0).count();
  if (future == 0) {
    xs = -xs;
  } else if (future != k) {
    return failure(EmbeddingStatus::RealizationFailure,
                   "factor columns have mixed time orientation");
  }
  canonical_frame(xs);

  EmbeddingResult out;
  try {
    for (int i = 0; i < k; ++i) {
      out.spheres.push_back(psi_inverse(MinkowskiVector::from_coordinates(xs.col(i)), tol));
    }
  } catch (const PreconditionError& e) {
    return failure(EmbeddingStatus::RealizationFailure, e.what());
  }
  finish_with_round_trip(out, d, n);
  if (!out.ok()) out.spheres.clear(), out.vectors.clear();
  return out;
}

EmbeddingResult schur_construction(const SquaredDistanceMatrix& d, int n, int a, int b,
                                   const Tolerance& tol) {
  require_dimension(n);
  tol.validate();
  const int k = d.order();
  if (a < 0 || b < 0 || a >= k || b >= k || a == b) {
    throw std::invalid_argument("pivot pair must be two distinct indices");
  }
  for (int i = 0; i < k; ++i) {
    if (i != b && !(d(i, b) > 0.0)) {
      return failure(EmbeddingStatus::InadmissiblePivot,
                     "D(" + std::to_string(i) + "," + std::to_string(b) + ") is zero");
    }
  }

  std::vector<int> rest;
  for (int i = 0; i < k; ++i) {
    if (i != a && i != b) rest.push_back(i);
  }
  Eigen::MatrixXd v = Eigen::MatrixXd::Zero(n - 1, static_cast<Eigen::Index>(rest.size()));
  if (!rest.empty()) {
    const int pivot[] = {std::min(a, b), std::max(a, b)};
    const SymMatrix p = schur_complement(d.sym(), pivot, tol);
    double scale = 0.0;
    for (std::size_t r = 0; r < rest.size(); ++r) {
      for (std::size_t c = 0; c < rest.size(); ++c) {
        const int i = rest[r], j = rest[c];
        scale = std::max(scale, std::abs(d(i, j)) +
                                    std::abs(d(i, a) * d(b, j) + d(i, b) * d(a, j)) / d(a, b));
      }
    }
    const EigenDecomposition eig = sym_eigen(SymMatrix::symmetrized(-0.5 * p.matrix()), tol);
    const double thr = std::max(zero_threshold(eig.values, tol), tol.eig_zero * scale);
    if (eig.values.minCoeff() < -thr) {
      return failure(EmbeddingStatus::NotSemidefinite,
                     "-P/2 has a negative eigenvalue " + std::to_string(eig.values.minCoeff()));
    }
    const long positive = (eig.values.array() > thr).count();
    if (positive > n - 1) {
      return failure(EmbeddingStatus::NotSemidefinite,
                     "-P/2 has rank " + std::to_string(positive) + " > n-1 = " +
                         std::to_string(n - 1));
    }
    for (long c = 0; c < positive; ++c) {
      v.row(c) = std::sqrt(eig.values[c]) * eig.vectors.col(c).transpose();
    }
  }

  EmbeddingResult out;
  out.spheres.resize(k, KissingSphere::hyperplane(1.0));
  out.spheres[a] = KissingSphere::finite(Eigen::VectorXd::Zero(n - 1), 1.0 / d(a, b));
  for (std::size_t r = 0; r < rest.size(); ++r) {
    const int i = rest[r];
    out.spheres[i] = KissingSphere::finite(v.col(r) / d(i, b), 1.0 / d(i, b));
  }
  finish_with_round_trip(out, d, n);
  if (!out.ok()) out.spheres.clear(), out.vectors.clear();
  return out;
}

SchurRelations verify_schur_relations(const SquaredDistanceMatrix& d, int a, int b,
                                      const Tolerance& tol) {
  tol.validate();
  const int k = d.order();
  if (a < 0 || b < 0 || a >= k || b >= k || a == b) {
    throw std::invalid_argument("pivot pair must be two distinct indices");
  }
  if (!(d(a, b) > tol.residual * d.sym().max_abs())) {
    throw NumericalError("pivot block is singular: D(a,b) vanishes");
  }

  SchurRelations out;
  out.det_d = determinant(d.matrix());
  out.det_pivot = -d(a, b) * d(a, b);
  out.inertia_d = inertia(d.sym(), tol);
  out.rank_d = out.inertia_d.rank();

  std::vector<int> all(k);
  for (int i = 0; i < k; ++i) all[i] = i;
  double bound = detail::hadamard_bound(d.matrix(), all);
  if (k > 2) {
    const int pivot[] = {std::min(a, b), std::max(a, b)};
    const SymMatrix p = schur_complement(d.sym(), pivot, tol);
    out.det_schur = determinant(p.matrix());
    out.inertia_schur = inertia(p, tol);
    out.rank_schur = out.inertia_schur.rank();
    std::vector<int> rest(k - 2);
    for (int i = 0; i < k - 2; ++i) rest[i] = i;
    bound = std::max(bound, -out.det_pivot * detail::hadamard_bound(p.matrix(), rest));
  }

  const double rhs = out.det_pivot * out.det_schur;
  const double gap = std::abs(out.det_d - rhs);
  const bool both_zero = std::abs(out.det_d) <= tol.eig_zero * bound &&
                         std::abs(rhs) <= tol.eig_zero * bound;
  out.det_holds = both_zero || gap <= kRoundTripTolerance * std::max(std::abs(out.det_d),
                                                                     std::abs(rhs));
  out.inertia_holds = out.inertia_d == Inertia{1, 1, 0} + out.inertia_schur;
  out.rank_holds = out.rank_d == out.rank_schur + 2;
  return out;
}

}  // namespace kissgeo
