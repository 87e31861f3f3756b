#pragma once

// Deciding whether a squared-distance matrix is realized by kissing spheres
// (or by points of Euclidean space), and building a realization when it is.

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "kissgeo/distance_matrix.hpp"
#include "kissgeo/kissing.hpp"
#include "kissgeo/minkowski.hpp"
#include "kissgeo/numkernel.hpp"

namespace kissgeo {

/// Exhaustive minor enumeration is limited to this many points (4096
/// subsets); larger inputs must use the eigenvalue test.
inline constexpr int kMinorsMaxOrder = 12;

/// Relative entrywise agreement demanded from every reconstruction.
inline constexpr double kRoundTripTolerance = 1e-7;

enum class Verdict { Embeddable, NotEmbeddable };
enum class Method { Minors, Inertia, DistanceInertia };

const char* to_string(Verdict v);
const char* to_string(Method m);

/// A principal minor with the wrong sign: `subset` indexes the points of the
/// input and `signed_det` is the offending value of (-1)^{|J|} det.
struct MinorWitness {
  std::vector<int> subset;
  double signed_det = 0.0;
};

struct RankWitness {
  int rank = 0;
  int bound = 0;
};

using Witness = std::variant<MinorWitness, RankWitness, Inertia>;

struct Certificate {
  Verdict verdict = Verdict::Embeddable;
  Method method = Method::Inertia;
  /// Present exactly when the verdict is NotEmbeddable.
  std::optional<Witness> witness;

  bool embeddable() const { return verdict == Verdict::Embeddable; }
};

/// The distance matrix bordered by a row and column of ones with a zero
/// corner; the border is the last index.
class CayleyMengerMatrix {
 public:
  explicit CayleyMengerMatrix(const SquaredDistanceMatrix& d);

  const SymMatrix& sym() const { return m_; }
  const Eigen::MatrixXd& matrix() const { return m_.matrix(); }
  int order() const { return m_.order(); }
  int point_count() const { return m_.order() - 1; }

 private:
  SymMatrix m_;
};

CayleyMengerMatrix cayley_menger(const SquaredDistanceMatrix& d);

/// Kissing-sphere embeddability in dimension n.
///
/// Minors: (-1)^{|J|} det D_J <= 0 for every J with |J| >= 2 and rank D <= n+1.
/// The witness is the first violating J in (size, lexicographic) order, or
/// the rank. Throws std::invalid_argument above kMinorsMaxOrder points.
/// Inertia: at most one positive and at most n negative eigenvalues.
///
/// DistanceInertia is not a kissing test and throws std::invalid_argument.
Certificate check_kissing(const SquaredDistanceMatrix& d, int n, Method method,
                          const Tolerance& tol = {});

/// Euclidean embeddability of points in R^n.
///
/// Minors: (-1)^{|J|} det M_J >= 0 on every Cayley-Menger matrix of a
/// nonempty J and rank M <= n+2. Inertia: M has one positive and at most
/// n+1 negative eigenvalues. DistanceInertia: D has at most one positive and
/// at most n+1 negative eigenvalues; this is only a necessary condition.
Certificate check_euclidean(const SquaredDistanceMatrix& d, int n, Method method,
                            const Tolerance& tol = {});

enum class EmbeddingStatus {
  Ok,
  /// The eigenvalue conditions fail.
  Infeasible,
  /// The conditions hold but the matrix has no realization, or the
  /// reconstruction did not reproduce it.
  RealizationFailure,
  /// schur_construction only: D_ab = 0 or some D_ib = 0.
  InadmissiblePivot,
  /// schur_construction only: -P/2 is not a Gram matrix of rank <= n-1.
  NotSemidefinite,
};

const char* to_string(EmbeddingStatus s);

struct EmbeddingResult {
  EmbeddingStatus status = EmbeddingStatus::Ok;
  std::vector<KissingSphere> spheres;
  /// psi of each sphere.
  std::vector<MinkowskiVector> vectors;
  /// relative_max_deviation(distance_matrix(spheres), D) when spheres exist.
  double round_trip_error = 0.0;
  std::string diagnostic;

  bool ok() const { return status == EmbeddingStatus::Ok; }
};

/// Kissing spheres in dimension n whose distance matrix is D.
///
/// Factors D = -X^T eta X in R^{n,1}, orients the columns to the future,
/// moves them into a well-conditioned frame (timelike centroid on the time
/// axis, tangent points away from infinity) and maps them back through
/// psi_inverse. Every result is checked by recomputing its distance matrix.
/// A zero matrix is realized by spheres with a common tangent point.
EmbeddingResult construct_embedding(const SquaredDistanceMatrix& d, int n,
                                    const Tolerance& tol = {});

/// Realization that puts sphere b at the hyperplane of height 1 and sphere a
/// at the origin with diameter 1/D_ab; the others have diameter 1/D_ib and
/// tangent points read from a Gram factorization of -P/2, where P is the
/// Schur complement of the {a, b} block.
EmbeddingResult schur_construction(const SquaredDistanceMatrix& d, int n, int a, int b,
                                   const Tolerance& tol = {});

struct SchurRelations {
  double det_d = 0.0;
  /// det of the pivot block, -D_ab^2.
  double det_pivot = 0.0;
  /// det of the Schur complement; 1 when it is empty.
  double det_schur = 1.0;
  Inertia inertia_d;
  Inertia inertia_schur;
  int rank_d = 0;
  int rank_schur = 0;

  bool det_holds = false;
  bool inertia_holds = false;
  bool rank_holds = false;

  bool all_hold() const { return det_holds && inertia_holds && rank_holds; }
};

/// Compares D with the Schur complement P of its {a, b} block:
/// det D = -D_ab^2 det P, In D = (1,1,0) + In P, rank D = rank P + 2.
/// Determinants are compared to kRoundTripTolerance relative, or accepted
/// when both are below eig_zero times the Hadamard bound of D.
///
/// Throws NumericalError when D_ab vanishes.
SchurRelations verify_schur_relations(const SquaredDistanceMatrix& d, int a, int b,
                                      const Tolerance& tol = {});

}  // namespace kissgeo
