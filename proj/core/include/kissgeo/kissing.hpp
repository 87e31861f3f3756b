#pragma once

// Spheres in the half-space x_0 >= 0 tangent to the hyperplane x_0 = 0, and
// the Moebius-invariant distance between them.
//
// A finite kissing sphere is given by its tangent point t (n-1 coordinates
// for ambient dimension n) and its diameter phi; its "north pole" is
// (phi, t). A sphere whose tangent point is at infinity is the hyperplane
// x_0 = h.

#include <optional>
#include <span>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "kissgeo/distance_matrix.hpp"

namespace kissgeo {

class KissingSphere {
 public:
  /// Throws std::invalid_argument unless diameter > 0 and finite.
  static KissingSphere finite(Eigen::VectorXd tangent, double diameter);
  /// Throws std::invalid_argument unless height > 0 and finite.
  static KissingSphere hyperplane(double height);

  bool is_hyperplane() const { return std::holds_alternative<Plane>(shape_); }
  bool is_finite() const { return !is_hyperplane(); }

  /// Finite spheres only.
  const Eigen::VectorXd& tangent() const;
  double diameter() const;
  /// Hyperplanes only.
  double height() const;

  /// n - 1 for finite spheres; hyperplanes carry no dimension.
  std::optional<int> tangent_dim() const;

  friend bool operator==(const KissingSphere& a, const KissingSphere& b);

 private:
  struct Ball {
    Eigen::VectorXd tangent;
    double diameter;
  };
  struct Plane {
    double height;
  };
  explicit KissingSphere(std::variant<Ball, Plane> s) : shape_(std::move(s)) {}

  std::variant<Ball, Plane> shape_;
};

enum class PairClass { Tangent, Disjoint, Intersecting, SharedTangentPoint };

const char* to_string(PairClass c);

/// Sphere of inversion centred on the boundary hyperplane x_0 = 0.
struct InversionSphere {
  Eigen::VectorXd center;
  double radius;
};

struct Translation {
  Eigen::VectorXd offset;
};

/// Similarity x -> scale * x about the origin; scale must be positive.
struct Dilation {
  double scale;
};

/// Mirror in the hyperplane {y : <normal, y> = offset} of the boundary,
/// extended orthogonally to x_0 = 0. `normal` need not be unit length.
struct Reflection {
  Eigen::VectorXd normal;
  double offset;
};

using MobiusGenerator = std::variant<Translation, Dilation, Reflection, InversionSphere>;

/// Relative tolerance for "same tangent point" on computed inputs and for
/// the d_K = 1 tangency band.
inline constexpr double kTangencyTolerance = 1e-9;

/// The kissing distance:
///   finite/finite      |t(p) - t(q)| / sqrt(phi(p) phi(q))
///   hyperplane/finite  sqrt(h / phi(q))
///   hyperplane/hyperplane  0
/// Coinciding tangent points give 0. Throws std::invalid_argument when two
/// finite spheres live in different dimensions.
double dist_k(const KissingSphere& p, const KissingSphere& q);

/// True when both are hyperplanes, or both finite with tangent points within
/// kTangencyTolerance (relative to the larger point norm, floor 1).
bool same_tangent_point(const KissingSphere& p, const KissingSphere& q);

PairClass classify_pair(const KissingSphere& p, const KissingSphere& q);

/// Image under inversion in `s`:
///   phi' = r^2 phi / |o - t|^2,  t' = o + r^2 (t - o) / |t - o|^2,
/// a finite sphere tangent at o becomes the hyperplane at height r^2 / phi,
/// and the hyperplane at height h becomes the sphere at o with phi = r^2 / h.
KissingSphere invert(const KissingSphere& p, const InversionSphere& s);

/// Throws std::invalid_argument for a non-positive dilation, a zero
/// reflection normal, non-positive inversion radius, or dimension mismatch.
KissingSphere apply_generator(const KissingSphere& p, const MobiusGenerator& g);

KissingSphere apply_generators(const KissingSphere& p,
                               std::span<const MobiusGenerator> steps);

/// A sequence of generators taking a pair of kissing spheres to two
/// unit-diameter spheres. The current constructions always need a single
/// inversion, but the contract is a list.
struct Normalizer {
  std::vector<MobiusGenerator> steps;

  KissingSphere apply(const KissingSphere& p) const { return apply_generators(p, steps); }
};

/// Finds a Moebius map sending p and q to unit-diameter spheres, or
/// std::nullopt when none exists (shared tangent point, including two
/// hyperplanes).
///
/// finite/finite: inversion centred on the segment t(p)t(q) at the point
/// splitting it in ratio sqrt(phi(p)) : sqrt(phi(q)), with radius
/// |t(p) - t(q)| / (sqrt(phi(p)) + sqrt(phi(q))).
/// hyperplane(h)/finite(q): inversion of radius sqrt(h) centred at distance
/// sqrt(h phi(q)) from t(q) along the first boundary axis.
std::optional<Normalizer> normalize_pair(const KissingSphere& p, const KissingSphere& q);

/// Entries dist_k(i,j)^2. Throws std::invalid_argument on an empty list or
/// mixed dimensions.
SquaredDistanceMatrix distance_matrix(std::span<const KissingSphere> spheres);

/// The common tangent dimension of the finite spheres, if any are finite.
/// Throws std::invalid_argument on mixed dimensions.
std::optional<int> common_tangent_dim(std::span<const KissingSphere> spheres);

}  // namespace kissgeo
