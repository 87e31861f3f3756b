#include "kissgeo/kissing.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace kissgeo {

namespace {

void require_same_dim(const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("kissing spheres live in different dimensions (" +
                                std::to_string(a.size() + 1) + " vs " +
                                std::to_string(b.size() + 1) + ")");
  }
}

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

}  // namespace

KissingSphere KissingSphere::finite(Eigen::VectorXd tangent, double diameter) {
  if (!(diameter > 0.0) || !std::isfinite(diameter)) {
    throw std::invalid_argument("kissing sphere diameter must be positive and finite");
  }
  if (!tangent.allFinite()) {
    throw std::invalid_argument("kissing sphere tangent point must be finite");
  }
  return KissingSphere(Ball{std::move(tangent), diameter});
}

KissingSphere KissingSphere::hyperplane(double height) {
  if (!(height > 0.0) || !std::isfinite(height)) {
    throw std::invalid_argument("hyperplane height must be positive and finite");
  }
  return KissingSphere(Plane{height});
}

const Eigen::VectorXd& KissingSphere::tangent() const {
  if (is_hyperplane()) throw std::logic_error("hyperplane has no finite tangent point");
  return std::get<Ball>(shape_).tangent;
}

double KissingSphere::diameter() const {
  if (is_hyperplane()) throw std::logic_error("hyperplane has infinite diameter");
  return std::get<Ball>(shape_).diameter;
}

double KissingSphere::height() const {
  if (is_finite()) throw std::logic_error("finite kissing sphere has no height");
  return std::get<Plane>(shape_).height;
}

std::optional<int> KissingSphere::tangent_dim() const {
  if (is_hyperplane()) return std::nullopt;
  return static_cast<int>(tangent().size());
}

bool operator==(const KissingSphere& a, const KissingSphere& b) {
  if (a.is_hyperplane() != b.is_hyperplane()) return false;
  if (a.is_hyperplane()) return a.height() == b.height();
  return a.diameter() == b.diameter() && a.tangent() == b.tangent();
}

const char* to_string(PairClass c) {
  switch (c) {
    case PairClass::Tangent:
      return "Tangent";
    case PairClass::Disjoint:
      return "Disjoint";
    case PairClass::Intersecting:
      return "Intersecting";
    case PairClass::SharedTangentPoint:
      return "SharedTangentPoint";
  }
  return "?";
}

double dist_k(const KissingSphere& p, const KissingSphere& q) {
  if (p.is_hyperplane() && q.is_hyperplane()) return 0.0;
  if (p.is_hyperplane()) return std::sqrt(p.height() / q.diameter());
  if (q.is_hyperplane()) return std::sqrt(q.height() / p.diameter());
  require_same_dim(p.tangent(), q.tangent());
  return (p.tangent() - q.tangent()).norm() / std::sqrt(p.diameter() * q.diameter());
}

bool same_tangent_point(const KissingSphere& p, const KissingSphere& q) {
  if (p.is_hyperplane() || q.is_hyperplane()) {
    return p.is_hyperplane() && q.is_hyperplane();
  }
  require_same_dim(p.tangent(), q.tangent());
  const double scale = std::max({1.0, p.tangent().norm(), q.tangent().norm()});
  return (p.tangent() - q.tangent()).norm() <= kTangencyTolerance * scale;
}

PairClass classify_pair(const KissingSphere& p, const KissingSphere& q) {
  const double d = dist_k(p, q);
  if (same_tangent_point(p, q)) return PairClass::SharedTangentPoint;
  if (std::abs(d - 1.0) <= kTangencyTolerance) return PairClass::Tangent;
  return d > 1.0 ? PairClass::Disjoint : PairClass::Intersecting;
}

KissingSphere invert(const KissingSphere& p, const InversionSphere& s) {
  if (!(s.radius > 0.0)) throw std::invalid_argument("inversion radius must be positive");
  const double r2 = s.radius * s.radius;
  if (p.is_hyperplane()) return KissingSphere::finite(s.center, r2 / p.height());

  require_same_dim(p.tangent(), s.center);
  const Eigen::VectorXd offset = p.tangent() - s.center;
  const double d2 = offset.squaredNorm();
  if (d2 == 0.0) return KissingSphere::hyperplane(r2 / p.diameter());
  return KissingSphere::finite(s.center + (r2 / d2) * offset, r2 * p.diameter() / d2);
}

KissingSphere apply_generator(const KissingSphere& p, const MobiusGenerator& g) {
  return std::visit(
      Overloaded{
          [&](const Translation& t) {
            if (p.is_hyperplane()) return p;
            require_same_dim(p.tangent(), t.offset);
            return KissingSphere::finite(p.tangent() + t.offset, p.diameter());
          },
          [&](const Dilation& d) {
            if (!(d.scale > 0.0)) {
              throw std::invalid_argument("dilation factor must be positive");
            }
            if (p.is_hyperplane()) return KissingSphere::hyperplane(d.scale * p.height());
            return KissingSphere::finite(d.scale * p.tangent(), d.scale * p.diameter());
          },
          [&](const Reflection& r) {
            const double nn = r.normal.squaredNorm();
            if (!(nn > 0.0)) throw std::invalid_argument("reflection normal is zero");
            if (p.is_hyperplane()) return p;
            require_same_dim(p.tangent(), r.normal);
            const double side = r.normal.dot(p.tangent()) - r.offset;
            return KissingSphere::finite(p.tangent() - (2.0 * side / nn) * r.normal,
                                         p.diameter());
          },
          [&](const InversionSphere& s) { return invert(p, s); },
      },
      g);
}

KissingSphere apply_generators(const KissingSphere& p,
                               std::span<const MobiusGenerator> steps) {
  KissingSphere out = p;
  for (const auto& g : steps) out = apply_generator(out, g);
  return out;
}

std::optional<Normalizer> normalize_pair(const KissingSphere& p, const KissingSphere& q) {
  if (p.is_hyperplane() && q.is_hyperplane()) return std::nullopt;

  if (p.is_hyperplane() || q.is_hyperplane()) {
    const KissingSphere& plane = p.is_hyperplane() ? p : q;
    const KissingSphere& ball = p.is_hyperplane() ? q : p;
    // A zero-dimensional boundary has no room for a centre other than t(q).
    if (ball.tangent().size() == 0) return std::nullopt;
    Eigen::VectorXd center = ball.tangent();
    center[0] += std::sqrt(plane.height() * ball.diameter());
    return Normalizer{{InversionSphere{std::move(center), std::sqrt(plane.height())}}};
  }

  require_same_dim(p.tangent(), q.tangent());
  const double gap = (p.tangent() - q.tangent()).norm();
  if (gap == 0.0 || same_tangent_point(p, q)) return std::nullopt;

  const double sp = std::sqrt(p.diameter());
  const double sq = std::sqrt(q.diameter());
  Eigen::VectorXd center = p.tangent() + (sp / (sp + sq)) * (q.tangent() - p.tangent());
  return Normalizer{{InversionSphere{std::move(center), gap / (sp + sq)}}};
}

std::optional<int> common_tangent_dim(std::span<const KissingSphere> spheres) {
  std::optional<int> dim;
  for (const auto& s : spheres) {
    const auto d = s.tangent_dim();
    if (!d) continue;
    if (dim && *dim != *d) {
      throw std::invalid_argument("kissing spheres live in different dimensions");
    }
    dim = d;
  }
  return dim;
}

SquaredDistanceMatrix distance_matrix(std::span<const KissingSphere> spheres) {
  if (spheres.empty()) throw std::invalid_argument("empty sphere list");
  common_tangent_dim(spheres);
  const auto k = static_cast<Eigen::Index>(spheres.size());
  Eigen::MatrixXd d = Eigen::MatrixXd::Zero(k, k);
  for (Eigen::Index i = 0; i < k; ++i) {
    for (Eigen::Index j = i + 1; j < k; ++j) {
      const double dk = dist_k(spheres[i], spheres[j]);
      d(i, j) = d(j, i) = dk * dk;
    }
  }
  return SquaredDistanceMatrix(SymMatrix(std::move(d)));
}

}  // namespace kissgeo
