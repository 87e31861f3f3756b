#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "kissgeo/errors.hpp"
#include "kissgeo/lightcone.hpp"
#include "support/test_support.hpp"

namespace kissgeo {
namespace {

const double kHalfRoot2 = std::sqrt(2.0) / 2.0;

Eigen::VectorXd vec(std::initializer_list<double> xs) {
  Eigen::VectorXd v(xs.size());
  int i = 0;
  for (double x : xs) v[i++] = x;
  return v;
}

MinkowskiVector mv(std::initializer_list<double> xs) {
  return MinkowskiVector::from_coordinates(vec(xs));
}

void expect_coords(const MinkowskiVector& x, std::initializer_list<double> want, double tol) {
  ASSERT_EQ(x.coordinates().size(), static_cast<Eigen::Index>(want.size()));
  int i = 0;
  for (double w : want) EXPECT_NEAR(x[i++], w, tol) << "coordinate " << i - 1;
}

TEST(MinkowskiInner, Examples) {
  EXPECT_EQ(minkowski_inner(mv({1, 0, 1}), mv({1, 0, 1})), 0.0);
  EXPECT_NEAR(minkowski_inner(mv({kHalfRoot2, 0, kHalfRoot2}), mv({0, kHalfRoot2, kHalfRoot2})),
              -0.5, 1e-15);
  EXPECT_NEAR(d_m_squared(mv({kHalfRoot2, 0, kHalfRoot2}), mv({0, kHalfRoot2, kHalfRoot2})), 0.5,
              1e-15);
  EXPECT_EQ(minkowski_inner(mv({0, 0, 1}), mv({0, 0, 1})), -1.0);
  EXPECT_THROW(minkowski_inner(mv({0, 1}), mv({0, 0, 1})), std::invalid_argument);
}

TEST(Psi, Examples) {
  expect_coords(psi(KissingSphere::finite(vec({0}), 1), 2), {kHalfRoot2, 0, kHalfRoot2}, 1e-15);
  expect_coords(psi(KissingSphere::finite(vec({1}), 2), 2), {0, kHalfRoot2, kHalfRoot2}, 1e-15);
  expect_coords(psi(KissingSphere::hyperplane(3), 2), {-3 * kHalfRoot2, 0, 3 * kHalfRoot2}, 1e-15);
  EXPECT_NEAR(d_m_squared(psi(KissingSphere::finite(vec({0}), 1), 2),
                          psi(KissingSphere::finite(vec({1}), 2), 2)),
              0.5, 1e-15);
}

TEST(Psi, RejectsWrongDimension) {
  EXPECT_THROW(psi(KissingSphere::finite(vec({0, 0}), 1), 2), std::invalid_argument);
}

TEST(PsiInverse, Examples) {
  EXPECT_EQ(psi_inverse(mv({kHalfRoot2, 0, kHalfRoot2})), KissingSphere::finite(vec({0}), 1));
  const KissingSphere h = psi_inverse(mv({-3 * kHalfRoot2, 0, 3 * kHalfRoot2}));
  ASSERT_TRUE(h.is_hyperplane());
  EXPECT_NEAR(h.height(), 3.0, 1e-14);
  const KissingSphere p = psi_inverse(mv({0, kHalfRoot2, kHalfRoot2}));
  ASSERT_TRUE(p.is_finite());
  EXPECT_NEAR(p.tangent()[0], 1.0, 1e-14);
  EXPECT_NEAR(p.diameter(), 2.0, 1e-14);
}

TEST(PsiInverse, RejectsNonNullAndPastVectors) {
  EXPECT_THROW(psi_inverse(mv({0, 0, 1})), PreconditionError);
  EXPECT_THROW(psi_inverse(mv({kHalfRoot2, 0, -kHalfRoot2})), PreconditionError);
  EXPECT_THROW(psi_inverse(mv({0, 0, 0})), PreconditionError);
}

TEST(Psi, IsometryNullityAndRoundTrip) {
  testing::Rng rng(41);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 2 + trial % 3;
    const KissingSphere p = testing::random_sphere(rng, n, 0.15);
    const KissingSphere q = testing::random_sphere(rng, n, 0.15);
    const MinkowskiVector x = psi(p, n), y = psi(q, n);
    const double dk = dist_k(p, q);
    EXPECT_LE(std::abs(d_m_squared(x, y) - dk * dk), 1e-9 * (1.0 + dk * dk));
    EXPECT_LE(std::abs(minkowski_inner(x, x)), 1e-12 * std::max(1.0, x.coordinates().squaredNorm()));
    EXPECT_GT(x.time(), 0.0);

    const KissingSphere back = psi_inverse(x);
    ASSERT_EQ(back.is_hyperplane(), p.is_hyperplane());
    if (p.is_hyperplane()) {
      EXPECT_NEAR(back.height(), p.height(), 1e-9 * p.height());
    } else {
      EXPECT_NEAR(back.diameter(), p.diameter(), 1e-9 * p.diameter());
      EXPECT_LE((back.tangent() - p.tangent()).norm(), 1e-9 * (1.0 + p.tangent().norm()));
    }
  }
}

TEST(PsiCurved, Examples) {
  const CurvedImage far = psi_curved(1.0, std::numeric_limits<double>::infinity(), vec({1, 0}));
  EXPECT_FALSE(far.degenerate);
  expect_coords(far.vector, {kHalfRoot2, 0, kHalfRoot2}, 1e-15);

  const CurvedImage two = psi_curved(1.0, 2.0, vec({1, 0}));
  EXPECT_FALSE(two.degenerate);
  expect_coords(two.vector, {std::sqrt(2.0), 0, std::sqrt(2.0)}, 1e-15);

  const CurvedImage around = psi_curved(1.0, -2.0, vec({1, 0}));
  EXPECT_TRUE(around.degenerate);
  expect_coords(around.vector, {0, 0, 0}, 0.0);
}

TEST(PsiCurved, RejectsBadArguments) {
  EXPECT_THROW(psi_curved(0.0, 1.0, vec({1, 0})), std::invalid_argument);
  EXPECT_THROW(psi_curved(1.0, 0.0, vec({1, 0})), std::invalid_argument);
  EXPECT_THROW(psi_curved(1.0, 1.0, vec({1, 1})), std::invalid_argument);
}

TEST(PsiCurved, ImagesAreNull) {
  testing::Rng rng(43);
  for (int trial = 0; trial < 100; ++trial) {
    Eigen::VectorXd dir = testing::random_point(rng, 3, 1.0);
    dir.normalize();
    const CurvedImage c =
        psi_curved(testing::uniform(rng, 0.2, 3.0), testing::uniform(rng, 0.2, 5.0), dir);
    EXPECT_LE(std::abs(minkowski_inner(c.vector, c.vector)),
              1e-12 * c.vector.coordinates().squaredNorm());
  }
}

TEST(IsLorentz, Examples) {
  EXPECT_TRUE(is_lorentz(LorentzMap::identity(2)));
  Eigen::MatrixXd reversal = Eigen::MatrixXd::Identity(3, 3);
  reversal(2, 2) = -1.0;
  EXPECT_FALSE(is_lorentz(LorentzMap(reversal)));
  Eigen::MatrixXd rot = Eigen::MatrixXd::Identity(3, 3);
  rot.topLeftCorner(2, 2) << 0, -1, 1, 0;
  EXPECT_TRUE(is_lorentz(LorentzMap(rot)));
  EXPECT_FALSE(is_lorentz(LorentzMap(2.0 * Eigen::MatrixXd::Identity(3, 3))));
}

TEST(Compose, AppliesInnerFirst) {
  testing::Rng rng(47);
  const LorentzMap a = testing::random_lorentz(rng, 3);
  const LorentzMap b = testing::random_lorentz(rng, 3);
  const MinkowskiVector x = psi(testing::random_finite(rng, 3), 3);
  const MinkowskiVector lhs = apply(compose(a, b), x);
  const MinkowskiVector rhs = apply(a, apply(b, x));
  EXPECT_LE((lhs.coordinates() - rhs.coordinates()).norm(), 1e-12 * rhs.coordinates().norm());
  const LorentzMap back = compose(a.lorentz_inverse(), a);
  EXPECT_LE((back.matrix() - Eigen::MatrixXd::Identity(4, 4)).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(LorentzAlign, IdentityWhenListsCoincide) {
  testing::Rng rng(53);
  const auto spheres = testing::random_sphere_set(rng, 3, 3);
  const auto xs = psi_all(spheres, 3);
  const LorentzMap l = lorentz_align(xs, xs);
  EXPECT_LE((l.matrix() - Eigen::MatrixXd::Identity(4, 4)).cwiseAbs().maxCoeff(), 1e-10);
}

TEST(LorentzAlign, SingleNullVectorQuarterTurn) {
  const std::vector<MinkowskiVector> x{mv({kHalfRoot2, 0, kHalfRoot2})};
  const std::vector<MinkowskiVector> y{mv({0, kHalfRoot2, kHalfRoot2})};
  const LorentzMap l = lorentz_align(x, y);
  EXPECT_TRUE(is_lorentz(l));
  expect_coords(apply(l, x[0]), {0, kHalfRoot2, kHalfRoot2}, 1e-12);
  // The construction picks the rotation taking e_0 to e_1.
  expect_coords(apply(l, mv({1, 0, 0})), {0, 1, 0}, 1e-12);
  expect_coords(apply(l, mv({0, 0, 1})), {0, 0, 1}, 1e-12);
}

TEST(LorentzAlign, CongruentPairs) {
  testing::Rng rng(59);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 2 + trial % 3;
    const auto spheres = testing::random_sphere_set(rng, 2, n);
    const auto xs = psi_all(spheres, n);
    const LorentzMap g = testing::random_lorentz(rng, n);
    std::vector<MinkowskiVector> ys;
    for (const auto& x : xs) ys.push_back(apply(g, x));
    const LorentzMap l = lorentz_align(xs, ys);
    EXPECT_TRUE(is_lorentz(l));
    for (int i = 0; i < 2; ++i) {
      EXPECT_LE((apply(l, xs[i]).coordinates() - ys[i].coordinates()).norm(),
                1e-9 * ys[i].coordinates().norm());
    }
  }
}

TEST(LorentzAlign, ReverseAlignmentIsTheInverse) {
  testing::Rng rng(61);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + trial % 3;
    const int k = 1 + trial % (n + 2);
    const auto xs = psi_all(testing::random_sphere_set(rng, k, n, trial % 4 == 0), n);
    const LorentzMap g = testing::random_lorentz(rng, n);
    std::vector<MinkowskiVector> ys;
    for (const auto& x : xs) ys.push_back(apply(g, x));
    const LorentzMap forward = lorentz_align(xs, ys);
    const LorentzMap backward = lorentz_align(ys, xs);
    const Eigen::MatrixXd prod = compose(backward, forward).matrix();
    EXPECT_LE((prod - Eigen::MatrixXd::Identity(n + 1, n + 1)).cwiseAbs().maxCoeff(), 1e-8)
        << "trial " << trial;
  }
}

TEST(LorentzAlign, ZeroVectorsMatchZeros) {
  const std::vector<MinkowskiVector> x{mv({kHalfRoot2, 0, kHalfRoot2}), mv({0, 0, 0})};
  const std::vector<MinkowskiVector> y{mv({0, kHalfRoot2, kHalfRoot2}), mv({0, 0, 0})};
  EXPECT_NO_THROW(lorentz_align(x, y));
  const std::vector<MinkowskiVector> bad{mv({0, kHalfRoot2, kHalfRoot2}),
                                         mv({kHalfRoot2, 0, kHalfRoot2})};
  EXPECT_THROW(lorentz_align(x, bad), AlignmentError);
}

TEST(LorentzAlign, RejectsGramMismatch) {
  const std::vector<MinkowskiVector> x{psi(KissingSphere::finite(vec({0}), 1), 2),
                                       psi(KissingSphere::finite(vec({1}), 1), 2)};
  const std::vector<MinkowskiVector> y{psi(KissingSphere::finite(vec({0}), 1), 2),
                                       psi(KissingSphere::finite(vec({2}), 1), 2)};
  EXPECT_THROW(lorentz_align(x, y), AlignmentError);
  EXPECT_THROW(lorentz_align(x, std::vector<MinkowskiVector>{x[0]}), std::invalid_argument);
}

TEST(DM, InvariantUnderLorentzMaps) {
  testing::Rng rng(67);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 2 + trial % 3;
    const LorentzMap l = testing::random_lorentz(rng, n);
    ASSERT_TRUE(is_lorentz(l));
    const MinkowskiVector x = psi(testing::random_sphere(rng, n, 0.1), n);
    const MinkowskiVector y = psi(testing::random_sphere(rng, n, 0.1), n);
    const double before = d_m_squared(x, y);
    const double after = d_m_squared(apply(l, x), apply(l, y));
    EXPECT_LE(std::abs(after - before), 1e-9 * (1.0 + before));
  }
}

TEST(Psi, UnitDiametersLieOnTheHyperplaneOfTheUnitHeightPlane) {
  testing::Rng rng(71);
  const int n = 3;
  const MinkowskiVector y = psi(KissingSphere::hyperplane(1.0), n);
  for (int trial = 0; trial < 200; ++trial) {
    // A null vector rescaled so that -<x, y> = 1 must be a unit-diameter sphere.
    MinkowskiVector x = psi(testing::random_finite(rng, n), n);
    x = x * (1.0 / d_m_squared(x, y));
    const KissingSphere p = psi_inverse(x);
    ASSERT_TRUE(p.is_finite());
    EXPECT_NEAR(p.diameter(), 1.0, 1e-12);

    const KissingSphere a = KissingSphere::finite(testing::random_point(rng, n - 1), 1.0);
    const KissingSphere b = KissingSphere::finite(testing::random_point(rng, n - 1), 1.0);
    EXPECT_NEAR(d_m_squared(psi(a, n), y), 1.0, 1e-12);
    EXPECT_NEAR(dist_k(a, b), (a.tangent() - b.tangent()).norm(), 1e-12);
  }
}

}  // namespace
}  // namespace kissgeo
