// Runs the ten acceptance properties on fresh random instances and prints one
// PASS/FAIL line per property. Exit status is the number of failures.

#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "kissgeo/completion.hpp"
#include "kissgeo/embed.hpp"
#include "kissgeo/kissing.hpp"
#include "kissgeo/lightcone.hpp"
#include "kissgeo/spheres.hpp"
#include "support/test_support.hpp"

using namespace kissgeo;
namespace kt = kissgeo::testing;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail = what;
    pass = pass && ok;
  }
};

std::string fmt(const char* f, double x) {
  char buf[96];
  std::snprintf(buf, sizeof buf, f, x);
  return buf;
}

MobiusGenerator random_generator(kt::Rng& rng, int n, int kind) {
  switch (kind % 3) {
    case 0:
      return InversionSphere{kt::random_point(rng, n - 1), kt::uniform(rng, 0.3, 3.0)};
    case 1:
      return Reflection{kt::random_point(rng, n - 1, 1.0), kt::uniform(rng, -1.0, 1.0)};
    default:
      return Dilation{std::exp(kt::uniform(rng, -2.0, 2.0))};
  }
}

Outcome mobius_invariance() {
  kt::Rng rng(1);
  Outcome o;
  double worst = 0.0;
  for (int i = 0; i < 1500; ++i) {
    const int n = 2 + i % 3;
    const KissingSphere p = kt::random_sphere(rng, n, 0.1);
    const KissingSphere q = kt::random_finite(rng, n);
    const MobiusGenerator g = random_generator(rng, n, i);
    const double before = dist_k(p, q);
    const double after = dist_k(apply_generator(p, g), apply_generator(q, g));
    worst = std::max(worst, std::abs(after - before) / std::max(before, 1e-300));
  }
  o.require(worst <= 1e-9, fmt("max relative deviation %.3g", worst));
  o.detail = o.pass ? fmt("1500 pairs, max relative deviation %.2g", worst) : o.detail;
  return o;
}

Outcome closed_forms() {
  kt::Rng rng(2);
  Outcome o;
  double worst = 0.0;
  const auto measure = [&](const KissingSphere& p, const KissingSphere& q) {
    const auto s = normalize_pair(p, q);
    if (!s) {
      o.require(false, "no normalizing map for a pair with distinct tangent points");
      return;
    }
    const KissingSphere a = s->apply(p), b = s->apply(q);
    const double direct = dist_k(p, q);
    const double normalized = (a.tangent() - b.tangent()).norm();
    worst = std::max(worst, std::abs(direct - normalized) / std::max(direct, 1e-300));
    worst = std::max({worst, std::abs(a.diameter() - 1.0), std::abs(b.diameter() - 1.0)});
  };
  for (int i = 0; i < 1200; ++i) {
    const int n = 2 + i % 3;
    measure(kt::random_finite(rng, n), kt::random_finite(rng, n));
  }
  for (int i = 0; i < 200; ++i) {
    const int n = 2 + i % 3;
    measure(KissingSphere::hyperplane(std::exp(kt::uniform(rng, -1.0, 1.0))),
            kt::random_finite(rng, n));
  }
  o.require(worst <= 1e-9, fmt("max relative deviation %.3g", worst));
  if (o.pass) o.detail = fmt("1200 finite + 200 hyperplane pairs, max deviation %.2g", worst);
  return o;
}

Outcome psi_isometry() {
  kt::Rng rng(3);
  Outcome o;
  double iso = 0.0, null = 0.0, trip = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const int n = 2 + i % 3;
    const KissingSphere p = kt::random_sphere(rng, n, 0.15);
    const KissingSphere q = kt::random_sphere(rng, n, 0.15);
    const MinkowskiVector x = psi(p, n), y = psi(q, n);
    const double dk = dist_k(p, q);
    iso = std::max(iso, std::abs(d_m_squared(x, y) - dk * dk) / (1.0 + dk * dk));
    null = std::max(null, std::abs(minkowski_inner(x, x)) /
                              std::max(1.0, x.coordinates().squaredNorm()));
    o.require(x.time() > 0.0, "psi image is not future-directed");
    const KissingSphere back = psi_inverse(x);
    if (back.is_hyperplane() != p.is_hyperplane()) {
      o.require(false, "psi_inverse changed the sphere type");
      continue;
    }
    if (p.is_hyperplane()) {
      trip = std::max(trip, std::abs(back.height() - p.height()) / p.height());
    } else {
      trip = std::max(trip, std::abs(back.diameter() - p.diameter()) / p.diameter());
      trip = std::max(trip, (back.tangent() - p.tangent()).norm() / (1.0 + p.tangent().norm()));
    }
  }
  o.require(iso <= 1e-9, fmt("isometry deviation %.3g", iso));
  o.require(null <= 1e-12, fmt("nullity deviation %.3g", null));
  o.require(trip <= 1e-9, fmt("round-trip deviation %.3g", trip));
  if (o.pass) {
    o.detail = fmt("1000 pairs, isometry %.2g", iso) + fmt(", null %.2g", null) +
               fmt(", round trip %.2g", trip);
  }
  return o;
}

Outcome method_agreement() {
  kt::Rng rng(4);
  Outcome o;
  int count = 0, embeddable = 0;
  for (int i = 0; i < 700; ++i) {
    const int k = 2 + i % 7;
    const int n = 1 + (i / 7) % 4;
    Eigen::MatrixXd m;
    switch (i % 5) {
      case 0:
        m = kt::random_hollow(rng, k, 0.0);
        break;
      case 1:
        m = kt::random_hollow(rng, k, 0.5);
        break;
      case 2:
        m = distance_matrix(kt::random_sphere_set(rng, k, n, i % 3 == 0)).matrix();
        break;
      case 3:
        m = distance_matrix(kt::random_sphere_set(rng, k, n + 1)).matrix();
        break;
      default: {
        // Sphere configurations with coinciding tangent points.
        auto s = kt::random_sphere_set(rng, k, n);
        for (int j = 1; j < k; j += 2) {
          s[j] = KissingSphere::finite(s[j - 1].tangent(), kt::uniform(rng, 0.2, 3.0));
        }
        m = distance_matrix(s).matrix();
      }
    }
    const SquaredDistanceMatrix d(SymMatrix::symmetrized(m));
    const Certificate a = check_kissing(d, n, Method::Minors);
    const Certificate b = check_kissing(d, n, Method::Inertia);
    o.require(a.verdict == b.verdict, "verdicts differ on instance " + std::to_string(i));
    embeddable += b.embeddable();
    ++count;
  }
  if (o.pass) {
    o.detail = std::to_string(count) + " matrices of order <= 8 (" + std::to_string(embeddable) +
               " embeddable)";
  }
  return o;
}

Outcome embedding_round_trip() {
  kt::Rng rng(5);
  Outcome o;
  double worst = 0.0, worst_schur = 0.0;
  int schur_runs = 0;
  for (int i = 0; i < 240; ++i) {
    const int n = 2 + i % 3;
    const int k = 2 + i % 7;
    const auto d = distance_matrix(kt::random_sphere_set(rng, k, n, i % 4 == 0));
    o.require(check_kissing(d, n, Method::Inertia).embeddable(),
              "check_kissing rejected a sphere matrix");
    const EmbeddingResult e = construct_embedding(d, n);
    if (!e.ok()) {
      o.require(false, "construct_embedding failed: " + e.diagnostic);
      continue;
    }
    const Eigen::MatrixXd back = distance_matrix(e.spheres).matrix();
    worst = std::max(worst, relative_max_deviation(back, d.matrix()));

    const int a = i % k, b = (i + 1) % k;
    bool admissible = d(a, b) > 0.0;
    for (int j = 0; j < k; ++j) admissible = admissible && (j == b || d(j, b) > 0.0);
    if (!admissible) continue;
    const EmbeddingResult s = schur_construction(d, n, a, b);
    if (!s.ok()) {
      o.require(false, "schur_construction failed: " + s.diagnostic);
      continue;
    }
    ++schur_runs;
    worst_schur = std::max(
        worst_schur, relative_max_deviation(distance_matrix(s.spheres).matrix(), back));
  }
  o.require(worst <= kRoundTripTolerance, fmt("construct_embedding deviation %.3g", worst));
  o.require(worst_schur <= kRoundTripTolerance, fmt("schur deviation %.3g", worst_schur));
  if (o.pass) {
    o.detail = "240 sets" + fmt(", deviation %.2g", worst) + ", " + std::to_string(schur_runs) +
               " pivoted" + fmt(", agreement %.2g", worst_schur);
  }
  return o;
}

SquaredDistanceMatrix euclidean_matrix(const std::vector<Eigen::VectorXd>& pts) {
  const int k = static_cast<int>(pts.size());
  Eigen::MatrixXd d(k, k);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) d(i, j) = (pts[i] - pts[j]).squaredNorm();
  }
  return SquaredDistanceMatrix(SymMatrix::symmetrized(d));
}

Outcome degeneration() {
  kt::Rng rng(6);
  Outcome o;
  double unit = 0.0, cm = 0.0;
  for (int i = 0; i < 300; ++i) {
    const int n = 2 + i % 3;
    const Eigen::VectorXd a = kt::random_point(rng, n - 1), b = kt::random_point(rng, n - 1);
    unit = std::max(unit, std::abs(dist_k(KissingSphere::finite(a, 1.0),
                                          KissingSphere::finite(b, 1.0)) -
                                   (a - b).norm()));
    const int k = 1 + i % 6;
    std::vector<Eigen::VectorXd> pts;
    std::vector<KissingSphere> spheres;
    for (int j = 0; j < k; ++j) {
      pts.push_back(kt::random_point(rng, n - 1));
      spheres.push_back(KissingSphere::finite(pts.back(), 1.0));
    }
    spheres.push_back(KissingSphere::hyperplane(1.0));
    const Eigen::MatrixXd kissing = distance_matrix(spheres).matrix();
    const Eigen::MatrixXd border = cayley_menger(euclidean_matrix(pts)).matrix();
    cm = std::max(cm, (kissing - border).cwiseAbs().maxCoeff() /
                          std::max(1.0, border.cwiseAbs().maxCoeff()));
  }
  o.require(unit <= 1e-12, fmt("unit-diameter deviation %.3g", unit));
  o.require(cm <= 1e-12, fmt("Cayley-Menger deviation %.3g", cm));
  const auto tri = SquaredDistanceMatrix::from_rows({{0, 9, 25}, {9, 0, 16}, {25, 16, 0}});
  for (Method m : {Method::Minors, Method::Inertia}) {
    o.require(check_euclidean(tri, 2, m).embeddable(), "3-4-5 triangle rejected at n=2");
    o.require(!check_euclidean(tri, 1, m).embeddable(), "3-4-5 triangle accepted at n=1");
  }
  if (o.pass) o.detail = fmt("unit %.2g", unit) + fmt(", bordered %.2g", cm) + ", 3-4-5 ok";
  return o;
}

Outcome schur_relations() {
  kt::Rng rng(7);
  Outcome o;
  int runs = 0;
  for (int i = 0; i < 220; ++i) {
    const int n = 2 + i % 3;
    const int k = 3 + i % 6;
    const auto d = distance_matrix(kt::random_sphere_set(rng, k, n, i % 3 == 0));
    const int a = i % k, b = (i + 2) % k;
    const SchurRelations r = verify_schur_relations(d, a, b);
    o.require(r.det_holds, "determinant relation fails on instance " + std::to_string(i));
    o.require(r.inertia_holds && r.inertia_d == Inertia{1, 1, 0} + r.inertia_schur,
              "inertia shift fails on instance " + std::to_string(i));
    o.require(r.rank_holds, "rank relation fails on instance " + std::to_string(i));
    ++runs;
  }
  if (o.pass) o.detail = std::to_string(runs) + " matrices, det/inertia/rank relations hold";
  return o;
}

LengthGraph random_chordal_instance(kt::Rng& rng, int k, int n) {
  const auto truth = kt::random_sphere_set(rng, k, n);
  LengthGraph g(k);
  for (int v = 1; v < k; ++v) {
    const int anchor = std::uniform_int_distribution<int>(0, v - 1)(rng);
    std::vector<int> clique{anchor};
    for (int w : g.neighbors(anchor)) {
      if (static_cast<int>(clique.size()) >= n + 1) break;
      if (w >= v || !std::bernoulli_distribution(0.7)(rng)) continue;
      bool joins = true;
      for (int c : clique) joins = joins && g.has_edge(c, w);
      if (joins) clique.push_back(w);
    }
    for (int c : clique) g.add_edge(c, v, dist_k(truth[c], truth[v]));
  }
  return g;
}

LengthGraph cycle_graph(int k) {
  LengthGraph g(k);
  for (int i = 0; i < k; ++i) g.add_edge(i, (i + 1) % k, 1.0);
  return g;
}

Outcome completion() {
  kt::Rng rng(8);
  Outcome o;
  double worst_root = 0.0;
  for (int i = 0; i < 110; ++i) {
    const int n = 2 + i % 3;
    const int k = 3 + i % 8;
    const LengthGraph g = random_chordal_instance(rng, k, n);
    const CompletionResult r = complete_chordal(g, n);
    if (r.verdict != CompletionVerdict::Completed) {
      o.require(false, "instance " + std::to_string(i) + " not completed: " + r.diagnostic);
      continue;
    }
    o.require(r.report && r.report->all(), "C1-C4 fail on instance " + std::to_string(i));
    o.require(verify_target_matrix(r.full_matrix->sym(), g, n).all(),
              "independent C1-C4 check fails on instance " + std::to_string(i));
    const int cliques = static_cast<int>(maximal_cliques(g, is_chordal(g).peo).cliques.size());
    for (int root = 1; root < cliques; ++root) {
      const CompletionResult other = complete_chordal(g, n, {}, root);
      if (other.verdict != CompletionVerdict::Completed) {
        o.require(false, "root " + std::to_string(root) + " failed on instance " +
                             std::to_string(i));
        continue;
      }
      worst_root = std::max(worst_root, relative_max_deviation(other.full_matrix->matrix(),
                                                               r.full_matrix->matrix()));
    }
  }
  o.require(worst_root <= kRoundTripTolerance, fmt("root dependence %.3g", worst_root));
  for (int len : {4, 5}) {
    const NonChordalWitness w = non_chordal_witness(cycle_graph(len));
    o.require(clique_feasible(w.lengths, 2).feasible,
              "C" + std::to_string(len) + " witness is not clique-feasible");
    o.require(complete_chordal(w.lengths, 2).verdict == CompletionVerdict::NotChordal,
              "C" + std::to_string(len) + " witness was not rejected");
  }
  if (o.pass) {
    o.detail = "110 instances" + fmt(", root dependence %.2g", worst_root) +
               ", C4/C5 witnesses rejected";
  }
  return o;
}

Outcome sphere_model() {
  kt::Rng rng(9);
  Outcome o;
  double self = 0.0, sep = 0.0, cone = 0.0;
  for (int i = 0; i < 500; ++i) {
    const int n = 1 + i % 4;
    const EuclideanSphere p = kt::random_round_sphere(rng, n);
    const EuclideanSphere q = kt::random_round_sphere(rng, n);
    const MinkowskiVector x = hyperboloid_embed(p), y = hyperboloid_embed(q);
    self = std::max(self, std::abs(minkowski_inner(x, x) - 1.0) /
                              std::max(1.0, x.coordinates().squaredNorm()));
    const double s = separation(p, q);
    sep = std::max(sep, std::abs(-minkowski_inner(x, y) - s) / (1.0 + std::abs(s)));

    Eigen::VectorXd dir = kt::random_point(rng, n, 1.0);
    dir.normalize();
    const double r = kt::uniform(rng, 0.2, 2.0);
    const EuclideanSphere touching(p.center() + (p.radius() + r) * dir, r);
    const MinkowskiVector z = kissing_cone_embed(x, hyperboloid_embed(touching));
    cone = std::max(cone, std::abs(minkowski_inner(z, z)) /
                              std::max(1.0, z.coordinates().squaredNorm()));
  }
  o.require(self <= 1e-12, fmt("hyperboloid self-product deviation %.3g", self));
  o.require(sep <= 1e-9, fmt("separation deviation %.3g", sep));
  o.require(cone <= 1e-12, fmt("cone nullity deviation %.3g", cone));

  Eigen::VectorXd c0(2), c1(2), c2(2), c3(2);
  c0 << 0, 0;
  c1 << 2, 0;
  c2 << 0, 5;
  const EuclideanSphere unit(c0, 1.0);
  o.require(separation(unit, EuclideanSphere(c1, 1.0)) == 1.0, "external tangency is not 1");
  o.require(separation(unit, EuclideanSphere(c1, 3.0)) == -1.0, "internal tangency is not -1");
  o.require(separation(EuclideanSphere(c0, 3.0), EuclideanSphere(c2, 4.0)) == 0.0,
            "orthogonal spheres do not give 0");
  if (o.pass) {
    o.detail = fmt("self %.2g", self) + fmt(", separation %.2g", sep) +
               fmt(", cone %.2g", cone) + ", thresholds exact";
  }
  return o;
}

Outcome boundary_gap() {
  Outcome o;
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(4, 4);
  m(0, 1) = m(1, 0) = 1.0;
  const SquaredDistanceMatrix d{SymMatrix(m)};
  for (int n = 1; n <= 4; ++n) {
    o.require(check_kissing(d, n, Method::Minors).embeddable(), "Minors rejects the gap matrix");
    o.require(check_kissing(d, n, Method::Inertia).embeddable(),
              "Inertia rejects the gap matrix");
    o.require(construct_embedding(d, n).status == EmbeddingStatus::RealizationFailure,
              "construct_embedding did not report a realization failure");
  }
  if (o.pass) o.detail = "both checks pass, construction reports RealizationFailure (n=1..4)";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"mobius invariance of d_K", mobius_invariance},
      {"closed forms vs normalize-then-measure", closed_forms},
      {"lightcone isometry", psi_isometry},
      {"minors/inertia agreement", method_agreement},
      {"embedding round trip", embedding_round_trip},
      {"degeneration bridges", degeneration},
      {"schur relations", schur_relations},
      {"chordal completion", completion},
      {"sphere model", sphere_model},
      {"boundary gap", boundary_gap},
  };
  int failures = 0;
  int index = 1;
  for (const auto& [name, check] : criteria) {
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    std::printf("[%s] %2d %s: %s\n", o.pass ? "PASS" : "FAIL", index++, name, o.detail.c_str());
    failures += !o.pass;
  }
  std::printf("%d/%zu acceptance criteria passed\n",
              static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures;
}
