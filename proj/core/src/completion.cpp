#include "kissgeo/completion.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <stdexcept>
#include <string>

#include "kissgeo/lightcone.hpp"

namespace kissgeo {

namespace {

std::string join(const std::vector<int>& xs) {
  std::string out = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    out += (i ? "," : "") + std::to_string(xs[i]);
  }
  return out + "}";
}

std::vector<std::vector<int>> cliques_of(const LengthGraph& g) {
  const ChordalityResult ch = is_chordal(g);
  if (ch.chordal) return maximal_cliques(g, ch.peo).cliques;
  if (g.vertex_count() > kMaxGeneralGraphVertices) {
    throw std::invalid_argument("clique enumeration on non-chordal graphs is limited to " +
                                std::to_string(kMaxGeneralGraphVertices) + " vertices");
  }
  return all_maximal_cliques(g);
}

CliqueReport examine_clique(const LengthGraph& g, const std::vector<int>& clique, int n,
                            const Tolerance& tol, EmbeddingResult* embedding) {
  CliqueReport report;
  report.clique = clique;
  const SquaredDistanceMatrix d = clique_matrix(g, clique);
  report.certificate = check_kissing(d, n, Method::Inertia, tol);
  if (!report.certificate.embeddable()) {
    report.status = EmbeddingStatus::Infeasible;
    report.diagnostic = "clique " + join(clique) + " violates the eigenvalue conditions";
    return report;
  }
  EmbeddingResult e = construct_embedding(d, n, tol);
  report.status = e.status;
  if (!e.ok()) {
    report.diagnostic = e.status == EmbeddingStatus::RealizationFailure
                            ? "degenerate zero-distance pattern in clique " + join(clique) +
                                  ": " + e.diagnostic
                            : e.diagnostic;
  }
  if (embedding) *embedding = std::move(e);
  return report;
}

Eigen::MatrixXd as_columns(const std::vector<MinkowskiVector>& xs) {
  Eigen::MatrixXd out(xs.front().coordinates().size(), xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) out.col(i) = xs[i].coordinates();
  return out;
}

}  // namespace

SquaredDistanceMatrix clique_matrix(const LengthGraph& g, const std::vector<int>& clique) {
  const auto k = static_cast<Eigen::Index>(clique.size());
  Eigen::MatrixXd d = Eigen::MatrixXd::Zero(k, k);
  for (Eigen::Index i = 0; i < k; ++i) {
    for (Eigen::Index j = i + 1; j < k; ++j) {
      const double l = g.length(clique[i], clique[j]);
      d(i, j) = d(j, i) = l * l;
    }
  }
  return SquaredDistanceMatrix(SymMatrix(std::move(d)));
}

CliqueFeasibility clique_feasible(const LengthGraph& g, int n, const Tolerance& tol) {
  CliqueFeasibility out;
  out.feasible = true;
  for (const auto& c : cliques_of(g)) {
    out.cliques.push_back(examine_clique(g, c, n, tol, nullptr));
    out.feasible = out.feasible && out.cliques.back().feasible();
  }
  return out;
}

std::string TargetReport::diagnostic() const {
  if (!c1) return "nonzero diagonal entry at " + std::to_string(bad_diagonal.value_or(-1));
  if (!c2) {
    return bad_edge ? "edge (" + std::to_string(bad_edge->u) + "," +
                          std::to_string(bad_edge->v) + ") deviates from its squared length by " +
                          std::to_string(worst_edge_deviation)
                    : "edge mismatch";
  }
  if (!c3) return "rank " + std::to_string(rank) + " exceeds n+1";
  if (!c4) return "inertia " + to_string(inertia) + " does not have exactly one positive eigenvalue";
  return {};
}

TargetReport verify_target_matrix(const SymMatrix& d, const LengthGraph& g, int n,
                                  const Tolerance& tol) {
  if (d.order() != g.vertex_count()) {
    throw std::invalid_argument("matrix order differs from the vertex count");
  }
  if (n < 1) throw std::invalid_argument("dimension n must be >= 1");
  TargetReport r;

  r.c1 = true;
  for (int i = 0; i < d.order(); ++i) {
    if (d(i, i) != 0.0) {
      r.c1 = false;
      r.bad_diagonal = i;
      break;
    }
  }

  double scale = d.max_abs();
  for (const Edge& e : g.edges()) scale = std::max(scale, e.length * e.length);
  r.c2 = true;
  for (const Edge& e : g.edges()) {
    const double dev = std::abs(d(e.u, e.v) - e.length * e.length);
    if (dev > r.worst_edge_deviation) {
      r.worst_edge_deviation = dev;
      if (dev > kRoundTripTolerance * scale && r.c2) {
        r.c2 = false;
        r.bad_edge = e;
      }
    }
  }

  r.inertia = inertia(d, tol);
  r.rank = r.inertia.rank();
  r.c3 = r.rank <= n + 1;
  r.c4 = r.inertia.positive == 1 || r.rank == 0;
  return r;
}

const char* to_string(CompletionVerdict v) {
  switch (v) {
    case CompletionVerdict::Completed:
      return "Completed";
    case CompletionVerdict::Infeasible:
      return "Infeasible";
    case CompletionVerdict::NotChordal:
      return "NotChordal";
  }
  return "?";
}

CompletionResult complete_chordal(const LengthGraph& g, int n, const Tolerance& tol,
                                  int root) {
  if (n < 1) throw std::invalid_argument("dimension n must be >= 1");
  tol.validate();
  CompletionResult out;

  const ChordalityResult ch = is_chordal(g);
  if (!ch.chordal) {
    out.verdict = CompletionVerdict::NotChordal;
    out.witness = ch.cycle;
    out.diagnostic = "chordless cycle " + join(ch.cycle);
    return out;
  }
  const CliqueTree tree = maximal_cliques(g, ch.peo);
  const int m = static_cast<int>(tree.cliques.size());
  if (root < 0 || root >= m) {
    throw std::invalid_argument("root " + std::to_string(root) + " is not a clique index (" +
                                std::to_string(m) + " cliques)");
  }

  // Local frames: per-clique null vectors indexed like the clique.
  std::vector<std::vector<MinkowskiVector>> local(m);
  for (int c = 0; c < m; ++c) {
    EmbeddingResult e;
    const CliqueReport rep = examine_clique(g, tree.cliques[c], n, tol, &e);
    if (!rep.feasible()) {
      out.verdict = CompletionVerdict::Infeasible;
      out.witness = tree.cliques[c];
      out.diagnostic = rep.diagnostic;
      return out;
    }
    local[c] = std::move(e.vectors);
  }

  const auto position = [&](int c, int v) {
    const auto& cl = tree.cliques[c];
    return static_cast<int>(std::lower_bound(cl.begin(), cl.end(), v) - cl.begin());
  };

  const int nv = g.vertex_count();
  std::vector<std::optional<MinkowskiVector>> z(nv);
  std::vector<Eigen::MatrixXd> frame(m);  // maps clique-local coordinates to the result
  std::vector<bool> done(m, false);
  const auto adjacency = tree.adjacency();

  std::queue<std::pair<int, int>> queue;  // (clique, parent)
  queue.emplace(root, -1);
  done[root] = true;
  while (!queue.empty()) {
    const auto [c, parent] = queue.front();
    queue.pop();
    const auto& cl = tree.cliques[c];

    if (parent < 0) {
      frame[c] = Eigen::MatrixXd::Identity(n + 1, n + 1);
    } else {
      std::vector<int> sep;
      std::set_intersection(cl.begin(), cl.end(), tree.cliques[parent].begin(),
                            tree.cliques[parent].end(), std::back_inserter(sep));
      if (sep.empty()) {
        frame[c] = frame[parent];
      } else {
        std::vector<MinkowskiVector> xs, ys;
        for (int v : sep) {
          xs.push_back(local[c][position(c, v)]);
          ys.push_back(local[parent][position(parent, v)]);
        }
        try {
          frame[c] = frame[parent] * lorentz_align(xs, ys, tol).matrix();
        } catch (const AlignmentError& err) {
          // Fit the private vertices directly against the placed separator.
          std::vector<MinkowskiVector> anchors;
          for (int v : sep) anchors.push_back(*z[v]);
          std::vector<int> priv;
          std::set_difference(cl.begin(), cl.end(), sep.begin(), sep.end(),
                              std::back_inserter(priv));
          const Eigen::MatrixXd xs_m = as_columns(xs);
          const Eigen::MatrixXd ys_m = as_columns(anchors);
          const Eigen::MatrixXd guess =
              Eigen::MatrixXd::Identity(n + 1, n + 1) +
              (ys_m - xs_m) * xs_m.completeOrthogonalDecomposition().pseudoInverse();
          std::vector<MinkowskiVector> initial;
          for (int v : priv) {
            initial.push_back(
                MinkowskiVector::from_coordinates(guess * local[c][position(c, v)].coordinates()));
          }
          Eigen::MatrixXd cross(priv.size(), sep.size()), among(priv.size(), priv.size());
          for (std::size_t i = 0; i < priv.size(); ++i) {
            for (std::size_t s = 0; s < sep.size(); ++s) {
              const double l = g.length(priv[i], sep[s]);
              cross(i, s) = l * l;
            }
            for (std::size_t k = 0; k < priv.size(); ++k) {
              const double l = i == k ? 0.0 : g.length(priv[i], priv[k]);
              among(i, k) = l * l;
            }
          }
          const detail::AnchoredFit fit =
              detail::fit_to_anchors(anchors, cross, among, std::move(initial), tol);
          if (!fit.converged) {
            out.verdict = CompletionVerdict::Infeasible;
            out.witness = cl;
            out.diagnostic = "gluing failed on separator " + join(sep) + ": " + err.what();
            return out;
          }
          // The fitted clique becomes its own frame for its children.
          for (std::size_t i = 0; i < priv.size(); ++i) {
            local[c][position(c, priv[i])] = fit.vectors[i];
          }
          for (int v : sep) local[c][position(c, v)] = *z[v];
          frame[c] = Eigen::MatrixXd::Identity(n + 1, n + 1);
        }
      }
    }

    for (std::size_t i = 0; i < cl.size(); ++i) {
      if (!z[cl[i]]) {
        z[cl[i]] = MinkowskiVector::from_coordinates(frame[c] * local[c][i].coordinates());
      }
    }
    for (int d : adjacency[c]) {
      if (!done[d]) {
        done[d] = true;
        queue.emplace(d, c);
      }
    }
  }

  Eigen::MatrixXd full = Eigen::MatrixXd::Zero(nv, nv);
  for (int u = 0; u < nv; ++u) {
    for (int v = u + 1; v < nv; ++v) full(u, v) = full(v, u) = d_m_squared(*z[u], *z[v]) + 0.0;
  }
  const double scale = full.cwiseAbs().maxCoeff();
  for (int u = 0; u < nv; ++u) {
    for (int v = 0; v < nv; ++v) {
      if (full(u, v) >= 0.0) continue;
      if (full(u, v) < -kRoundTripTolerance * scale) {
        out.verdict = CompletionVerdict::Infeasible;
        out.diagnostic = "glued vectors give a negative squared distance at (" +
                         std::to_string(u) + "," + std::to_string(v) + ")";
        return out;
      }
      full(u, v) = 0.0;
    }
  }

  const SymMatrix sym(full);
  out.report = verify_target_matrix(sym, g, n, tol);
  if (!out.report->all()) {
    out.verdict = CompletionVerdict::Infeasible;
    out.diagnostic = "completed matrix fails verification: " + out.report->diagnostic();
    return out;
  }
  out.verdict = CompletionVerdict::Completed;
  out.full_matrix = SquaredDistanceMatrix(sym);
  for (auto& v : z) out.embedding.push_back(std::move(*v));
  return out;
}

NonChordalWitness non_chordal_witness(const LengthGraph& g) {
  const ChordalityResult ch = is_chordal(g);
  if (ch.chordal) throw std::invalid_argument("graph is chordal; no witness exists");
  std::vector<bool> on_cycle(g.vertex_count(), false);
  for (int v : ch.cycle) on_cycle[v] = true;
  const Edge e0{std::min(ch.cycle[0], ch.cycle[1]), std::max(ch.cycle[0], ch.cycle[1]), 1.0};

  NonChordalWitness out{LengthGraph(g.vertex_count()), ch.cycle, e0};
  for (const Edge& e : g.edges()) {
    const bool first = e.u == e0.u && e.v == e0.v;
    const bool straddles = on_cycle[e.u] != on_cycle[e.v];
    out.lengths.add_edge(e.u, e.v, first || straddles ? 1.0 : 0.0);
  }
  return out;
}

namespace detail {

AnchoredFit fit_to_anchors(const std::vector<MinkowskiVector>& anchors,
                           const Eigen::MatrixXd& cross, const Eigen::MatrixXd& among,
                           std::vector<MinkowskiVector> initial, const Tolerance& tol) {
  tol.validate();
  const int p = static_cast<int>(initial.size());
  const int s = static_cast<int>(anchors.size());
  if (cross.rows() != p || cross.cols() != s || among.rows() != p || among.cols() != p) {
    throw std::invalid_argument("fit_to_anchors: target shapes do not match");
  }
  AnchoredFit out;
  if (p == 0) {
    out.converged = true;
    return out;
  }
  const int dim = static_cast<int>(initial.front().coordinates().size());
  const Eigen::MatrixXd eta = signature_form(dim - 1);

  Eigen::VectorXd x(p * dim);
  for (int j = 0; j < p; ++j) x.segment(j * dim, dim) = initial[j].coordinates();

  const int rows = p + p * s + p * (p - 1) / 2;
  const auto residual = [&](const Eigen::VectorXd& y, Eigen::VectorXd& r, Eigen::MatrixXd* jac) {
    r.resize(rows);
    if (jac) jac->setZero(rows, p * dim);
    int row = 0;
    for (int j = 0; j < p; ++j) {
      const Eigen::VectorXd pj = y.segment(j * dim, dim);
      r[row] = pj.dot(eta * pj);
      if (jac) jac->block(row, j * dim, 1, dim) = 2.0 * (eta * pj).transpose();
      ++row;
      for (int a = 0; a < s; ++a, ++row) {
        const Eigen::VectorXd& q = anchors[a].coordinates();
        r[row] = -pj.dot(eta * q) - cross(j, a);
        if (jac) jac->block(row, j * dim, 1, dim) = -(eta * q).transpose();
      }
      for (int k = j + 1; k < p; ++k, ++row) {
        const Eigen::VectorXd pk = y.segment(k * dim, dim);
        r[row] = -pj.dot(eta * pk) - among(j, k);
        if (jac) {
          jac->block(row, j * dim, 1, dim) = -(eta * pk).transpose();
          jac->block(row, k * dim, 1, dim) = -(eta * pj).transpose();
        }
      }
    }
  };

  double scale = std::max(cross.cwiseAbs().maxCoeff(), among.cwiseAbs().maxCoeff());
  for (const auto& a : anchors) scale = std::max(scale, a.coordinates().squaredNorm());
  scale = std::max(scale, 1e-300);

  Eigen::VectorXd r;
  Eigen::MatrixXd jac;
  residual(x, r, &jac);
  double mu = 1e-3;
  for (int it = 0; it < 200 && r.cwiseAbs().maxCoeff() > 1e-3 * kRoundTripTolerance * scale;
       ++it) {
    const Eigen::MatrixXd jtj = jac.transpose() * jac;
    const Eigen::VectorXd grad = jac.transpose() * r;
    bool improved = false;
    for (int attempt = 0; attempt < 30 && !improved; ++attempt) {
      Eigen::MatrixXd lhs = jtj;
      lhs.diagonal().array() += mu * (1.0 + jtj.diagonal().array());
      const Eigen::VectorXd step = lhs.ldlt().solve(-grad);
      Eigen::VectorXd trial = x + step;
      Eigen::VectorXd rt;
      residual(trial, rt, nullptr);
      if (rt.squaredNorm() < r.squaredNorm()) {
        x = std::move(trial);
        mu = std::max(mu / 3.0, 1e-12);
        improved = true;
      } else {
        mu *= 4.0;
      }
    }
    if (!improved) break;
    residual(x, r, &jac);
  }

  out.max_residual = r.cwiseAbs().maxCoeff();
  bool future = true;
  for (int j = 0; j < p; ++j) {
    out.vectors.push_back(MinkowskiVector::from_coordinates(x.segment(j * dim, dim)));
    future = future && out.vectors.back().is_future_directed();
  }
  out.converged = future && out.max_residual <= kRoundTripTolerance * scale;
  return out;
}

}  // namespace detail

}  // namespace kissgeo
