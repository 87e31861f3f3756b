#pragma once

// Completing partially specified kissing distances on a graph: per-clique
// embeddings glued along a clique tree by Lorentz maps, the checks a full
// target matrix has to pass, and the length assignment proving that clique
// feasibility is not enough on non-chordal graphs.

#include <optional>
#include <string>
#include <vector>

#include "kissgeo/embed.hpp"
#include "kissgeo/graph.hpp"
#include "kissgeo/minkowski.hpp"
#include "kissgeo/numkernel.hpp"

namespace kissgeo {

/// Largest graph on which a non-chordal clique check enumerates cliques.
inline constexpr int kMaxGeneralGraphVertices = 40;

struct CliqueReport {
  std::vector<int> clique;
  Certificate certificate;
  /// Outcome of construct_embedding on the clique (Infeasible when the
  /// certificate already fails).
  EmbeddingStatus status = EmbeddingStatus::Ok;
  std::string diagnostic;

  bool feasible() const { return status == EmbeddingStatus::Ok; }
};

struct CliqueFeasibility {
  bool feasible = false;
  std::vector<CliqueReport> cliques;
};

/// Squared lengths on `clique` (every pair must be an edge).
SquaredDistanceMatrix clique_matrix(const LengthGraph& g, const std::vector<int>& clique);

/// Checks every maximal clique: the eigenvalue certificate at dimension n
/// and an actual realization by construct_embedding, which rejects zero
/// patterns the certificate lets through. Non-chordal graphs above
/// kMaxGeneralGraphVertices vertices throw std::invalid_argument.
CliqueFeasibility clique_feasible(const LengthGraph& g, int n, const Tolerance& tol = {});

struct TargetReport {
  /// Zero diagonal.
  bool c1 = false;
  /// Edge entries equal the squared lengths (relative to the largest entry
  /// of D and of the squared lengths, kRoundTripTolerance).
  bool c2 = false;
  /// rank D <= n + 1.
  bool c3 = false;
  /// Exactly one positive eigenvalue, or D = 0.
  bool c4 = false;

  std::optional<int> bad_diagonal;
  std::optional<Edge> bad_edge;
  double worst_edge_deviation = 0.0;
  int rank = 0;
  Inertia inertia;

  bool all() const { return c1 && c2 && c3 && c4; }
  /// Names the first failing condition; empty when all hold.
  std::string diagnostic() const;
};

/// Evaluates the four target-matrix conditions independently. The edge
/// condition is one-directional: non-edge entries may take any value.
TargetReport verify_target_matrix(const SymMatrix& d, const LengthGraph& g, int n,
                                  const Tolerance& tol = {});

enum class CompletionVerdict { Completed, Infeasible, NotChordal };

const char* to_string(CompletionVerdict v);

struct CompletionResult {
  CompletionVerdict verdict = CompletionVerdict::Infeasible;
  std::optional<SquaredDistanceMatrix> full_matrix;
  /// Future null vectors in R^{n,1}, one per vertex, when Completed.
  std::vector<MinkowskiVector> embedding;
  /// Failing clique (Infeasible) or chordless cycle (NotChordal).
  std::vector<int> witness;
  std::string diagnostic;
  std::optional<TargetReport> report;
};

/// Completes the lengths of a chordal graph to a full kissing distance
/// matrix in dimension n. Each maximal clique is realized on its own; the
/// clique tree, rooted at clique `root` (index into the sorted clique list),
/// carries each child's frame onto its parent's through lorentz_align on the
/// separator. When alignment fails the child's private vectors are fitted to
/// the already placed separator vectors by damped Gauss-Newton. The result
/// is accepted only if verify_target_matrix passes.
///
/// Throws std::invalid_argument for an out-of-range root.
CompletionResult complete_chordal(const LengthGraph& g, int n, const Tolerance& tol = {},
                                  int root = 0);

struct NonChordalWitness {
  /// Same edges as the input with the witness lengths.
  LengthGraph lengths;
  std::vector<int> cycle;
  /// First cycle edge, the one cycle edge of length 1.
  Edge e0;
};

/// On a chordless cycle C with first edge e0: length 1 on e0 and on edges
/// with exactly one end in C, 0 elsewhere. Every clique is then realizable
/// while the zero-length cycle edges force both ends of e0 onto one tangent
/// point.
///
/// Throws std::invalid_argument for chordal input.
NonChordalWitness non_chordal_witness(const LengthGraph& g);

namespace detail {

struct AnchoredFit {
  bool converged = false;
  std::vector<MinkowskiVector> vectors;
  double max_residual = 0.0;
};

/// Fits null vectors p_j to -<p_j, anchor_s> = cross(j, s) and
/// -<p_j, p_k> = among(j, k), starting from `initial`.
AnchoredFit fit_to_anchors(const std::vector<MinkowskiVector>& anchors,
                           const Eigen::MatrixXd& cross, const Eigen::MatrixXd& among,
                           std::vector<MinkowskiVector> initial, const Tolerance& tol = {});

}  // namespace detail

}  // namespace kissgeo
