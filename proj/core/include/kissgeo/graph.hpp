#pragma once

// Undirected graphs with edge lengths, chordality testing by maximum
// cardinality search, and clique trees of chordal graphs.

#include <map>
#include <set>
#include <utility>
#include <vector>

namespace kissgeo {

struct Edge {
  int u = 0;
  int v = 0;
  double length = 0.0;
};

class LengthGraph {
 public:
  /// Throws std::invalid_argument unless vertex_count >= 1.
  explicit LengthGraph(int vertex_count);

  /// Throws std::invalid_argument on self-loops, out-of-range vertices,
  /// duplicates, and negative or non-finite lengths.
  void add_edge(int u, int v, double length);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(lengths_.size()); }
  bool has_edge(int u, int v) const;
  /// Throws std::out_of_range for a missing edge.
  double length(int u, int v) const;
  /// Neighbors in increasing order.
  const std::set<int>& neighbors(int v) const { return adj_[v]; }
  /// Edges with u < v in lexicographic order.
  std::vector<Edge> edges() const;

 private:
  int n_;
  std::vector<std::set<int>> adj_;
  std::map<std::pair<int, int>, double> lengths_;
};

struct ChordalityResult {
  bool chordal = false;
  /// Perfect elimination ordering (each vertex's later neighbors form a
  /// clique) when chordal.
  std::vector<int> peo;
  /// A chordless cycle of length >= 4, in cyclic order, when not chordal.
  std::vector<int> cycle;
};

/// Maximum cardinality search (ties to the lowest vertex index); the
/// reversed visiting order is verified as a perfect elimination ordering.
ChordalityResult is_chordal(const LengthGraph& g);

struct TreeEdge {
  int a = 0;
  int b = 0;
  /// Common vertices of cliques a and b (possibly empty).
  std::vector<int> separator;
};

struct CliqueTree {
  /// Sorted vertex lists, in lexicographic order.
  std::vector<std::vector<int>> cliques;
  /// Spanning tree over the cliques, edges with a < b.
  std::vector<TreeEdge> edges;

  /// Every vertex's cliques form a connected subtree.
  bool has_running_intersection() const;
  /// Neighbors of each clique in the tree, in increasing order.
  std::vector<std::vector<int>> adjacency() const;
};

/// Maximal cliques of a chordal graph read off `peo`, joined by a
/// maximum-weight spanning tree of the clique intersection graph (weight =
/// separator size, ties broken by clique index pairs); disconnected parts are
/// joined through empty separators.
///
/// Throws std::invalid_argument when `peo` is not a perfect elimination
/// ordering of g.
CliqueTree maximal_cliques(const LengthGraph& g, const std::vector<int>& peo);

/// All maximal cliques of an arbitrary graph (Bron-Kerbosch with pivoting),
/// sorted as in CliqueTree.
std::vector<std::vector<int>> all_maximal_cliques(const LengthGraph& g);

}  // namespace kissgeo
