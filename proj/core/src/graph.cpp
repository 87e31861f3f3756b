#include "kissgeo/graph.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <string>
#include <tuple>

namespace kissgeo {

namespace {

// Shortest path from `from` to `to` avoiding `blocked`, or empty.
std::vector<int> shortest_path(const LengthGraph& g, int from, int to,
                               const std::vector<bool>& blocked) {
  std::vector<int> parent(g.vertex_count(), -1);
  std::vector<bool> seen(g.vertex_count(), false);
  std::queue<int> q;
  q.push(from);
  seen[from] = true;
  while (!q.empty()) {
    const int x = q.front();
    q.pop();
    if (x == to) break;
    for (int y : g.neighbors(x)) {
      if (seen[y] || blocked[y]) continue;
      seen[y] = true;
      parent[y] = x;
      q.push(y);
    }
  }
  if (!seen[to]) return {};
  std::vector<int> path;
  for (int x = to; x != -1; x = parent[x]) path.push_back(x);
  std::reverse(path.begin(), path.end());
  return path;
}

// v, u, ..., w closes a chordless cycle when u and w are non-adjacent
// neighbors of v joined by a shortest path avoiding the rest of N[v].
std::vector<int> find_chordless_cycle(const LengthGraph& g) {
  const int n = g.vertex_count();
  for (int v = 0; v < n; ++v) {
    const std::vector<int> nbrs(g.neighbors(v).begin(), g.neighbors(v).end());
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
        const int u = nbrs[i], w = nbrs[j];
        if (g.has_edge(u, w)) continue;
        std::vector<bool> blocked(n, false);
        blocked[v] = true;
        for (int x : nbrs) blocked[x] = true;
        blocked[u] = blocked[w] = false;
        const std::vector<int> path = shortest_path(g, u, w, blocked);
        if (path.empty()) continue;
        std::vector<int> cycle{v};
        cycle.insert(cycle.end(), path.begin(), path.end());
        return cycle;
      }
    }
  }
  return {};
}

bool is_perfect_elimination_ordering(const LengthGraph& g, const std::vector<int>& order) {
  const int n = g.vertex_count();
  if (static_cast<int>(order.size()) != n) return false;
  std::vector<int> pos(n, -1);
  for (int i = 0; i < n; ++i) {
    if (order[i] < 0 || order[i] >= n || pos[order[i]] != -1) return false;
    pos[order[i]] = i;
  }
  for (int v : order) {
    std::vector<int> later;
    for (int w : g.neighbors(v)) {
      if (pos[w] > pos[v]) later.push_back(w);
    }
    if (later.empty()) continue;
    const int first = *std::min_element(later.begin(), later.end(),
                                        [&](int a, int b) { return pos[a] < pos[b]; });
    for (int w : later) {
      if (w != first && !g.has_edge(first, w)) return false;
    }
  }
  return true;
}

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[std::max(a, b)] = std::min(a, b);
    return true;
  }

 private:
  std::vector<int> parent_;
};

std::vector<int> intersection(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

void bron_kerbosch(const LengthGraph& g, std::vector<int>& r, std::set<int> p, std::set<int> x,
                   std::vector<std::vector<int>>& out) {
  if (p.empty() && x.empty()) {
    std::vector<int> clique = r;
    std::sort(clique.begin(), clique.end());
    out.push_back(std::move(clique));
    return;
  }
  int pivot = -1;
  std::size_t best = 0;
  for (const auto* s : {&p, &x}) {
    for (int u : *s) {
      std::size_t c = 0;
      for (int w : g.neighbors(u)) c += p.count(w);
      if (pivot == -1 || c > best) pivot = u, best = c;
    }
  }
  std::vector<int> candidates;
  for (int v : p) {
    if (!g.has_edge(pivot, v)) candidates.push_back(v);
  }
  for (int v : candidates) {
    std::set<int> p2, x2;
    for (int w : g.neighbors(v)) {
      if (p.count(w)) p2.insert(w);
      if (x.count(w)) x2.insert(w);
    }
    r.push_back(v);
    bron_kerbosch(g, r, std::move(p2), std::move(x2), out);
    r.pop_back();
    p.erase(v);
    x.insert(v);
  }
}

}  // namespace

LengthGraph::LengthGraph(int vertex_count) : n_(vertex_count) {
  if (vertex_count < 1) throw std::invalid_argument("graph needs at least one vertex");
  adj_.resize(vertex_count);
}

void LengthGraph::add_edge(int u, int v, double length) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) {
    throw std::invalid_argument("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                ") has a vertex out of range");
  }
  if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
  if (!(length >= 0.0) || !std::isfinite(length)) {
    throw std::invalid_argument("edge length must be finite and nonnegative");
  }
  const auto key = std::minmax(u, v);
  if (!lengths_.emplace(key, length).second) {
    throw std::invalid_argument("duplicate edge (" + std::to_string(key.first) + "," +
                                std::to_string(key.second) + ")");
  }
  adj_[u].insert(v);
  adj_[v].insert(u);
}

bool LengthGraph::has_edge(int u, int v) const {
  return u != v && u >= 0 && v >= 0 && u < n_ && v < n_ && adj_[u].count(v) > 0;
}

double LengthGraph::length(int u, int v) const { return lengths_.at(std::minmax(u, v)); }

std::vector<Edge> LengthGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(lengths_.size());
  for (const auto& [key, len] : lengths_) out.push_back({key.first, key.second, len});
  return out;
}

ChordalityResult is_chordal(const LengthGraph& g) {
  const int n = g.vertex_count();
  std::vector<int> weight(n, 0);
  std::vector<bool> numbered(n, false);
  std::vector<int> visit;
  visit.reserve(n);
  for (int step = 0; step < n; ++step) {
    int pick = -1;
    for (int v = 0; v < n; ++v) {
      if (!numbered[v] && (pick == -1 || weight[v] > weight[pick])) pick = v;
    }
    numbered[pick] = true;
    visit.push_back(pick);
    for (int w : g.neighbors(pick)) {
      if (!numbered[w]) ++weight[w];
    }
  }

  ChordalityResult out;
  out.peo.assign(visit.rbegin(), visit.rend());
  out.chordal = is_perfect_elimination_ordering(g, out.peo);
  if (!out.chordal) {
    out.peo.clear();
    out.cycle = find_chordless_cycle(g);
  }
  return out;
}

bool CliqueTree::has_running_intersection() const {
  const auto adj = adjacency();
  std::set<int> vertices;
  for (const auto& c : cliques) vertices.insert(c.begin(), c.end());
  for (int v : vertices) {
    std::vector<int> holders;
    for (std::size_t i = 0; i < cliques.size(); ++i) {
      if (std::binary_search(cliques[i].begin(), cliques[i].end(), v)) {
        holders.push_back(static_cast<int>(i));
      }
    }
    std::vector<bool> seen(cliques.size(), false);
    std::vector<int> stack{holders.front()};
    seen[holders.front()] = true;
    std::size_t reached = 0;
    while (!stack.empty()) {
      const int c = stack.back();
      stack.pop_back();
      ++reached;
      for (int d : adj[c]) {
        if (!seen[d] && std::binary_search(cliques[d].begin(), cliques[d].end(), v)) {
          seen[d] = true;
          stack.push_back(d);
        }
      }
    }
    if (reached != holders.size()) return false;
  }
  return true;
}

std::vector<std::vector<int>> CliqueTree::adjacency() const {
  std::vector<std::vector<int>> adj(cliques.size());
  for (const auto& e : edges) {
    adj[e.a].push_back(e.b);
    adj[e.b].push_back(e.a);
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());
  return adj;
}

CliqueTree maximal_cliques(const LengthGraph& g, const std::vector<int>& peo) {
  if (!is_perfect_elimination_ordering(g, peo)) {
    throw std::invalid_argument("ordering is not a perfect elimination ordering");
  }
  const int n = g.vertex_count();
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[peo[i]] = i;

  std::vector<std::vector<int>> candidates;
  for (int v : peo) {
    std::vector<int> c{v};
    for (int w : g.neighbors(v)) {
      if (pos[w] > pos[v]) c.push_back(w);
    }
    std::sort(c.begin(), c.end());
    candidates.push_back(std::move(c));
  }

  CliqueTree tree;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    bool maximal = true;
    for (std::size_t j = 0; j < candidates.size() && maximal; ++j) {
      if (i == j) continue;
      const auto& a = candidates[i];
      const auto& b = candidates[j];
      const bool inside = std::includes(b.begin(), b.end(), a.begin(), a.end());
      // Equal sets: keep the first occurrence only.
      if (inside && (a.size() < b.size() || j < i)) maximal = false;
    }
    if (maximal) tree.cliques.push_back(candidates[i]);
  }
  std::sort(tree.cliques.begin(), tree.cliques.end());

  const int m = static_cast<int>(tree.cliques.size());
  std::vector<std::tuple<int, int, int>> pairs;
  for (int a = 0; a < m; ++a) {
    for (int b = a + 1; b < m; ++b) {
      const int w = static_cast<int>(intersection(tree.cliques[a], tree.cliques[b]).size());
      pairs.emplace_back(-w, a, b);
    }
  }
  std::sort(pairs.begin(), pairs.end());
  UnionFind uf(m);
  for (const auto& [negw, a, b] : pairs) {
    if (uf.unite(a, b)) {
      tree.edges.push_back({a, b, intersection(tree.cliques[a], tree.cliques[b])});
    }
  }
  return tree;
}

std::vector<std::vector<int>> all_maximal_cliques(const LengthGraph& g) {
  std::set<int> p;
  for (int v = 0; v < g.vertex_count(); ++v) p.insert(v);
  std::vector<int> r;
  std::vector<std::vector<int>> out;
  bron_kerbosch(g, r, std::move(p), {}, out);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace kissgeo
