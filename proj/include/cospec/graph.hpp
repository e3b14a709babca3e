#pragma once

#include <algorithm>
#include <optional>
#include <queue>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cospec {

using Edge = std::pair<int, int>;

/// Thrown by bipartition() when the graph contains an odd cycle. Carries one
/// offending odd closed walk as a node sequence (start node repeated at the end).
class OddCycleError : public std::runtime_error {
public:
  OddCycleError(std::string message, std::vector<int> odd_walk)
      : std::runtime_error(std::move(message)), walk(std::move(odd_walk)) {}

  std::vector<int> walk;
};

/// Immutable simple undirected graph on dense 0-based node indices.
///
/// The edge set is canonical: every pair is stored with the smaller endpoint
/// first and the whole list sorted lexicographically. Construction rejects
/// self-loops, duplicate edges and out-of-range endpoints instead of repairing
/// them, so generator bugs surface at the call site.
class Graph {
public:
  Graph() = default;

  Graph(int node_count, std::vector<Edge> edge_list) : n_(node_count) {
    if (node_count < 0) throw std::invalid_argument("graph: negative node count");
    for (auto& [u, v] : edge_list) {
      if (u < 0 || v < 0 || u >= n_ || v >= n_)
        throw std::invalid_argument("graph: edge endpoint out of range: (" +
                                    std::to_string(u) + "," + std::to_string(v) + ")");
      if (u == v)
        throw std::invalid_argument("graph: self-loop at node " + std::to_string(u));
      if (u > v) std::swap(u, v);
    }
    std::sort(edge_list.begin(), edge_list.end());
    auto dup = std::adjacent_find(edge_list.begin(), edge_list.end());
    if (dup != edge_list.end())
      throw std::invalid_argument("graph: duplicate edge (" + std::to_string(dup->first) +
                                  "," + std::to_string(dup->second) + ")");
    edges_ = std::move(edge_list);
    adj_.assign(static_cast<size_t>(n_), {});
    for (auto [u, v] : edges_) {
      adj_[static_cast<size_t>(u)].push_back(v);
      adj_[static_cast<size_t>(v)].push_back(u);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
  }

  int node_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int v) const { return adj_[static_cast<size_t>(v)]; }
  int degree(int v) const { return static_cast<int>(adj_[static_cast<size_t>(v)].size()); }

  bool has_edge(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) return false;
    const auto& nb = adj_[static_cast<size_t>(u)];
    return std::binary_search(nb.begin(), nb.end(), v);
  }

  bool operator==(const Graph& other) const {
    return n_ == other.n_ && edges_ == other.edges_;
  }

private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adj_;
};

inline Graph new_graph(int node_count, std::vector<Edge> edge_list) {
  return Graph(node_count, std::move(edge_list));
}

/// Union with the node indices of g2 shifted up by g1.node_count().
inline Graph disjoint_union(const Graph& g1, const Graph& g2) {
  std::vector<Edge> edges = g1.edges();
  edges.reserve(edges.size() + g2.edges().size());
  const int offset = g1.node_count();
  for (auto [u, v] : g2.edges()) edges.emplace_back(u + offset, v + offset);
  return Graph(g1.node_count() + g2.node_count(), std::move(edges));
}

enum class Side { U, W };

inline char side_label(Side s) { return s == Side::U ? 'U' : 'W'; }

/// Two-coloring of the nodes. Valid when every edge joins a U-node to a W-node.
struct Bipartition {
  std::vector<Side> side_of;

  Side side(int v) const { return side_of[static_cast<size_t>(v)]; }
};

inline bool valid_bipartition(const Graph& g, const Bipartition& b) {
  if (static_cast<int>(b.side_of.size()) != g.node_count()) return false;
  for (auto [u, v] : g.edges())
    if (b.side(u) == b.side(v)) return false;
  return true;
}

/// Deterministic two-coloring: components are scanned in ascending order of
/// their minimum node, which is assigned U (isolated nodes therefore land in U).
/// Throws OddCycleError naming an offending odd closed walk otherwise.
inline Bipartition bipartition(const Graph& g) {
  const int n = g.node_count();
  Bipartition b;
  b.side_of.assign(static_cast<size_t>(n), Side::U);
  std::vector<int> color(static_cast<size_t>(n), -1);
  std::vector<int> parent(static_cast<size_t>(n), -1);
  for (int root = 0; root < n; ++root) {
    if (color[static_cast<size_t>(root)] != -1) continue;
    color[static_cast<size_t>(root)] = 0;
    std::queue<int> queue;
    queue.push(root);
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop();
      for (int v : g.neighbors(u)) {
        if (color[static_cast<size_t>(v)] == -1) {
          color[static_cast<size_t>(v)] = 1 - color[static_cast<size_t>(u)];
          parent[static_cast<size_t>(v)] = u;
          queue.push(v);
        } else if (color[static_cast<size_t>(v)] == color[static_cast<size_t>(u)]) {
          // Join the two root paths of u and v into an odd closed walk.
          std::vector<int> up, vp;
          for (int x = u; x != -1; x = parent[static_cast<size_t>(x)]) up.push_back(x);
          for (int x = v; x != -1; x = parent[static_cast<size_t>(x)]) vp.push_back(x);
          std::reverse(up.begin(), up.end());
          std::vector<int> walk = up;
          walk.insert(walk.end(), vp.begin(), vp.end());
          throw OddCycleError("graph is not bipartite: odd closed walk through edge (" +
                                  std::to_string(u) + "," + std::to_string(v) + ")",
                              std::move(walk));
        }
      }
    }
  }
  for (int v = 0; v < n; ++v)
    b.side_of[static_cast<size_t>(v)] = color[static_cast<size_t>(v)] == 0 ? Side::U : Side::W;
  return b;
}

/// Per-side node degrees, each sorted non-increasing.
struct DegreeSequences {
  std::vector<int> u_side;
  std::vector<int> w_side;
};

inline DegreeSequences degree_sequences(const Graph& g, const Bipartition& b) {
  DegreeSequences ds;
  for (int v = 0; v < g.node_count(); ++v)
    (b.side(v) == Side::U ? ds.u_side : ds.w_side).push_back(g.degree(v));
  std::sort(ds.u_side.begin(), ds.u_side.end(), std::greater<int>());
  std::sort(ds.w_side.begin(), ds.w_side.end(), std::greater<int>());
  return ds;
}

struct RegularityClass {
  enum class Kind { BiRegular, HalfRegular, Irregular };

  Kind kind = Kind::Irregular;
  int degree_u = -1;       // set for bi-regular
  int degree_w = -1;       // set for bi-regular
  Side regular_side = Side::U;  // set for half-regular
  int degree = -1;         // set for half-regular
};

/// Bi-regular iff both sides are degree-constant, half-regular iff exactly one
/// is. An empty side counts as constant with degree 0.
inline RegularityClass classify_regularity(const DegreeSequences& ds) {
  auto constant = [](const std::vector<int>& side) {
    return side.empty() || side.front() == side.back();  // sorted, so ends suffice
  };
  auto side_degree = [](const std::vector<int>& side) { return side.empty() ? 0 : side.front(); };
  const bool u_const = constant(ds.u_side);
  const bool w_const = constant(ds.w_side);
  RegularityClass rc;
  if (u_const && w_const) {
    rc.kind = RegularityClass::Kind::BiRegular;
    rc.degree_u = side_degree(ds.u_side);
    rc.degree_w = side_degree(ds.w_side);
  } else if (u_const || w_const) {
    rc.kind = RegularityClass::Kind::HalfRegular;
    rc.regular_side = u_const ? Side::U : Side::W;
    rc.degree = side_degree(u_const ? ds.u_side : ds.w_side);
  }
  return rc;
}

/// Exact girth by breadth-first search from every node; nullopt for forests.
/// O(|V||E|), fine at the few hundred nodes this toolkit targets.
inline std::optional<int> girth(const Graph& g) {
  const int n = g.node_count();
  int best = -1;
  std::vector<int> dist(static_cast<size_t>(n));
  std::vector<int> parent(static_cast<size_t>(n));
  for (int root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), -1);
    std::fill(parent.begin(), parent.end(), -1);
    dist[static_cast<size_t>(root)] = 0;
    std::queue<int> queue;
    queue.push(root);
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop();
      if (best != -1 && 2 * dist[static_cast<size_t>(u)] >= best) break;
      for (int v : g.neighbors(u)) {
        if (dist[static_cast<size_t>(v)] == -1) {
          dist[static_cast<size_t>(v)] = dist[static_cast<size_t>(u)] + 1;
          parent[static_cast<size_t>(v)] = u;
          queue.push(v);
        } else if (v != parent[static_cast<size_t>(u)]) {
          // Non-tree edge closes a walk of this length through the root; the
          // minimum over all roots is exactly the girth.
          int len = dist[static_cast<size_t>(u)] + dist[static_cast<size_t>(v)] + 1;
          if (best == -1 || len < best) best = len;
        }
      }
    }
  }
  if (best == -1) return std::nullopt;
  return best;
}

/// Components as node sets, ordered by their minimum node; empty for n = 0.
inline std::vector<std::vector<int>> connected_components(const Graph& g) {
  const int n = g.node_count();
  std::vector<bool> seen(static_cast<size_t>(n), false);
  std::vector<std::vector<int>> components;
  for (int root = 0; root < n; ++root) {
    if (seen[static_cast<size_t>(root)]) continue;
    std::vector<int> comp;
    std::queue<int> queue;
    seen[static_cast<size_t>(root)] = true;
    queue.push(root);
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop();
      comp.push_back(u);
      for (int v : g.neighbors(u)) {
        if (!seen[static_cast<size_t>(v)]) {
          seen[static_cast<size_t>(v)] = true;
          queue.push(v);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    components.push_back(std::move(comp));
  }
  return components;
}

/// Path with n nodes labeled 0-1-...-(n-1).
inline Graph path_graph(int n) {
  if (n < 1) throw std::invalid_argument("path_graph: need n >= 1");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(n, std::move(edges));
}

/// Cycle with n nodes labeled as the ring 0-1-...-(n-1)-0.
inline Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle_graph: need n >= 3");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  edges.emplace_back(0, n - 1);
  return Graph(n, std::move(edges));
}

/// K_{a,b} with the a-side on 0..a-1 and the b-side on a..a+b-1.
inline Graph complete_bipartite(int a, int b) {
  if (a < 1 || b < 1) throw std::invalid_argument("complete_bipartite: need a,b >= 1");
  std::vector<Edge> edges;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) edges.emplace_back(i, a + j);
  return Graph(a + b, std::move(edges));
}

/// The Heawood graph in its standard circular drawing: nodes 0..13 on a ring
/// with edges i-(i+1 mod 14), plus the seven chords i-(i+5 mod 14) for even i
/// (LCF notation [5,-5]^7). 3-regular bipartite (even/odd sides), girth 6.
/// This labeling is frozen; ring edges are the "circumferential" ones.
inline Graph heawood() {
  std::vector<Edge> edges;
  for (int i = 0; i < 14; ++i) edges.emplace_back(i, (i + 1) % 14);
  for (int i = 0; i < 14; i += 2) edges.emplace_back(i, (i + 5) % 14);
  return Graph(14, std::move(edges));
}

}  // namespace cospec
