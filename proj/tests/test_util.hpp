#pragma once

#include <bit>
#include <map>
#include <random>
#include <utility>
#include <vector>

#include "cospec/graph.hpp"

namespace cospec::testing {

// Independent cycle-census oracle: enumerate node subsets and count the
// Hamiltonian cycles of each induced subgraph. Deliberately structured
// nothing like the census search (subset-first instead of path-growth);
// only usable for small n.
inline std::map<int, long long> subset_hamiltonicity_census(const Graph& g, int max_len) {
  const int n = g.node_count();
  std::map<int, long long> counts;
  if (n < 3) return counts;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    int size = std::popcount(mask);
    if (size < 3 || size > max_len) continue;
    std::vector<int> nodes;
    for (int v = 0; v < n; ++v)
      if (mask & (1u << v)) nodes.push_back(v);
    const int start = nodes[0];
    long long found = 0;
    std::vector<int> path{start};
    std::vector<bool> used(static_cast<size_t>(n), false);
    used[static_cast<size_t>(start)] = true;
    auto dfs = [&](auto&& self, int current) -> void {
      if (static_cast<int>(path.size()) == size) {
        if (g.has_edge(current, start) && path[1] < path.back()) ++found;
        return;
      }
      for (int v : g.neighbors(current)) {
        if (!(mask & (1u << v)) || used[static_cast<size_t>(v)]) continue;
        used[static_cast<size_t>(v)] = true;
        path.push_back(v);
        self(self, v);
        path.pop_back();
        used[static_cast<size_t>(v)] = false;
      }
    };
    dfs(dfs, start);
    if (found > 0) counts[size] += found;
  }
  return counts;
}

/// Erdos-Renyi-style random simple graph, deterministic for a fixed seed.
inline Graph random_graph(int n, double p, std::mt19937& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) edges.emplace_back(u, v);
  return Graph(n, std::move(edges));
}

/// Random bipartite graph on a + b nodes (sides 0..a-1 and a..a+b-1).
inline Graph random_bipartite(int a, int b, double p, std::mt19937& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v)
      if (coin(rng)) edges.emplace_back(u, a + v);
  return Graph(a + b, std::move(edges));
}

/// Relabels g by a permutation: node v becomes perm[v].
inline Graph permuted(const Graph& g, const std::vector<int>& perm) {
  std::vector<Edge> edges;
  edges.reserve(g.edges().size());
  for (auto [u, v] : g.edges())
    edges.emplace_back(perm[static_cast<size_t>(u)], perm[static_cast<size_t>(v)]);
  return Graph(g.node_count(), std::move(edges));
}

}  // namespace cospec::testing
