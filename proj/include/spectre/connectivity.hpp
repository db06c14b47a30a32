#pragma once

#include <queue>
#include <vector>

#include "spectre/graph.hpp"

namespace spectre {

/// Unweighted neighbor lists; loops and duplicate edges are dropped since
/// hop metrics ignore them.
inline std::vector<std::vector<Index>> neighbor_lists(const Graph& g) {
  std::vector<std::vector<Index>> adj(g.order());
  for (const auto& e : g.edges()) {
    if (e.u == e.v) continue;
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  for (auto& nb : adj) {
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
  }
  return adj;
}

/// BFS hop distances from source; unreachable vertices get -1.
inline std::vector<long> bfs_distances(const std::vector<std::vector<Index>>& adj, Index source) {
  std::vector<long> dist(adj.size(), -1);
  std::queue<Index> q;
  dist[source] = 0;
  q.push(source);
  while (!q.empty()) {
    const Index v = q.front();
    q.pop();
    for (Index u : adj[v]) {
      if (dist[u] < 0) {
        dist[u] = dist[v] + 1;
        q.push(u);
      }
    }
  }
  return dist;
}

inline bool is_connected(const Graph& g) {
  if (g.order() <= 1) return true;
  const auto dist = bfs_distances(neighbor_lists(g), 0);
  return std::none_of(dist.begin(), dist.end(), [](long d) { return d < 0; });
}

/// BFS 2-coloring. Loops are ignored unless strict_loops is set, in which
/// case any nonzero loop weight disqualifies.
inline bool is_bipartite(const Graph& g, bool strict_loops = false) {
  if (strict_loops) {
    for (const auto& e : g.edges())
      if (e.u == e.v && e.w != 0.0) return false;
  }
  const auto adj = neighbor_lists(g);
  std::vector<int> color(g.order(), -1);
  for (Index s = 0; s < g.order(); ++s) {
    if (color[s] >= 0) continue;
    color[s] = 0;
    std::queue<Index> q;
    q.push(s);
    while (!q.empty()) {
      const Index v = q.front();
      q.pop();
      for (Index u : adj[v]) {
        if (color[u] < 0) {
          color[u] = 1 - color[v];
          q.push(u);
        } else if (color[u] == color[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace spectre
