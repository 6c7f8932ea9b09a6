#pragma once

// Brute-force reference computations for the tests. Deliberately naive and
// independent of the library code paths they check.

#include <cmath>
#include <cstdint>
#include <queue>
#include <vector>

#include "ising/graph.hpp"

namespace oracle {

struct Model {
  int n = 0;
  std::vector<ising::Edge> edges;
  std::vector<double> h;
  std::vector<int> pin;  // 0 free, +1 / -1 pinned
};

inline Model from_graph(const ising::WeightedGraph& g) {
  Model m;
  m.n = g.num_vertices();
  m.edges = g.edges();
  for (int v = 0; v < m.n; ++v) {
    m.h.push_back(g.field(v).h);
    m.pin.push_back(g.field(v).spin());
  }
  return m;
}

inline int spin_of(std::uint64_t mask, int v) { return (mask >> v) & 1U ? 1 : -1; }

inline double weight(const Model& m, std::uint64_t mask) {
  double e = 0.0;
  for (const auto& ed : m.edges) e += ed.beta * spin_of(mask, ed.u) * spin_of(mask, ed.v);
  for (int v = 0; v < m.n; ++v) e += m.h[v] * spin_of(mask, v);
  return std::exp(e);
}

inline bool allowed(const Model& m, std::uint64_t mask, const std::vector<int>& cond) {
  for (int v = 0; v < m.n; ++v) {
    if (m.pin[v] && spin_of(mask, v) != m.pin[v]) return false;
    if (!cond.empty() && cond[v] && spin_of(mask, v) != cond[v]) return false;
  }
  return true;
}

/// Gibbs law indexed by mask, vertex 0 least significant.
inline std::vector<double> distribution(const Model& m) {
  std::vector<double> p(std::size_t{1} << m.n, 0.0);
  double z = 0.0;
  for (std::uint64_t s = 0; s < p.size(); ++s) {
    if (!allowed(m, s, {})) continue;
    p[s] = weight(m, s);
    z += p[s];
  }
  for (auto& x : p) x /= z;
  return p;
}

/// P(sigma_v = + | cond), cond[u] in {-1, 0, +1}.
inline double marginal(const Model& m, int v, const std::vector<int>& cond) {
  double up = 0.0, z = 0.0;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << m.n); ++s) {
    if (!allowed(m, s, cond)) continue;
    const double w = weight(m, s);
    z += w;
    if (spin_of(s, v) > 0) up += w;
  }
  return up / z;
}

inline std::vector<int> bfs_distances(const ising::WeightedGraph& g, int v) {
  std::vector<int> dist(g.num_vertices(), -1);
  std::queue<int> q;
  dist[v] = 0;
  q.push(v);
  while (!q.empty()) {
    const int u = q.front();
    q.pop();
    for (int w = 0; w < g.num_vertices(); ++w) {
      if (g.has_edge(u, w) && dist[w] < 0) {
        dist[w] = dist[u] + 1;
        q.push(w);
      }
    }
  }
  return dist;
}

/// Count of self-avoiding walks from v with exactly k steps, plus the
/// cycle-closing ones (walks whose last step lands on an earlier vertex
/// other than the one just left).
inline void count_walks(const ising::WeightedGraph& g, std::vector<int>& walk,
                        std::vector<long>& per_depth, int max_depth) {
  const int here = walk.back();
  const int depth = static_cast<int>(walk.size()) - 1;
  ++per_depth[depth];
  if (depth == max_depth) return;
  const int prev = depth > 0 ? walk[walk.size() - 2] : -1;
  for (const auto& nb : g.neighbors(here)) {
    if (nb.v == prev) continue;
    bool seen = false;
    for (int x : walk) seen = seen || x == nb.v;
    if (seen) {
      ++per_depth[depth + 1];
      continue;
    }
    walk.push_back(nb.v);
    count_walks(g, walk, per_depth, max_depth);
    walk.pop_back();
  }
}

inline std::vector<long> saw_level_counts(const ising::WeightedGraph& g, int v, int depth) {
  std::vector<long> per_depth(depth + 1, 0);
  std::vector<int> walk{v};
  count_walks(g, walk, per_depth, depth);
  return per_depth;
}

}  // namespace oracle
