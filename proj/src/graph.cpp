#include "ising/graph.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <tuple>
#include <unordered_map>

#include "ising/error.hpp"
#include "ising/rng.hpp"

namespace ising {

WeightedGraph::WeightedGraph(int n) {
  if (n < 0) throw ParameterError("vertex count must be nonnegative");
  adjacency_.resize(n);
  fields_.resize(n);
}

void WeightedGraph::add_edge(Vertex u, Vertex v, double beta) {
  if (!valid(u) || !valid(v)) {
    throw ParameterError("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                         ") references a missing vertex");
  }
  if (u == v) throw ParameterError("self-loop at vertex " + std::to_string(u));
  if (!(beta >= 0.0) || !std::isfinite(beta)) {
    throw ParameterError("coupling must be finite and >= 0");
  }
  auto insert = [](std::vector<Neighbor>& list, Vertex w, double b) {
    auto it = std::lower_bound(list.begin(), list.end(), w,
                               [](const Neighbor& a, Vertex x) { return a.v < x; });
    if (it != list.end() && it->v == w) return false;
    list.insert(it, Neighbor{w, b});
    return true;
  };
  if (!insert(adjacency_[u], v, beta)) {
    throw ParameterError("duplicate edge (" + std::to_string(u) + ", " + std::to_string(v) + ")");
  }
  insert(adjacency_[v], u, beta);
  ++num_edges_;
}

bool WeightedGraph::has_edge(Vertex u, Vertex v) const {
  const auto& list = adjacency_[u];
  auto it = std::lower_bound(list.begin(), list.end(), v,
                             [](const Neighbor& a, Vertex x) { return a.v < x; });
  return it != list.end() && it->v == v;
}

double WeightedGraph::coupling(Vertex u, Vertex v) const {
  const auto& list = adjacency_[u];
  auto it = std::lower_bound(list.begin(), list.end(), v,
                             [](const Neighbor& a, Vertex x) { return a.v < x; });
  return (it != list.end() && it->v == v) ? it->beta : 0.0;
}

int WeightedGraph::max_degree() const {
  int d = 0;
  for (const auto& list : adjacency_) d = std::max(d, static_cast<int>(list.size()));
  return d;
}

void WeightedGraph::set_all_couplings(double beta) {
  if (!(beta >= 0.0) || !std::isfinite(beta)) {
    throw ParameterError("coupling must be finite and >= 0");
  }
  for (auto& list : adjacency_)
    for (auto& nb : list) nb.beta = beta;
}

double WeightedGraph::max_coupling() const {
  double b = 0.0;
  for (const auto& list : adjacency_)
    for (const auto& nb : list) b = std::max(b, nb.beta);
  return b;
}

std::vector<Edge> WeightedGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges_);
  for (Vertex u = 0; u < num_vertices(); ++u)
    for (const auto& nb : adjacency_[u])
      if (u < nb.v) out.push_back({u, nb.v, nb.beta});
  return out;
}

bool WeightedGraph::is_connected() const {
  const int n = num_vertices();
  if (n <= 1) return true;
  std::vector<char> seen(n, 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    Vertex u = stack.back();
    stack.pop_back();
    for (const auto& nb : adjacency_[u]) {
      if (!seen[nb.v]) {
        seen[nb.v] = 1;
        ++count;
        stack.push_back(nb.v);
      }
    }
  }
  return count == n;
}

// ---------------------------------------------------------------------------

RootedTree::RootedTree(int root_label)
    : parent_{-1}, children_(1), depth_{0}, label_{root_label} {}

int RootedTree::add_child(int parent, int label) {
  if (parent < 0 || parent >= size()) throw ParameterError("parent node does not exist");
  const int id = size();
  parent_.push_back(parent);
  children_.emplace_back();
  children_[parent].push_back(id);
  depth_.push_back(depth_[parent] + 1);
  label_.push_back(label);
  height_ = std::max(height_, depth_.back());
  return id;
}

int RootedTree::count_at_depth(int d) const {
  return static_cast<int>(std::count(depth_.begin(), depth_.end(), d));
}

std::vector<int> RootedTree::nodes_at_depth(int d) const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i)
    if (depth_[i] == d) out.push_back(i);
  return out;
}

WeightedGraph RootedTree::to_graph(std::span<const double> coupling) const {
  WeightedGraph g(size());
  for (int c = 1; c < size(); ++c) {
    const double b = coupling.size() == 1 ? coupling[0] : coupling[c];
    g.add_edge(parent_[c], c, b);
  }
  return g;
}

// ---------------------------------------------------------------------------

WeightedGraph generate_erdos_renyi(const ErdosRenyiParams& p) {
  if (p.n < 1) throw ParameterError("n must be >= 1");
  if (!(p.mean_degree >= 0.0) || p.mean_degree > p.n) {
    throw ParameterError("mean degree d must satisfy 0 <= d <= n");
  }
  WeightedGraph g(p.n);
  const double prob = p.mean_degree / p.n;
  auto rng = CounterRng::stream(p.seed, "erdos-renyi");
  for (Vertex u = 0; u < p.n; ++u)
    for (Vertex v = u + 1; v < p.n; ++v)
      if (rng.uniform() < prob) g.add_edge(u, v, p.beta);
  return g;
}

int poisson_inverse(double mean, double u) {
  if (!(mean >= 0.0) || mean > 30.0) throw ParameterError("Poisson mean must lie in [0, 30]");
  double term = std::exp(-mean);
  double cdf = term;
  int k = 0;
  // The cap only guards against round-off when u is within ~1e-16 of 1.
  while (u > cdf && k < 1000) {
    ++k;
    term *= mean / k;
    cdf += term;
    if (term == 0.0 && k > mean) break;
  }
  return k;
}

RootedTree generate_galton_watson(double d, int depth, std::uint64_t seed,
                                  std::size_t node_budget) {
  if (!(d > 0.0)) throw ParameterError("Galton-Watson mean must be > 0");
  if (depth < 0) throw ParameterError("depth must be >= 0");
  RootedTree t;
  auto rng = CounterRng::stream(seed, "galton-watson");
  for (int node = 0; node < t.size(); ++node) {
    if (t.depth(node) >= depth) continue;
    const int kids = poisson_inverse(d, rng.uniform());
    if (static_cast<std::size_t>(t.size()) + kids > node_budget) {
      throw BudgetError("Galton-Watson tree exceeds node budget");
    }
    for (int k = 0; k < kids; ++k) t.add_child(node);
  }
  return t;
}

// ---------------------------------------------------------------------------

Ball ball(const WeightedGraph& g, Vertex v, int radius) {
  if (!g.valid(v)) throw ParameterError("ball center is not a vertex");
  if (radius < 0) throw ParameterError("ball radius must be >= 0");
  Ball b;
  b.center = v;
  b.radius = radius;

  std::unordered_map<Vertex, int> local;
  std::vector<Vertex> level{v};
  local.emplace(v, 0);
  b.vertices.push_back(v);
  b.distance.push_back(0);
  for (int k = 0; k < radius && !level.empty(); ++k) {
    std::vector<Vertex> next;
    for (Vertex u : level)
      for (const auto& nb : g.neighbors(u))
        if (local.emplace(nb.v, -1).second) next.push_back(nb.v);
    std::sort(next.begin(), next.end());
    for (Vertex w : next) {
      local[w] = static_cast<int>(b.vertices.size());
      b.vertices.push_back(w);
      b.distance.push_back(k + 1);
    }
    level = std::move(next);
  }

  b.local = WeightedGraph(static_cast<int>(b.vertices.size()));
  for (int i = 0; i < static_cast<int>(b.vertices.size()); ++i) {
    const Vertex u = b.vertices[i];
    b.local.set_field(i, g.field(u));
    if (b.distance[i] == radius) b.sphere.push_back(u);
    for (const auto& nb : g.neighbors(u)) {
      if (u >= nb.v) continue;
      auto it = local.find(nb.v);
      if (it == local.end()) continue;
      b.edges.push_back({u, nb.v, nb.beta});
      b.local.add_edge(i, it->second, nb.beta);
    }
  }
  std::sort(b.edges.begin(), b.edges.end(),
            [](const Edge& x, const Edge& y) { return std::tie(x.u, x.v) < std::tie(y.u, y.v); });
  std::sort(b.sphere.begin(), b.sphere.end());
  return b;
}

SpanningTree bfs_spanning_tree(const Ball& b) {
  const int size = static_cast<int>(b.vertices.size());
  SpanningTree out{RootedTree(b.vertices.front()), {}};
  std::vector<int> node_of(size, -1);
  std::vector<int> parent(size, -1);
  node_of[0] = 0;
  // Local ids are ordered by (distance, global id), which is exactly the
  // order in which the level-by-level construction expands vertices.
  for (int i = 0; i < size; ++i) {
    if (node_of[i] < 0) throw InvariantFailure("ball is not connected");
    if (b.distance[i] >= b.radius) continue;
    for (const auto& nb : b.local.neighbors(i)) {
      if (node_of[nb.v] >= 0) continue;
      node_of[nb.v] = out.tree.add_child(node_of[i], b.vertices[nb.v]);
      parent[nb.v] = i;
    }
  }
  for (int i = 0; i < size; ++i)
    for (const auto& nb : b.local.neighbors(i)) {
      if (i >= nb.v) continue;
      if (parent[nb.v] == i || parent[i] == nb.v) continue;
      Vertex u = b.vertices[i], w = b.vertices[nb.v];
      if (u > w) std::swap(u, w);
      out.extra_edges.push_back({u, w, nb.beta});
    }
  std::sort(out.extra_edges.begin(), out.extra_edges.end(),
            [](const Edge& x, const Edge& y) { return std::tie(x.u, x.v) < std::tie(y.u, y.v); });
  return out;
}

long tree_excess(const Ball& b) {
  return static_cast<long>(b.edges.size()) - static_cast<long>(b.vertices.size()) + 1;
}

long path_density(const Ball& b, int length, std::size_t budget) {
  if (length < 0) throw ParameterError("path length cap must be >= 0");
  const WeightedGraph& g = b.local;
  struct Frame {
    Vertex v;
    std::size_t next;
  };
  std::vector<char> on_path(g.num_vertices(), 0);
  std::vector<Frame> stack{{0, 0}};
  on_path[0] = 1;
  long sum = g.degree(0);
  long best = sum;
  std::size_t visits = 1;
  while (!stack.empty()) {
    const std::size_t top = stack.size() - 1;
    const Vertex v = stack[top].v;
    const auto nbrs = g.neighbors(v);
    if (static_cast<int>(top) < length && stack[top].next < nbrs.size()) {
      const Vertex w = nbrs[stack[top].next++].v;
      if (on_path[w]) continue;
      if (++visits > budget) {
        throw BudgetError("path density DFS exceeded budget of " + std::to_string(budget) +
                          " visits around vertex " + std::to_string(b.center));
      }
      on_path[w] = 1;
      sum += g.degree(w);
      best = std::max(best, sum);
      stack.push_back({w, 0});
    } else {
      on_path[v] = 0;
      sum -= g.degree(v);
      stack.pop_back();
    }
  }
  return best;
}

long tree_path_density(const RootedTree& t) {
  std::vector<long> best(t.size(), 0);
  for (int node = t.size() - 1; node >= 0; --node) {
    long below = 0;
    for (int c : t.children(node)) below = std::max(below, best[c]);
    best[node] = t.degree(node) + below;
  }
  return best[RootedTree::root()];
}

// ---------------------------------------------------------------------------

WeightedGraph path_graph(int n, double beta) {
  WeightedGraph g(n);
  for (Vertex v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1, beta);
  return g;
}

WeightedGraph cycle_graph(int n, double beta) {
  if (n < 3) throw ParameterError("a cycle needs at least 3 vertices");
  WeightedGraph g = path_graph(n, beta);
  g.add_edge(n - 1, 0, beta);
  return g;
}

WeightedGraph complete_graph(int n, double beta) {
  WeightedGraph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v, beta);
  return g;
}

WeightedGraph star_graph(int leaves, double beta) {
  WeightedGraph g(leaves + 1);
  for (Vertex v = 1; v <= leaves; ++v) g.add_edge(0, v, beta);
  return g;
}

}  // namespace ising
