#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace ising {

using Vertex = std::int32_t;

// Tri-state vertex field. A pinned vertex has its spin fixed; `h` is kept
// but only contributes a constant to the log weight.
enum class Pin : std::int8_t { Minus = -1, Free = 0, Plus = 1 };

struct VertexField {
  double h = 0.0;
  Pin pin = Pin::Free;

  bool pinned() const noexcept { return pin != Pin::Free; }
  int spin() const noexcept { return static_cast<int>(pin); }
  static VertexField pinned_to(int spin, double h = 0.0) noexcept {
    return {h, spin > 0 ? Pin::Plus : Pin::Minus};
  }
};

struct Neighbor {
  Vertex v;
  double beta;
};

struct Edge {
  Vertex u;
  Vertex v;
  double beta;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Undirected graph with nonnegative couplings on edges and a field per vertex.
/// Adjacency lists are kept sorted by neighbor id.
class WeightedGraph {
 public:
  WeightedGraph() = default;
  explicit WeightedGraph(int n);

  int num_vertices() const noexcept { return static_cast<int>(adjacency_.size()); }
  std::size_t num_edges() const noexcept { return num_edges_; }

  /// Throws ParameterError on self-loops, duplicates, negative beta or bad ids.
  void add_edge(Vertex u, Vertex v, double beta);
  bool has_edge(Vertex u, Vertex v) const;
  double coupling(Vertex u, Vertex v) const;  // 0 when absent

  std::span<const Neighbor> neighbors(Vertex v) const { return adjacency_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adjacency_[v].size()); }
  int max_degree() const;

  const VertexField& field(Vertex v) const { return fields_[v]; }
  void set_field(Vertex v, VertexField f) { fields_[v] = f; }
  void set_h(Vertex v, double h) { fields_[v].h = h; }
  std::span<const VertexField> fields() const { return fields_; }

  void set_all_couplings(double beta);
  double max_coupling() const;

  /// Edges with u < v, sorted lexicographically.
  std::vector<Edge> edges() const;

  bool valid(Vertex v) const noexcept { return v >= 0 && v < num_vertices(); }
  bool is_connected() const;

 private:
  std::vector<std::vector<Neighbor>> adjacency_;
  std::vector<VertexField> fields_;
  std::size_t num_edges_ = 0;
};

/// Rooted tree. Node 0 is the root and every parent id is smaller than its
/// children's ids, so a reverse sweep over node ids is a post-order.
class RootedTree {
 public:
  explicit RootedTree(int root_label = -1);

  int add_child(int parent, int label = -1);

  int size() const noexcept { return static_cast<int>(parent_.size()); }
  static constexpr int root() noexcept { return 0; }
  int parent(int node) const { return parent_[node]; }
  std::span<const int> children(int node) const { return children_[node]; }
  int depth(int node) const { return depth_[node]; }
  int label(int node) const { return label_[node]; }
  int degree(int node) const {
    return static_cast<int>(children_[node].size()) + (node == root() ? 0 : 1);
  }
  int height() const noexcept { return height_; }
  int count_at_depth(int d) const;
  std::vector<int> nodes_at_depth(int d) const;

  /// Tree as a graph on node ids; `coupling[c]` is the weight of the edge
  /// from c to its parent (a single value is used when the span has size 1).
  WeightedGraph to_graph(std::span<const double> coupling) const;

 private:
  std::vector<int> parent_;
  std::vector<std::vector<int>> children_;
  std::vector<int> depth_;
  std::vector<int> label_;
  int height_ = 0;
};

/// Neighborhood ball B(v, l). `local` is the induced subgraph with local ids
/// in level-sorted BFS order (center is local 0); `vertices[i]` is the global
/// id of local vertex i.
struct Ball {
  Vertex center = 0;
  int radius = 0;
  std::vector<Vertex> vertices;
  std::vector<int> distance;  // per local vertex
  std::vector<Edge> edges;    // global ids, u < v, sorted
  std::vector<Vertex> sphere; // global ids at distance == radius, ascending
  WeightedGraph local;
};

struct SpanningTree {
  RootedTree tree;                // labels are global vertex ids
  std::vector<Edge> extra_edges;  // ball edges not in the tree
};

struct ErdosRenyiParams {
  int n = 0;
  double mean_degree = 0.0;
  std::uint64_t seed = 0;
  double beta = 1.0;  // constant coupling assigned to every edge
};

WeightedGraph generate_erdos_renyi(const ErdosRenyiParams& p);
inline WeightedGraph generate_erdos_renyi(int n, double d, std::uint64_t seed, double beta = 1.0) {
  return generate_erdos_renyi(ErdosRenyiParams{n, d, seed, beta});
}

/// Poisson(mean) by sequential-search inversion of one uniform. mean <= 30.
int poisson_inverse(double mean, double u);

/// Galton-Watson tree with Poisson(d) offspring, truncated at `depth`.
/// Throws BudgetError when the tree would exceed `node_budget` nodes.
RootedTree generate_galton_watson(double d, int depth, std::uint64_t seed,
                                  std::size_t node_budget = 10'000'000);

Ball ball(const WeightedGraph& g, Vertex v, int radius);
SpanningTree bfs_spanning_tree(const Ball& b);
long tree_excess(const Ball& b);

inline constexpr std::size_t default_path_budget = 10'000'000;

/// Max over self-avoiding paths from the ball center with at most `length`
/// edges of the sum of ball degrees along the path. Exhaustive DFS.
long path_density(const Ball& b, int length, std::size_t budget = default_path_budget);

/// Max over downward root paths of the sum of node degrees.
long tree_path_density(const RootedTree& t);

// Small fixed graphs used by tests and the CLI.
WeightedGraph path_graph(int n, double beta = 1.0);
WeightedGraph cycle_graph(int n, double beta = 1.0);
WeightedGraph complete_graph(int n, double beta = 1.0);
WeightedGraph star_graph(int leaves, double beta = 1.0);  // center is vertex 0

// Text graph format: "n m", m lines "u v beta", n lines "v h". Pinned fields
// are written as +inf / -inf. '#' starts a comment.
WeightedGraph read_graph(std::istream& in);
void write_graph(std::ostream& out, const WeightedGraph& g);
WeightedGraph load_graph(const std::string& path);
void save_graph(const std::string& path, const WeightedGraph& g);

}  // namespace ising
