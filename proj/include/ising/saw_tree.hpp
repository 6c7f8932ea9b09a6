#pragma once

#include <cstddef>
#include <iosfwd>
#include <vector>

#include "ising/graph.hpp"
#include "ising/model.hpp"

namespace ising {

inline constexpr std::size_t default_saw_budget = 10'000'000;

/// Tree of self-avoiding walks from a root vertex, truncated at depth L.
///
/// Node labels are original vertex ids. A walk that steps onto a vertex w it
/// already visited becomes a leaf in the fixed set A: it is pinned + when the
/// closing neighbor of w has a larger id than the neighbor through which the
/// walk first left w, and - otherwise. With these pins and L >= n the root
/// marginal equals the graph marginal, under any conditioning that is copied
/// onto every node of the conditioned vertices.
struct SawTree {
  RootedTree tree;
  std::vector<double> coupling;  // edge to parent, per node
  std::vector<Pin> cycle_pin;    // Free unless the node is in A
  int depth_cap = 0;

  int size() const noexcept { return tree.size(); }
  Vertex root_vertex() const { return tree.label(RootedTree::root()); }
  std::vector<int> fixed_set() const;
  /// Nodes at depth == depth_cap that are not in A.
  std::vector<int> truncation_boundary() const;
};

/// How the free depth-L frontier is treated when evaluating a marginal.
enum class Boundary { Free, Plus, Minus };

/// Throws BudgetError when more than `budget` nodes would be created.
SawTree build_saw_tree(const WeightedGraph& g, Vertex v, int depth,
                       std::size_t budget = default_saw_budget);

/// Nodes per depth 0..L, without materializing the tree.
std::vector<std::size_t> saw_level_counts(const WeightedGraph& g, Vertex v, int depth,
                                          std::size_t budget = default_saw_budget);
std::size_t saw_tree_size(const WeightedGraph& g, Vertex v, int depth,
                          std::size_t budget = default_saw_budget);

/// Root marginal of a prebuilt tree. Every copy of a vertex assigned in
/// `cond` (or pinned in the model) is pinned to that spin, which takes
/// precedence over the A pin; remaining A nodes carry their cycle pins.
double saw_marginal(const IsingModel& m, const SawTree& t, const PartialConfig& cond,
                    Boundary boundary = Boundary::Free);

/// Builds the tree for (v, L) and evaluates it with a free frontier.
double saw_marginal(const IsingModel& m, Vertex v, int depth, const PartialConfig& cond,
                    std::size_t budget = default_saw_budget);

struct MarginalBracket {
  double lower = 0.0;  // frontier pinned -
  double free = 0.0;
  double upper = 0.0;  // frontier pinned +
  double width() const noexcept { return upper - lower; }
};
MarginalBracket saw_bracket(const IsingModel& m, const SawTree& t, const PartialConfig& cond);

/// One line per node in pre-order: two spaces per depth level, the original
/// vertex, then the pin state (free, A+, A-, frontier).
void dump_saw_tree(std::ostream& out, const SawTree& t);

}  // namespace ising
