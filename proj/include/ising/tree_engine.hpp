#pragma once

#include <span>
#include <vector>

#include "ising/graph.hpp"

namespace ising {

/// Ising model on a rooted tree. `coupling[c]` is the weight of the edge from
/// node c to its parent (entry 0 is unused).
struct TreeModel {
  RootedTree tree;
  std::vector<double> coupling;
  std::vector<VertexField> field;

  TreeModel() = default;
  /// Uniform coupling, zero free fields.
  TreeModel(RootedTree t, double beta);
  TreeModel(RootedTree t, std::vector<double> coupling, std::vector<VertexField> field);

  int size() const noexcept { return tree.size(); }
  WeightedGraph to_graph() const;
};

/// Cavity field of every node: F_u = h_u + sum_c atanh(tanh(beta_uc) tanh(F_c)),
/// with a pinned child contributing exactly +-beta_uc. Pinned nodes get
/// +-infinity. One reverse sweep over node ids.
std::vector<double> cavity_fields(const RootedTree& t, std::span<const double> coupling,
                                  std::span<const VertexField> field);
std::vector<double> cavity_fields(const TreeModel& tm);

/// P(sigma_root = +).
double root_marginal(const RootedTree& t, std::span<const double> coupling,
                     std::span<const VertexField> field);
double root_marginal(const TreeModel& tm);

/// Root marginal with all depth-l nodes pinned + minus the same with them
/// pinned -. Nodes already pinned keep their pins.
double boundary_influence(const TreeModel& tm, int l);

/// P(root=+ | node=+) - P(root=+ | node=-).
double two_point_influence(const TreeModel& tm, int node);

}  // namespace ising
