#include "ising/tree_engine.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ising/error.hpp"
#include "ising/model.hpp"

namespace ising {

namespace {

constexpr double tanh_guard = 1.0 - 1e-15;

double message(double beta, const VertexField& child, double child_field) {
  if (child.pinned()) return beta * child.spin();
  const double t = std::clamp(std::tanh(beta) * std::tanh(child_field), -tanh_guard, tanh_guard);
  return std::atanh(t);
}

}  // namespace

TreeModel::TreeModel(RootedTree t, double beta)
    : tree(std::move(t)), coupling(tree.size(), beta), field(tree.size()) {
  if (!(beta >= 0.0)) throw ParameterError("tree coupling must be >= 0");
}

TreeModel::TreeModel(RootedTree t, std::vector<double> c, std::vector<VertexField> f)
    : tree(std::move(t)), coupling(std::move(c)), field(std::move(f)) {
  if (static_cast<int>(coupling.size()) != tree.size() ||
      static_cast<int>(field.size()) != tree.size()) {
    throw ParameterError("tree model arrays must have one entry per node");
  }
  for (int c2 = 1; c2 < tree.size(); ++c2)
    if (!(coupling[c2] >= 0.0)) throw ParameterError("tree coupling must be >= 0");
}

WeightedGraph TreeModel::to_graph() const {
  WeightedGraph g = tree.to_graph(coupling);
  for (int v = 0; v < size(); ++v) g.set_field(v, field[v]);
  return g;
}

std::vector<double> cavity_fields(const RootedTree& t, std::span<const double> coupling,
                                  std::span<const VertexField> field) {
  std::vector<double> F(t.size(), 0.0);
  constexpr double inf = std::numeric_limits<double>::infinity();
  for (int u = t.size() - 1; u >= 0; --u) {
    const VertexField& f = field[u];
    if (f.pinned()) {
      F[u] = f.spin() * inf;
      continue;
    }
    double x = f.h;
    for (int c : t.children(u)) x += message(coupling[c], field[c], F[c]);
    F[u] = x;
  }
  return F;
}

std::vector<double> cavity_fields(const TreeModel& tm) {
  return cavity_fields(tm.tree, tm.coupling, tm.field);
}

double root_marginal(const RootedTree& t, std::span<const double> coupling,
                     std::span<const VertexField> field) {
  const VertexField& root = field[RootedTree::root()];
  if (root.pinned()) return root.pin == Pin::Plus ? 1.0 : 0.0;
  return logistic2(cavity_fields(t, coupling, field)[RootedTree::root()]);
}

double root_marginal(const TreeModel& tm) { return root_marginal(tm.tree, tm.coupling, tm.field); }

double boundary_influence(const TreeModel& tm, int l) {
  if (l < 0) throw ParameterError("boundary depth must be >= 0");
  std::vector<VertexField> pinned = tm.field;
  const auto sphere = tm.tree.nodes_at_depth(l);
  auto with_boundary = [&](Pin p) {
    for (int node : sphere)
      if (!tm.field[node].pinned()) pinned[node].pin = p;
    return root_marginal(tm.tree, tm.coupling, pinned);
  };
  const double up = with_boundary(Pin::Plus);
  const double down = with_boundary(Pin::Minus);
  return up - down;
}

double two_point_influence(const TreeModel& tm, int node) {
  std::vector<VertexField> pinned = tm.field;
  pinned[node].pin = Pin::Plus;
  const double up = root_marginal(tm.tree, tm.coupling, pinned);
  pinned[node].pin = Pin::Minus;
  return up - root_marginal(tm.tree, tm.coupling, pinned);
}

}  // namespace ising
