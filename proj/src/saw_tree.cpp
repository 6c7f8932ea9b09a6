#include "ising/saw_tree.hpp"

#include <ostream>
#include <string>

#include "ising/error.hpp"
#include "ising/tree_engine.hpp"

namespace ising {

namespace {

// Depth-first enumeration of the self-avoiding walks from `root`. The
// visitor receives (parent node, depth, vertex, coupling, cycle pin) and
// returns the id of the created node.
template <typename Visitor>
void walk_tree(const WeightedGraph& g, Vertex root, int depth, std::size_t budget,
               Visitor&& add) {
  if (!g.valid(root)) throw ParameterError("SAW root is not a vertex");
  if (depth < 0) throw ParameterError("SAW depth must be >= 0");

  struct Frame {
    int node;
    Vertex v;
    std::size_t next;
  };
  std::vector<int> position(g.num_vertices(), -1);  // index in the current walk
  std::vector<Vertex> walk{root};
  std::vector<Frame> stack{{0, root, 0}};
  position[root] = 0;
  std::size_t created = 1;

  auto charge = [&] {
    if (++created > budget) {
      throw BudgetError("SAW tree from vertex " + std::to_string(root) + " exceeds budget of " +
                        std::to_string(budget) + " nodes");
    }
  };

  while (!stack.empty()) {
    Frame& top = stack.back();
    const int level = static_cast<int>(stack.size()) - 1;
    const auto nbrs = g.neighbors(top.v);
    if (level >= depth || top.next >= nbrs.size()) {
      position[top.v] = -1;
      walk.pop_back();
      stack.pop_back();
      continue;
    }
    const Neighbor nb = nbrs[top.next++];
    if (level > 0 && nb.v == walk[level - 1]) continue;  // the edge we arrived by
    const int parent = top.node;
    const Vertex here = top.v;
    if (position[nb.v] >= 0) {
      const Vertex departure = walk[position[nb.v] + 1];
      charge();
      add(parent, level + 1, nb.v, nb.beta, here > departure ? Pin::Plus : Pin::Minus);
      continue;
    }
    charge();
    const int node = add(parent, level + 1, nb.v, nb.beta, Pin::Free);
    position[nb.v] = level + 1;
    walk.push_back(nb.v);
    stack.push_back({node, nb.v, 0});
  }
}

}  // namespace

std::vector<int> SawTree::fixed_set() const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i)
    if (cycle_pin[i] != Pin::Free) out.push_back(i);
  return out;
}

std::vector<int> SawTree::truncation_boundary() const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i)
    if (tree.depth(i) == depth_cap && cycle_pin[i] == Pin::Free) out.push_back(i);
  return out;
}

SawTree build_saw_tree(const WeightedGraph& g, Vertex v, int depth, std::size_t budget) {
  SawTree t{RootedTree(v), {0.0}, {Pin::Free}, depth};
  walk_tree(g, v, depth, budget, [&](int parent, int, Vertex w, double beta, Pin pin) {
    t.coupling.push_back(beta);
    t.cycle_pin.push_back(pin);
    return t.tree.add_child(parent, w);
  });
  return t;
}

std::vector<std::size_t> saw_level_counts(const WeightedGraph& g, Vertex v, int depth,
                                          std::size_t budget) {
  std::vector<std::size_t> counts(static_cast<std::size_t>(depth < 0 ? 0 : depth) + 1, 0);
  counts[0] = 1;
  walk_tree(g, v, depth, budget, [&](int, int level, Vertex, double, Pin) {
    ++counts[level];
    return 0;
  });
  return counts;
}

std::size_t saw_tree_size(const WeightedGraph& g, Vertex v, int depth, std::size_t budget) {
  std::size_t total = 0;
  for (auto c : saw_level_counts(g, v, depth, budget)) total += c;
  return total;
}

namespace {

std::vector<VertexField> node_fields(const IsingModel& m, const SawTree& t,
                                     const PartialConfig& cond, Boundary boundary) {
  const WeightedGraph& g = m.graph();
  if (cond.size() != g.num_vertices()) throw ParameterError("conditioning has the wrong length");
  if (cond.assigned(t.root_vertex())) {
    throw ContractViolation("SAW root vertex " + std::to_string(t.root_vertex()) +
                            " is already conditioned");
  }
  std::vector<VertexField> fields(t.size());
  for (int i = 0; i < t.size(); ++i) {
    const Vertex x = t.tree.label(i);
    VertexField f = g.field(x);
    if (cond.assigned(x)) {
      f.pin = cond[x] > 0 ? Pin::Plus : Pin::Minus;
    } else if (!f.pinned() && t.cycle_pin[i] != Pin::Free) {
      f.pin = t.cycle_pin[i];
    } else if (!f.pinned() && boundary != Boundary::Free && t.tree.depth(i) == t.depth_cap) {
      f.pin = boundary == Boundary::Plus ? Pin::Plus : Pin::Minus;
    }
    fields[i] = f;
  }
  return fields;
}

}  // namespace

double saw_marginal(const IsingModel& m, const SawTree& t, const PartialConfig& cond,
                    Boundary boundary) {
  const auto fields = node_fields(m, t, cond, boundary);
  return root_marginal(t.tree, t.coupling, fields);
}

double saw_marginal(const IsingModel& m, Vertex v, int depth, const PartialConfig& cond,
                    std::size_t budget) {
  return saw_marginal(m, build_saw_tree(m.graph(), v, depth, budget), cond, Boundary::Free);
}

MarginalBracket saw_bracket(const IsingModel& m, const SawTree& t, const PartialConfig& cond) {
  return {saw_marginal(m, t, cond, Boundary::Minus), saw_marginal(m, t, cond, Boundary::Free),
          saw_marginal(m, t, cond, Boundary::Plus)};
}

void dump_saw_tree(std::ostream& out, const SawTree& t) {
  // Node ids are assigned in depth-first order, so id order is pre-order.
  for (int i = 0; i < t.size(); ++i) {
    out << std::string(2 * static_cast<std::size_t>(t.tree.depth(i)), ' ') << t.tree.label(i);
    if (t.cycle_pin[i] == Pin::Plus) out << " A+";
    else if (t.cycle_pin[i] == Pin::Minus) out << " A-";
    else if (t.tree.depth(i) == t.depth_cap && i != 0) out << " frontier";
    else out << " free";
    out << '\n';
  }
}

}  // namespace ising
