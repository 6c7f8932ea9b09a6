#include "ising/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include "ising/error.hpp"

namespace ising {

namespace {

SawTree build_for(const IsingModel& m, Vertex v, int depth, std::size_t budget) {
  try {
    return build_saw_tree(m.graph(), v, depth, budget);
  } catch (const BudgetError& e) {
    throw BudgetError(std::string("sampler step at vertex ") + std::to_string(v) + ": " + e.what());
  }
}

std::vector<SawTree> trees_for_free_vertices(const IsingModel& m, int depth, std::size_t budget) {
  std::vector<SawTree> trees;
  for (Vertex v : m.free_vertices()) trees.push_back(build_for(m, v, depth, budget));
  return trees;
}

void check_output_law_size(const IsingModel& m) {
  if (m.size() > output_law_cap) {
    throw SizeError("exact output law is capped at n = " + std::to_string(output_law_cap));
  }
}

// Depth-first expansion over all assignments of the free vertices in order.
// `visit(i, cond)` runs at every node, before its children; i == free count
// marks a complete assignment.
void expand_prefixes(const IsingModel& m, const std::function<void(std::size_t, PartialConfig&)>& visit) {
  const auto& free = m.free_vertices();
  PartialConfig cond(m.size());
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    visit(i, cond);
    if (i == free.size()) return;
    for (int spin : {1, -1}) {
      cond.set(free[i], spin);
      rec(i + 1);
    }
    cond.unset(free[i]);
  };
  rec(0);
}

}  // namespace

SamplerRun algorithm1_sample(const IsingModel& m, int depth, UpdateStream& stream,
                             std::size_t budget) {
  const int n = m.size();
  SamplerRun run;
  run.depth = depth;
  run.spins = m.constant_config(+1);
  PartialConfig cond(n);
  for (Vertex v = 0; v < n; ++v) {
    run.order.push_back(v);
    const double u = stream.next_uniform();
    if (m.is_pinned(v)) {
      run.p.push_back(m.graph().field(v).pin == Pin::Plus ? 1.0 : 0.0);
      run.saw_sizes.push_back(0);
      continue;
    }
    const SawTree tree = build_for(m, v, depth, budget);
    const double p = saw_marginal(m, tree, cond);
    const int spin = u <= p ? 1 : -1;
    cond.set(v, spin);
    run.spins.set(v, spin);
    run.p.push_back(p);
    run.saw_sizes.push_back(static_cast<std::size_t>(tree.size()));
  }
  return run;
}

ExactDistribution algorithm1_output_law(const IsingModel& m, int depth, std::size_t budget) {
  check_output_law_size(m);
  const auto trees = trees_for_free_vertices(m, depth, budget);
  const auto& free = m.free_vertices();
  const SpinConfig base = m.constant_config(-1);

  ExactDistribution q;
  q.n = m.size();
  q.probs = Eigen::VectorXd::Zero(Eigen::Index{1} << m.size());
  std::vector<double> mass(free.size() + 1, 1.0);
  std::vector<double> p(free.size(), 0.0);
  expand_prefixes(m, [&](std::size_t i, PartialConfig& cond) {
    if (i > 0) mass[i] = mass[i - 1] * (cond[free[i - 1]] > 0 ? p[i - 1] : 1.0 - p[i - 1]);
    if (i < free.size()) p[i] = saw_marginal(m, trees[i], cond);
    if (i == free.size()) {
      SpinConfig s = base;
      for (Vertex v : free) s.set(v, cond[v]);
      q.probs[static_cast<Eigen::Index>(s.mask())] = mass[i];
    }
  });
  q.log_z = 0.0;
  return q;
}

std::vector<double> algorithm1_bracket_widths(const IsingModel& m, int depth, std::size_t budget) {
  check_output_law_size(m);
  const auto trees = trees_for_free_vertices(m, depth, budget);
  std::vector<double> widths(trees.size(), 0.0);
  expand_prefixes(m, [&](std::size_t i, PartialConfig& cond) {
    if (i == trees.size()) return;
    widths[i] = std::max(widths[i], saw_bracket(m, trees[i], cond).width());
  });
  return widths;
}

double algorithm1_sphere_bound(const IsingModel& m, int depth, std::size_t budget) {
  const double decay = std::pow(std::tanh(m.beta_max()), depth);
  double total = 0.0;
  for (Vertex v : m.free_vertices()) {
    const auto counts = saw_level_counts(m.graph(), v, depth, budget);
    total += static_cast<double>(counts.back()) * decay;
  }
  return total;
}

int radius_for(double r, int n) {
  if (n <= 1 || r <= 0.0) return 0;
  return static_cast<int>(std::ceil(r * std::log(static_cast<double>(n))));
}

double sufficient_radius_factor(double b, double beta, double gamma) {
  const double x = b * std::tanh(beta);
  if (!(x > 0.0 && x < 1.0)) {
    throw ParameterError("need 0 < b tanh(beta) < 1 for a finite radius factor");
  }
  return (1.0 + gamma) / -std::log(x);
}

}  // namespace ising
