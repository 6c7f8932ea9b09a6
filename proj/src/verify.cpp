#include "ising/verify.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <ostream>
#include <queue>
#include <set>
#include <string>

#include "ising/dynamics.hpp"
#include "ising/error.hpp"
#include "ising/format.hpp"
#include "ising/model.hpp"
#include "ising/parallel.hpp"
#include "ising/rng.hpp"
#include "ising/sampler.hpp"
#include "ising/saw_tree.hpp"
#include "ising/tree_engine.hpp"

namespace ising::verify {

std::size_t CheckReport::violations() const {
  return static_cast<std::size_t>(
      std::count_if(rows.begin(), rows.end(), [](const CheckRow& r) { return !r.ok; }));
}

void CheckReport::print(std::ostream& out, bool all_rows) const {
  out << "# " << name << ": " << rows.size() - violations() << "/" << rows.size() << " ok\n";
  for (const auto& note : notes) out << "#   " << note << "\n";
  for (const auto& r : rows) {
    if (!all_rows && r.ok) continue;
    out << name << "," << r.instance << "," << format_sig9(r.bound) << ","
        << format_sig9(r.measured) << "," << (r.ok ? "ok" : "VIOLATION") << "\n";
  }
}

namespace {

struct Draw {
  CounterRng rng;

  double uniform(double lo, double hi) { return lo + (hi - lo) * rng.uniform(); }
  int below(int n) { return static_cast<int>(rng.below(static_cast<std::uint64_t>(n))); }
  int between(int lo, int hi) { return lo + below(hi - lo + 1); }
  bool chance(double p) { return rng.uniform() < p; }
  int spin() { return chance(0.5) ? 1 : -1; }
  std::uint64_t bits() { return rng(); }

  std::vector<int> permutation(int n) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    for (int i = n - 1; i > 0; --i) std::swap(p[i], p[below(i + 1)]);
    return p;
  }
};

Draw draw_for(std::uint64_t seed, std::string_view tag, std::size_t index) {
  return Draw{CounterRng::stream(seed, tag, index)};
}

// Random spanning tree on shuffled labels plus each remaining pair with
// probability extra_p. Couplings uniform on [beta_lo, beta_hi].
WeightedGraph random_connected_graph(Draw& d, int n, double extra_p, double beta_lo,
                                     double beta_hi) {
  WeightedGraph g(n);
  const auto perm = d.permutation(n);
  for (int i = 1; i < n; ++i) g.add_edge(perm[i], perm[d.below(i)], d.uniform(beta_lo, beta_hi));
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (!g.has_edge(u, v) && d.chance(extra_p)) g.add_edge(u, v, d.uniform(beta_lo, beta_hi));
  return g;
}

void random_fields(Draw& d, WeightedGraph& g, double h_max, double pin_p = 0.0) {
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (pin_p > 0.0 && d.chance(pin_p)) {
      g.set_field(v, VertexField::pinned_to(d.spin()));
    } else {
      g.set_h(v, d.uniform(-h_max, h_max));
    }
  }
}

CheckRow row(std::string instance, double bound, double measured) {
  return {std::move(instance), bound, measured, measured <= bound};
}

template <typename Fn>
void collect(CheckReport& report, std::size_t count, Fn&& fn) {
  auto parts = parallel_map(count, std::forward<Fn>(fn));
  for (auto& part : parts)
    for (auto& r : part) report.rows.push_back(std::move(r));
}

std::vector<std::vector<int>> adjacency_of(const std::vector<int>& parent) {
  std::vector<std::vector<int>> adj(parent.size());
  for (std::size_t i = 1; i < parent.size(); ++i) {
    adj[i].push_back(parent[i]);
    adj[parent[i]].push_back(static_cast<int>(i));
  }
  return adj;
}

RootedTree rooted_at(const std::vector<std::vector<int>>& adj, int root) {
  RootedTree t(root);
  std::vector<int> node_of(adj.size(), -1);
  node_of[root] = 0;
  std::queue<int> q;
  q.push(root);
  while (!q.empty()) {
    const int u = q.front();
    q.pop();
    for (int w : adj[u]) {
      if (node_of[w] >= 0) continue;
      node_of[w] = t.add_child(node_of[u], w);
      q.push(w);
    }
  }
  return t;
}

long min_rooted_path_density(const std::vector<int>& parent) {
  const auto adj = adjacency_of(parent);
  long best = -1;
  for (int r = 0; r < static_cast<int>(adj.size()); ++r) {
    const long m = tree_path_density(rooted_at(adj, r));
    if (best < 0 || m < best) best = m;
  }
  return best;
}

std::string ahu(const std::vector<std::vector<int>>& adj, int u, int from) {
  std::vector<std::string> parts;
  for (int w : adj[u])
    if (w != from) parts.push_back(ahu(adj, w, u));
  std::sort(parts.begin(), parts.end());
  std::string s = "(";
  for (auto& p : parts) s += p;
  return s + ")";
}

std::string unrooted_canonical(const std::vector<std::vector<int>>& adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> degree(n);
  std::vector<int> layer;
  for (int v = 0; v < n; ++v) {
    degree[v] = static_cast<int>(adj[v].size());
    if (degree[v] <= 1) layer.push_back(v);
  }
  int remaining = n;
  while (remaining > 2) {
    remaining -= static_cast<int>(layer.size());
    std::vector<int> next;
    for (int v : layer)
      for (int w : adj[v])
        if (--degree[w] == 1) next.push_back(w);
    layer = std::move(next);
  }
  std::string best;
  for (int c : layer) {
    std::string s = ahu(adj, c, -1);
    if (best.empty() || s < best) best = s;
  }
  return best;
}

std::vector<int> bfs_parents(const std::vector<std::vector<int>>& adj) {
  const RootedTree t = rooted_at(adj, 0);
  std::vector<int> parent(t.size(), -1);
  for (int i = 1; i < t.size(); ++i) parent[i] = t.parent(i);
  return parent;
}

}  // namespace

std::vector<std::vector<int>> tree_shapes(int n) {
  if (n < 1) throw ParameterError("tree shapes need n >= 1");
  std::vector<std::vector<int>> shapes{{-1}};
  for (int k = 2; k <= n; ++k) {
    std::map<std::string, std::vector<int>> seen;
    for (const auto& parent : shapes) {
      for (int attach = 0; attach < k - 1; ++attach) {
        auto grown = parent;
        grown.push_back(attach);
        const auto adj = adjacency_of(grown);
        seen.try_emplace(unrooted_canonical(adj), bfs_parents(adj));
      }
    }
    shapes.clear();
    for (auto& [key, parent] : seen) shapes.push_back(std::move(parent));
  }
  return shapes;
}

RootedTree tree_from_parents(const std::vector<int>& parent) {
  RootedTree t(0);
  for (std::size_t i = 1; i < parent.size(); ++i) t.add_child(parent[i], static_cast<int>(i));
  return t;
}

double log_log_slope(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) throw ParameterError("slope needs >= 2 paired points");
  const double k = static_cast<double>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!(x[i] > 0.0 && y[i] > 0.0)) throw ParameterError("log-log slope needs positive data");
    const double lx = std::log(x[i]), ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (k * sxy - sx * sy) / (k * sxx - sx * sx);
}

double median(std::vector<double> values) {
  if (values.empty()) throw ParameterError("median of empty sample");
  std::sort(values.begin(), values.end());
  const std::size_t h = values.size() / 2;
  return values.size() % 2 ? values[h] : 0.5 * (values[h - 1] + values[h]);
}

// ---------------------------------------------------------------------------

CheckReport weitz_identity(const WeitzIdentityOptions& o) {
  CheckReport report{"weitz-identity", {}, {}};
  collect(report, static_cast<std::size_t>(o.models), [&](std::size_t k) {
    Draw d = draw_for(o.seed, "weitz-identity", k);
    const int n = d.between(2, o.max_n);
    WeightedGraph g = random_connected_graph(d, n, d.uniform(0.1, 0.7), 0.0, 1.0);
    random_fields(d, g, 1.0);
    const IsingModel m(std::move(g));

    double worst = 0.0;
    for (Vertex v = 0; v < n; ++v) {
      const SawTree tree = build_saw_tree(m.graph(), v, n + 1);
      std::vector<Vertex> others;
      for (Vertex u = 0; u < n; ++u)
        if (u != v) others.push_back(u);
      for (std::uint32_t subset = 0; subset < (1U << others.size()); ++subset) {
        if (std::popcount(subset) > o.max_conditioned) continue;
        PartialConfig cond(n);
        for (std::size_t i = 0; i < others.size(); ++i)
          if (subset >> i & 1U) cond.set(others[i], d.spin());
        const double err = std::abs(saw_marginal(m, tree, cond) -
                                    exact_conditional_marginal(m, v, cond));
        worst = std::max(worst, err);
      }
    }
    return std::vector{row("model " + std::to_string(k) + " n=" + std::to_string(n),
                           o.tolerance, worst)};
  });
  report.notes.push_back("max |saw marginal - enumeration| per model, L = n + 1");
  return report;
}

CheckReport path_decay(const PathDecayOptions& o) {
  CheckReport report{"path-decay", {}, {}};
  Draw d = draw_for(o.seed, "path-decay", 0);
  for (int len = 1; len <= o.max_length; ++len) {
    RootedTree t(0);
    for (int i = 1; i <= len; ++i) t.add_child(i - 1, i);
    std::vector<double> beta(len + 1, 0.0);
    double product = 1.0;
    for (int i = 1; i <= len; ++i) {
      beta[i] = d.uniform(0.05, 2.0);
      product *= std::tanh(beta[i]);
    }
    const TreeModel tm(t, beta, std::vector<VertexField>(len + 1));
    const double by_tree = two_point_influence(tm, len);

    const IsingModel m(tm.to_graph());
    PartialConfig plus(len + 1), minus(len + 1);
    plus.set(len, 1);
    minus.set(len, -1);
    const double by_enum =
        exact_conditional_marginal(m, 0, plus) - exact_conditional_marginal(m, 0, minus);
    const double err = std::max(std::abs(by_tree - product), std::abs(by_enum - product));
    report.rows.push_back(row("length " + std::to_string(len), o.tolerance, err));
  }
  report.notes.push_back("|influence - prod tanh(beta_i)|, tree recursion and enumeration");
  return report;
}

CheckReport tree_boundary_bound(const TreeBoundaryOptions& o) {
  CheckReport report{"tree-boundary", {}, {}};
  collect(report, static_cast<std::size_t>(o.trees), [&](std::size_t k) {
    Draw d = draw_for(o.seed, "tree-boundary", k);
    const int depth = d.between(1, o.max_depth);
    RootedTree t = generate_galton_watson(o.mean_offspring, depth, d.bits());
    const double beta = d.uniform(0.0, 1.0);
    std::vector<double> coupling(t.size(), 0.0);
    std::vector<VertexField> field(t.size());
    double beta_max = 0.0;
    for (int u = 0; u < t.size(); ++u) {
      if (u > 0) coupling[u] = d.uniform(0.0, beta);
      beta_max = std::max(beta_max, coupling[u]);
      if (u > 0 && d.chance(o.pin_probability)) {
        field[u] = VertexField::pinned_to(d.spin());
      } else {
        field[u].h = d.uniform(-2.0, 2.0);
      }
    }
    const TreeModel tm(std::move(t), std::move(coupling), std::move(field));
    std::vector<CheckRow> rows;
    for (int l = 1; l <= tm.tree.height(); ++l) {
      const double bound = tm.tree.count_at_depth(l) * std::pow(std::tanh(beta_max), l) + 1e-12;
      rows.push_back(row("tree " + std::to_string(k) + " l=" + std::to_string(l), bound,
                         boundary_influence(tm, l)));
    }
    return rows;
  });
  report.notes.push_back("boundary influence vs |S(v,l)| tanh(beta_max)^l + 1e-12");
  return report;
}

CheckReport tree_relaxation_bound(const TreeRelaxationOptions& o) {
  CheckReport report{"tree-relaxation", {}, {}};
  struct Task {
    std::vector<int> parent;
    double beta;
    int instance;
  };
  std::vector<Task> tasks;
  for (int n = 1; n <= o.max_n; ++n)
    for (const auto& shape : tree_shapes(n))
      for (double beta : o.betas)
        for (int i = 0; i < o.instances_per_shape; ++i) tasks.push_back({shape, beta, i});

  collect(report, tasks.size(), [&](std::size_t k) {
    const Task& task = tasks[k];
    Draw d = draw_for(o.seed, "tree-relaxation", k);
    const int n = static_cast<int>(task.parent.size());
    const RootedTree t = tree_from_parents(task.parent);
    WeightedGraph g = t.to_graph(std::vector<double>{task.beta});
    std::vector<Vertex> pinned;
    for (Vertex v = 0; v < n; ++v) {
      if (g.degree(v) == 1 && d.chance(0.5)) {
        g.set_field(v, VertexField::pinned_to(d.spin()));
        pinned.push_back(v);
      } else {
        g.set_h(v, d.uniform(-1.0, 1.0));
      }
    }
    if (static_cast<int>(pinned.size()) == n) g.set_field(pinned.front(), VertexField{0.0, Pin::Free});
    const IsingModel m(std::move(g));
    const Spectrum s = spectral_analysis(build_transition_matrix(m));
    const double tau = continuous_relaxation_time(s, static_cast<int>(m.free_vertices().size()));
    const long density = min_rooted_path_density(task.parent);
    const double bound = std::exp(4.0 * task.beta * static_cast<double>(density)) * (1.0 + 1e-9);
    return std::vector{row("n=" + std::to_string(n) + " shape " + std::to_string(k) + " beta=" +
                               format_sig9(task.beta) + " m=" + std::to_string(density),
                           bound, tau)};
  });
  report.notes.push_back("continuous-time relaxation (discrete / free count) vs exp(4 beta m)");
  report.notes.push_back("m is the smallest root path density over all rootings");
  return report;
}

CheckReport field_free_domination(const FieldDominationOptions& o) {
  CheckReport report{"field-domination", {}, {}};
  collect(report, static_cast<std::size_t>(o.trees), [&](std::size_t k) {
    Draw d = draw_for(o.seed, "field-domination", k);
    const int n = d.between(2, 16);
    RootedTree t(0);
    for (int i = 1; i < n; ++i) t.add_child(d.below(i), i);
    std::vector<double> coupling(n, 0.0);
    for (int i = 1; i < n; ++i) coupling[i] = d.uniform(0.0, 1.5);
    std::vector<VertexField> with_field(n), without(n);
    for (auto& f : with_field) f.h = d.uniform(-2.0, 2.0);
    const int node = d.between(1, n - 1);
    const TreeModel a(t, coupling, with_field);
    const TreeModel b(t, coupling, without);
    return std::vector{row("tree " + std::to_string(k), two_point_influence(b, node) + o.slack,
                           two_point_influence(a, node))};
  });
  report.notes.push_back("two-point influence with fields vs the same with h = 0");
  return report;
}

CheckReport mixing_sandwich(const MixingSandwichOptions& o) {
  CheckReport report{"mixing-sandwich", {}, {}};
  collect(report, static_cast<std::size_t>(o.models), [&](std::size_t k) {
    Draw d = draw_for(o.seed, "mixing-sandwich", k);
    const int n = d.between(2, o.max_n);
    WeightedGraph g = random_connected_graph(d, n, d.uniform(0.1, 0.6), 0.0, 1.0);
    random_fields(d, g, 1.0);
    const IsingModel m(std::move(g));
    const TransitionMatrix tm = build_transition_matrix(m);
    const ExactDistribution dist = exact_distribution(m);
    const Spectrum s = spectral_analysis(tm);
    const double tau = s.relaxation_time;
    const double mix = static_cast<double>(exact_mixing_time(tm, dist));
    const double upper = tau * (1.0 + 0.5 * std::log(1.0 / tm.stationary.minCoeff()));
    const std::string id = "model " + std::to_string(k) + " n=" + std::to_string(n);

    std::vector<CheckRow> rows;
    rows.push_back({id + " relaxation<=mixing", mix, tau, tau <= mix});
    rows.push_back(row(id + " mixing<=upper", upper, mix));
    rows.push_back(row(id + " detailed-balance", 1e-10, tm.max_balance_error));
    return rows;
  });
  report.notes.push_back("discrete relaxation time, exact mixing time at 1/(2e), min stationary mass");
  return report;
}

CheckReport sampler_tv(const SamplerTvOptions& o) {
  CheckReport report{"sampler-tv", {}, {}};
  std::vector<std::pair<std::string, IsingModel>> cases;
  {
    Draw d = draw_for(o.seed, "sampler-tv-cycles", 0);
    for (int n = o.min_cycle; n <= o.max_cycle; ++n) {
      WeightedGraph g = cycle_graph(n, o.cycle_beta);
      random_fields(d, g, 0.5);
      cases.emplace_back("cycle " + std::to_string(n), IsingModel(std::move(g)));
    }
  }
  for (int k = 0; k < o.random_graphs; ++k) {
    Draw d = draw_for(o.seed, "sampler-tv", static_cast<std::size_t>(k));
    const int n = d.between(3, o.max_n);
    WeightedGraph g = random_connected_graph(d, n, 1.5 / n, 0.0, o.max_beta);
    random_fields(d, g, 1.0, 0.1);
    cases.emplace_back("graph " + std::to_string(k) + " n=" + std::to_string(n),
                       IsingModel(std::move(g)));
  }

  collect(report, cases.size(), [&](std::size_t k) {
    const auto& [id, m] = cases[k];
    const int n = m.size();
    const ExactDistribution gibbs = exact_distribution(m);
    std::vector<CheckRow> rows;
    rows.push_back(row(id + " L=" + std::to_string(n + 1), o.exact_tolerance,
                       tv_distance(algorithm1_output_law(m, n + 1), gibbs)));
    for (int depth : o.truncated_depths) {
      if (depth > n) continue;
      const double tv = tv_distance(algorithm1_output_law(m, depth), gibbs);
      const auto widths = algorithm1_bracket_widths(m, depth);
      const double bracket_sum = std::accumulate(widths.begin(), widths.end(), 0.0);
      const std::string tag = id + " L=" + std::to_string(depth);
      rows.push_back(row(tag + " sphere", algorithm1_sphere_bound(m, depth) + 1e-12, tv));
      rows.push_back(row(tag + " brackets", bracket_sum + 1e-12, tv));
    }
    return rows;
  });
  report.notes.push_back("TV(output law, Gibbs): exact depth vs 1e-8, truncated vs chained bounds");
  return report;
}

CheckReport coupling_soundness(const CouplingSoundnessOptions& o) {
  CheckReport report{"coupling-soundness", {}, {}};
  auto steps = parallel_map(static_cast<std::size_t>(o.runs), [&](std::size_t k) {
    Draw d = draw_for(o.seed, "coupling-soundness", k);
    const int n = d.between(5, 40);
    WeightedGraph g = random_connected_graph(d, n, 2.0 / n, 0.0, 1.5);
    random_fields(d, g, 1.0, 0.1);
    const IsingModel m(std::move(g));
    UpdateStream stream(o.seed, k);
    CouplingOptions options;
    options.cap = o.steps_per_run;
    options.steps_after_coupling = o.steps_per_run;
    std::string failure;
    std::uint64_t run = 0;
    try {
      run = monotone_coupled_run(m, stream, options).steps_run;
    } catch (const InvariantFailure& e) {
      failure = e.what();
    }
    return std::pair{run, failure};
  });
  std::uint64_t total = 0;
  for (std::size_t k = 0; k < steps.size(); ++k) {
    total += steps[k].first;
    const bool ok = steps[k].second.empty();
    report.rows.push_back({"run " + std::to_string(k), 0.0, ok ? 0.0 : 1.0, ok});
    if (!ok) report.notes.push_back("run " + std::to_string(k) + ": " + steps[k].second);
  }
  const double required = 1e6;
  report.rows.push_back({"audited steps", required, static_cast<double>(total),
                         static_cast<double>(total) >= required});
  return report;
}

namespace {

// Coupling times for (model builder, seed) pairs, in task order.
std::vector<CouplingResult> coupling_runs(
    std::size_t count, const std::function<IsingModel(std::size_t)>& model_for,
    std::uint64_t seed, std::string_view tag) {
  return parallel_map(count, [&](std::size_t k) {
    const IsingModel m = model_for(k);
    UpdateStream stream(seed, CounterRng::derive_key(seed, tag, k));
    return monotone_coupled_run(m, stream);
  });
}

}  // namespace

CheckReport coupling_trend(const CouplingTrendOptions& o) {
  CheckReport report{"coupling-trend", {}, {}};
  const std::size_t seeds = static_cast<std::size_t>(o.seeds);
  std::vector<double> xs, medians;
  for (int n : o.sizes) {
    const auto runs = coupling_runs(
        seeds,
        [&](std::size_t k) {
          return IsingModel(generate_erdos_renyi(
              n, o.mean_degree, CounterRng::derive_key(o.seed, "er", n * 1000 + k), o.beta));
        },
        o.seed, "coupling-trend-" + std::to_string(n));
    std::vector<double> times;
    int coupled = 0;
    for (const auto& r : runs) {
      if (r.coupled()) {
        ++coupled;
        times.push_back(static_cast<double>(*r.coupling_time));
      }
    }
    report.rows.push_back({"n=" + std::to_string(n) + " coupled", static_cast<double>(o.seeds),
                           static_cast<double>(coupled), coupled == o.seeds});
    if (!times.empty()) {
      xs.push_back(n);
      medians.push_back(median(times));
      report.notes.push_back("n=" + std::to_string(n) + " median " + format_sig9(medians.back()));
    }
  }
  if (xs.size() >= 2) report.rows.push_back(row("slope", o.max_slope, log_log_slope(xs, medians)));
  return report;
}

CheckReport star_slowdown(const StarSlowdownOptions& o) {
  CheckReport report{"star-slowdown", {}, {}};
  std::vector<double> medians;
  for (int s : o.leaves) {
    const auto runs = coupling_runs(
        static_cast<std::size_t>(o.seeds),
        [&](std::size_t) { return IsingModel(star_graph(s, o.beta)); }, o.seed,
        "star-" + std::to_string(s));
    std::vector<double> times;
    for (const auto& r : runs) times.push_back(static_cast<double>(r.coupled() ? *r.coupling_time : r.cap));
    medians.push_back(median(times));
    report.notes.push_back("s=" + std::to_string(s) + " median " + format_sig9(medians.back()));
  }
  for (std::size_t i = 1; i < medians.size(); ++i) {
    const double ratio = medians[i] / medians[i - 1];
    report.rows.push_back({"s=" + std::to_string(o.leaves[i - 1]) + "->" +
                               std::to_string(o.leaves[i]),
                           o.min_ratio, ratio, ratio >= o.min_ratio});
  }
  return report;
}

CheckReport sphere_bound(const SphereBoundOptions& o) {
  CheckReport report{"sphere-bound", {}, {}};
  collect(report, static_cast<std::size_t>(o.trees), [&](std::size_t k) {
    Draw d = draw_for(o.seed, "sphere-bound", k);
    std::vector<CheckRow> rows;
    for (int a : o.radii) {
      const RootedTree t = generate_galton_watson(o.mean_offspring, a, d.bits());
      const double m = static_cast<double>(tree_path_density(t));
      const double bound = std::pow(std::max(0.0, (m - a + 1.0) / a), a);
      rows.push_back(row("tree " + std::to_string(k) + " a=" + std::to_string(a), bound,
                         t.count_at_depth(a)));
    }
    return rows;
  });
  report.notes.push_back("|S(v,a)| vs ((m - a + 1) / a)^a");
  return report;
}

CheckReport random_graph_structure(const RandomGraphStructureOptions& o) {
  CheckReport report{"graph-structure", {}, {}};
  const int radius = static_cast<int>(
      std::ceil(0.3 * std::log(static_cast<double>(o.n)) / std::log(o.mean_degree)));
  report.notes.push_back("ball radius " + std::to_string(radius));
  for (int k = 0; k < o.seeds; ++k) {
    const WeightedGraph g = generate_erdos_renyi(
        o.n, o.mean_degree, CounterRng::derive_key(o.seed, "graph-structure", k));
    const auto excess = parallel_map(static_cast<std::size_t>(o.n), [&](std::size_t v) {
      return tree_excess(ball(g, static_cast<Vertex>(v), radius));
    });
    const long worst = *std::max_element(excess.begin(), excess.end());
    const std::string id = "seed " + std::to_string(k);
    report.rows.push_back(row(id + " max excess", static_cast<double>(o.max_excess),
                              static_cast<double>(worst)));

    Draw d = draw_for(o.seed, "graph-structure-saw", static_cast<std::size_t>(k));
    std::vector<Vertex> sample;
    for (int i = 0; i < o.saw_samples; ++i) sample.push_back(d.below(o.n));
    for (int a : {1, 2}) {
      const auto sizes = parallel_map(static_cast<std::size_t>(o.n), [&](std::size_t v) {
        return saw_tree_size(g, static_cast<Vertex>(v), a);
      });
      const double b = static_cast<double>(*std::max_element(sizes.begin(), sizes.end()));
      for (int j : {2, 3}) {
        const auto big = parallel_map(sample.size(), [&](std::size_t i) {
          return saw_tree_size(g, sample[i], j * a);
        });
        const double worst_size = static_cast<double>(*std::max_element(big.begin(), big.end()));
        report.rows.push_back(row(id + " saw a=" + std::to_string(a) + " j=" + std::to_string(j),
                                  std::pow(b, j), worst_size));
      }
    }
  }
  return report;
}

// ---------------------------------------------------------------------------

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"weitz-identity", "tree-bounds", "spectral",
                                              "coupling",       "sampler-tv",  "structure"};
  return names;
}

std::vector<CheckReport> run_suite(const std::string& name, std::uint64_t seed) {
  auto pick = [seed](std::uint64_t fallback) { return seed ? mix64(seed ^ fallback) : fallback; };
  if (name == "weitz-identity") {
    WeitzIdentityOptions o;
    o.seed = pick(o.seed);
    return {weitz_identity(o)};
  }
  if (name == "tree-bounds") {
    PathDecayOptions a;
    TreeBoundaryOptions b;
    TreeRelaxationOptions c;
    FieldDominationOptions e;
    a.seed = pick(a.seed);
    b.seed = pick(b.seed);
    c.seed = pick(c.seed);
    e.seed = pick(e.seed);
    return {path_decay(a), tree_boundary_bound(b), tree_relaxation_bound(c),
            field_free_domination(e)};
  }
  if (name == "spectral") {
    MixingSandwichOptions o;
    o.seed = pick(o.seed);
    return {mixing_sandwich(o)};
  }
  if (name == "coupling") {
    CouplingSoundnessOptions a;
    CouplingTrendOptions b;
    StarSlowdownOptions c;
    a.seed = pick(a.seed);
    b.seed = pick(b.seed);
    c.seed = pick(c.seed);
    return {coupling_soundness(a), coupling_trend(b), star_slowdown(c)};
  }
  if (name == "sampler-tv") {
    SamplerTvOptions o;
    o.seed = pick(o.seed);
    return {sampler_tv(o)};
  }
  if (name == "structure") {
    SphereBoundOptions a;
    RandomGraphStructureOptions b;
    a.seed = pick(a.seed);
    b.seed = pick(b.seed);
    return {sphere_bound(a), random_graph_structure(b)};
  }
  throw ParameterError("unknown suite '" + name + "'");
}

}  // namespace ising::verify
