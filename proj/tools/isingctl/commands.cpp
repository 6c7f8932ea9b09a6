#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <limits>
#include <map>
#include <memory>
#include <optional>

#include "ising/dynamics.hpp"
#include "ising/error.hpp"
#include "ising/format.hpp"
#include "ising/graph.hpp"
#include "ising/model.hpp"
#include "ising/parallel.hpp"
#include "ising/rng.hpp"
#include "ising/sampler.hpp"
#include "ising/saw_tree.hpp"
#include "ising/serialize.hpp"
#include "ising/verify.hpp"

namespace isingctl {

using ising::format_sig9;

namespace {

class Output {
 public:
  explicit Output(const std::string& path) {
    if (path.empty()) return;
    file_ = std::make_unique<std::ofstream>(path);
    if (!*file_) throw ConfigError("cannot write output file '" + path + "'");
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

void reject_unused(const Config& c) {
  const auto unused = c.unused_keys();
  if (unused.empty()) return;
  std::string msg = "unknown config key(s) for " + c.section() + ":";
  for (const auto& k : unused) msg += " " + k;
  throw ConfigError(msg);
}

ising::json config_json(const Config& c) {
  ising::json j = ising::json::object();
  for (const auto& [key, value] : c.effective()) j[key] = value;
  return j;
}

int to_int(long long v, const std::string& key) {
  if (v < 0 || v > std::numeric_limits<int>::max()) {
    throw ConfigError("config key '" + key + "' out of range");
  }
  return static_cast<int>(v);
}

// Graph source shared by the model-based commands.
struct GraphSpec {
  std::string source;
  int n = 0;
  double d = 0.0;
  double beta = 0.0;
  double h = 0.0;
  int depth = 0;
  std::uint64_t seed = 0;
  std::string file;
};

GraphSpec read_graph_spec(Config& c) {
  GraphSpec s;
  s.source = c.get_string("source", "erdos-renyi");
  if (s.source == "file") {
    s.file = c.get_string("file", "");
    if (s.file.empty()) throw ConfigError("source = file needs a 'file' key");
    return s;
  }
  s.beta = c.get_double("beta", 0.5);
  s.h = c.get_double("h", 0.0);
  s.seed = c.get_seed("seed", 1);
  if (s.source == "galton-watson") {
    s.d = c.get_double("d", 2.0);
    s.depth = to_int(c.get_int("depth", 6), "depth");
  } else if (s.source == "erdos-renyi") {
    s.n = to_int(c.get_int("n", 100), "n");
    s.d = c.get_double("d", 2.0);
  } else if (s.source == "path" || s.source == "cycle" || s.source == "complete" ||
             s.source == "star") {
    s.n = to_int(c.get_int("n", 10), "n");
  } else {
    throw ConfigError("unknown graph source '" + s.source + "'");
  }
  return s;
}

ising::WeightedGraph build_graph(const GraphSpec& s) {
  using namespace ising;
  if (s.source == "file") {
    try {
      return load_graph(s.file);
    } catch (const Error& e) {
      throw ConfigError(e.what());
    }
  }
  WeightedGraph g;
  if (s.source == "erdos-renyi") {
    g = generate_erdos_renyi(s.n, s.d, s.seed, s.beta);
  } else if (s.source == "galton-watson") {
    g = generate_galton_watson(s.d, s.depth, s.seed).to_graph(std::vector<double>{s.beta});
  } else if (s.source == "path") {
    g = path_graph(s.n, s.beta);
  } else if (s.source == "cycle") {
    g = cycle_graph(s.n, s.beta);
  } else if (s.source == "complete") {
    g = complete_graph(s.n, s.beta);
  } else {
    g = star_graph(s.n, s.beta);
  }
  for (Vertex v = 0; v < g.num_vertices(); ++v) g.set_h(v, s.h);
  return g;
}

void progress(const Context& ctx, const std::string& msg) {
  if (ctx.verbosity > 0) std::cerr << "isingctl: " << msg << "\n";
}

}  // namespace

int cmd_verify(Context& ctx, const std::string& suite_arg) {
  Config& c = ctx.config;
  c.use_section("verify");
  const std::string suite = suite_arg.empty() ? c.get_string("suite", "") : suite_arg;
  if (!suite_arg.empty()) c.get_string("suite", suite_arg);
  const std::uint64_t seed = c.get_seed("seed", 0);
  const bool all_rows = c.get_bool("all_rows", false);
  reject_unused(c);

  const auto& names = ising::verify::suite_names();
  if (std::find(names.begin(), names.end(), suite) == names.end()) {
    std::string msg = "unknown suite '" + suite + "' (expected one of:";
    for (const auto& n : names) msg += " " + n;
    throw ConfigError(msg + ")");
  }

  progress(ctx, "running suite " + suite);
  const auto reports = ising::verify::run_suite(suite, seed);
  Output out(ctx.out_path);
  c.echo(out.stream());
  out.stream() << "check,instance,bound,measured,status\n";
  bool passed = true;
  for (const auto& r : reports) {
    r.print(out.stream(), all_rows);
    passed = passed && r.passed();
  }
  out.stream() << "# result: " << (passed ? "PASS" : "FAIL") << "\n";
  return passed ? exit_ok : exit_violation;
}

int cmd_coupling_scan(Context& ctx) {
  using namespace ising;
  Config& c = ctx.config;
  c.use_section("coupling-scan");
  const std::string graph = c.get_string("graph", "erdos-renyi");
  if (graph != "erdos-renyi" && graph != "star") {
    throw ConfigError("coupling-scan graph must be erdos-renyi or star");
  }
  const auto ns = c.get_ints("n", {250, 500, 1000, 2000});
  const double d = graph == "star" ? 0.0 : c.get_double("d", 2.0);
  const auto betas = c.get_doubles("beta", {0.05});
  const int seeds = to_int(c.get_int("seeds", 20), "seeds");
  const std::uint64_t seed = c.get_seed("seed", 1);
  const auto cap = static_cast<std::uint64_t>(c.get_int("cap", 0));
  const auto after = static_cast<std::uint64_t>(c.get_int("steps_after_coupling", 0));
  const std::string records = c.get_string("records", "");
  reject_unused(c);

  struct Task {
    int n;
    double beta;
    std::uint64_t seed;
  };
  std::vector<Task> tasks;
  for (long long n : ns)
    for (double beta : betas)
      for (int k = 0; k < seeds; ++k)
        tasks.push_back({to_int(n, "n"), beta, seed + static_cast<std::uint64_t>(k)});

  progress(ctx, std::to_string(tasks.size()) + " coupled runs");
  const auto results = parallel_map(tasks.size(), [&](std::size_t i) {
    const Task& t = tasks[i];
    const IsingModel m(graph == "star" ? star_graph(t.n, t.beta)
                                       : generate_erdos_renyi(t.n, d, t.seed, t.beta));
    UpdateStream stream(t.seed);
    CouplingOptions options;
    options.cap = cap;
    options.steps_after_coupling = after;
    return monotone_coupled_run(m, stream, options);
  });

  Output out(ctx.out_path);
  std::ostream& os = out.stream();
  c.echo(os);
  os << "n,d,beta,seed,coupled,steps\n";
  std::map<std::pair<double, int>, std::vector<double>> times;
  json all = json::array();
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    const auto& t = tasks[i];
    const auto& r = results[i];
    const std::uint64_t steps = r.coupled() ? *r.coupling_time : r.cap;
    os << t.n << "," << format_sig9(d) << "," << format_sig9(t.beta) << "," << t.seed << ","
       << (r.coupled() ? 1 : 0) << "," << steps << "\n";
    if (r.coupled()) times[{t.beta, t.n}].push_back(static_cast<double>(steps));
    if (!records.empty()) all.push_back(to_json(r, CouplingRecordMeta{t.seed, t.n, d, t.beta}));
  }
  for (double beta : betas) {
    std::vector<double> xs, ys;
    for (long long n : ns) {
      auto it = times.find({beta, static_cast<int>(n)});
      if (it == times.end()) continue;
      xs.push_back(static_cast<double>(n));
      ys.push_back(verify::median(it->second));
      os << "# median beta=" << format_sig9(beta) << " n=" << n << ": " << format_sig9(ys.back())
         << " (" << it->second.size() << " coupled)\n";
    }
    if (xs.size() >= 2) {
      os << "# slope beta=" << format_sig9(beta) << ": " << format_sig9(verify::log_log_slope(xs, ys))
         << "\n";
    }
  }
  if (!records.empty()) {
    std::ofstream rf(records);
    if (!rf) throw ConfigError("cannot write records file '" + records + "'");
    rf << json{{"config", config_json(c)}, {"runs", std::move(all)}}.dump(1) << "\n";
  }
  return exit_ok;
}

int cmd_decay_scan(Context& ctx) {
  using namespace ising;
  Config& c = ctx.config;
  c.use_section("decay-scan");
  const GraphSpec spec = read_graph_spec(c);
  const auto radii = c.get_ints("radii", {1, 2, 3, 4, 5, 6});
  const auto chosen = c.get_ints("vertices", {});
  const int max_vertices = to_int(c.get_int("max_vertices", 100), "max_vertices");
  const auto budget = static_cast<std::size_t>(c.get_int("budget", 10'000'000));
  reject_unused(c);

  const IsingModel m(build_graph(spec));
  std::vector<Vertex> vertices;
  if (!chosen.empty()) {
    for (long long v : chosen) {
      if (v < 0 || v >= m.size()) throw ConfigError("vertex " + std::to_string(v) + " out of range");
      vertices.push_back(static_cast<Vertex>(v));
    }
  } else if (m.size() <= max_vertices) {
    for (Vertex v = 0; v < m.size(); ++v) vertices.push_back(v);
  } else {
    CounterRng rng = CounterRng::stream(spec.seed, "decay-scan");
    std::vector<char> taken(m.size(), 0);
    while (static_cast<int>(vertices.size()) < max_vertices) {
      const auto v = static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(m.size())));
      if (!taken[v]) {
        taken[v] = 1;
        vertices.push_back(v);
      }
    }
    std::sort(vertices.begin(), vertices.end());
  }

  struct Row {
    Vertex v;
    int l;
    std::optional<double> influence;
    std::size_t sphere = 0;
  };
  std::vector<std::pair<Vertex, int>> tasks;
  for (Vertex v : vertices)
    for (long long l : radii) tasks.emplace_back(v, to_int(l, "radii"));
  progress(ctx, std::to_string(tasks.size()) + " (vertex, radius) pairs");

  const PartialConfig none(m.size());
  const auto rows = parallel_map(tasks.size(), [&](std::size_t i) {
    Row r{tasks[i].first, tasks[i].second, std::nullopt, 0};
    try {
      const SawTree t = build_saw_tree(m.graph(), r.v, r.l, budget);
      r.sphere = static_cast<std::size_t>(t.tree.count_at_depth(r.l));
      if (!m.is_pinned(r.v)) r.influence = saw_bracket(m, t, none).width();
      else r.influence = 0.0;
    } catch (const BudgetError&) {
    }
    return r;
  });

  Output out(ctx.out_path);
  std::ostream& os = out.stream();
  c.echo(os);
  os << "v,l,influence,sphere_size,bound,flag\n";
  const double tb = std::tanh(m.beta_max());
  for (const auto& r : rows) {
    if (!r.influence) {
      os << r.v << "," << r.l << ",nan,nan,nan,budget\n";
      continue;
    }
    const double bound = static_cast<double>(r.sphere) * std::pow(tb, r.l);
    os << r.v << "," << r.l << "," << format_sig9(*r.influence) << "," << r.sphere << ","
       << format_sig9(bound) << "," << (*r.influence <= bound + 1e-12 ? "ok" : "exceeds") << "\n";
  }
  return exit_ok;
}

int cmd_sample(Context& ctx) {
  using namespace ising;
  Config& c = ctx.config;
  c.use_section("sample");
  const GraphSpec spec = read_graph_spec(c);
  const int depth_key = to_int(c.get_int("L", 0), "L");
  const double r = c.get_double("r", 1.0);
  const bool clamp = c.get_bool("clamp", true);
  const int samples = to_int(c.get_int("samples", 1), "samples");
  const std::uint64_t sample_seed = c.get_seed("sample_seed", 1);
  const auto budget = static_cast<std::size_t>(c.get_int("budget", 10'000'000));
  reject_unused(c);

  IsingModel m(build_graph(spec));
  std::vector<Vertex> clamped;
  if (clamp) {
    IsingModel cm = clamp_large_fields(m);
    for (Vertex v = 0; v < m.size(); ++v)
      if (cm.is_pinned(v) && !m.is_pinned(v)) clamped.push_back(v);
    m = std::move(cm);
  }
  const int depth = depth_key > 0 ? depth_key : std::max(1, radius_for(r, m.size()));
  progress(ctx, "sampling n=" + std::to_string(m.size()) + " at L=" + std::to_string(depth));

  const auto runs = parallel_map(static_cast<std::size_t>(samples), [&](std::size_t k) {
    UpdateStream stream(sample_seed, k);
    return algorithm1_sample(m, depth, stream, budget);
  });
  json out_runs = json::array();
  for (const auto& run : runs) out_runs.push_back(to_json(run));
  Output out(ctx.out_path);
  out.stream() << json{{"config", config_json(c)}, {"clamped", clamped}, {"runs", std::move(out_runs)}}
                      .dump(1)
               << "\n";
  return exit_ok;
}

int cmd_graph_gen(Context& ctx) {
  Config& c = ctx.config;
  c.use_section("graph-gen");
  const GraphSpec spec = read_graph_spec(c);
  reject_unused(c);
  const ising::WeightedGraph g = build_graph(spec);
  Output out(ctx.out_path);
  c.echo(out.stream());
  ising::write_graph(out.stream(), g);
  return exit_ok;
}

int cmd_gw_stats(Context& ctx) {
  using namespace ising;
  Config& c = ctx.config;
  c.use_section("gw-stats");
  const double d = c.get_double("d", 2.0);
  const auto depths = c.get_ints("depths", {4, 6, 8});
  const int trees = to_int(c.get_int("trees", 10'000), "trees");
  const double t = c.get_double("t", 1.0);
  const std::uint64_t seed = c.get_seed("seed", 1);
  reject_unused(c);
  if (!(d > 0.0)) throw ConfigError("gw-stats needs d > 0");

  Output out(ctx.out_path);
  std::ostream& os = out.stream();
  c.echo(os);
  os << "depth,trees,mean_size,expected_size,mean_exp\n";
  for (long long depth_ll : depths) {
    const int depth = to_int(depth_ll, "depths");
    const auto sizes = parallel_map(static_cast<std::size_t>(trees), [&](std::size_t k) {
      return static_cast<double>(
          generate_galton_watson(d, depth, CounterRng::derive_key(seed, "gw-stats", k))
              .count_at_depth(depth));
    });
    const double scale = std::pow(d, depth);
    double mean = 0.0, mean_exp = 0.0;
    for (double z : sizes) {
      mean += z;
      mean_exp += std::exp(t * z / scale);
    }
    mean /= trees;
    mean_exp /= trees;
    os << depth << "," << trees << "," << format_sig9(mean) << "," << format_sig9(scale) << ","
       << format_sig9(mean_exp) << "\n";
  }
  return exit_ok;
}

}  // namespace isingctl
