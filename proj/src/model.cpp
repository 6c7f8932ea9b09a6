#include "ising/model.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "ising/error.hpp"

namespace ising {

SpinConfig::SpinConfig(std::initializer_list<int> spins) {
  s_.reserve(spins.size());
  for (int x : spins) s_.push_back(static_cast<std::int8_t>(x > 0 ? 1 : -1));
}

SpinConfig SpinConfig::from_mask(int n, std::uint64_t mask) {
  SpinConfig s(n, -1);
  for (int v = 0; v < n; ++v)
    if ((mask >> v) & 1U) s.s_[v] = 1;
  return s;
}

std::uint64_t SpinConfig::mask() const {
  std::uint64_t m = 0;
  for (int v = 0; v < size() && v < 64; ++v)
    if (s_[v] > 0) m |= std::uint64_t{1} << v;
  return m;
}

bool SpinConfig::dominates(const SpinConfig& other) const {
  for (int v = 0; v < size(); ++v)
    if (s_[v] < other.s_[v]) return false;
  return true;
}

int SpinConfig::hamming(const SpinConfig& other) const {
  int d = 0;
  for (int v = 0; v < size(); ++v) d += s_[v] != other.s_[v];
  return d;
}

int PartialConfig::count() const {
  return static_cast<int>(std::count_if(s_.begin(), s_.end(), [](auto x) { return x != 0; }));
}

// ---------------------------------------------------------------------------

IsingModel::IsingModel(WeightedGraph g) : graph_(std::move(g)) {
  beta_max_ = graph_.max_coupling();
  for (Vertex v = 0; v < graph_.num_vertices(); ++v)
    if (!graph_.field(v).pinned()) free_.push_back(v);
}

bool IsingModel::respects_pins(const SpinConfig& s) const {
  if (s.size() != size()) return false;
  for (Vertex v = 0; v < size(); ++v) {
    const auto& f = graph_.field(v);
    if (f.pinned() && s[v] != f.spin()) return false;
  }
  return true;
}

SpinConfig IsingModel::constant_config(int spin) const {
  SpinConfig s(size(), spin);
  for (Vertex v = 0; v < size(); ++v)
    if (graph_.field(v).pinned()) s.set(v, graph_.field(v).spin());
  return s;
}

double IsingModel::local_field(const SpinConfig& s, Vertex v) const {
  double x = graph_.field(v).h;
  for (const auto& nb : graph_.neighbors(v)) x += nb.beta * s[nb.v];
  return x;
}

double logistic2(double x) {
  if (x >= 0.0) return 1.0 / (1.0 + std::exp(-2.0 * x));
  const double e = std::exp(2.0 * x);
  return e / (1.0 + e);
}

double log_weight(const IsingModel& m, const SpinConfig& s) {
  if (!m.respects_pins(s)) return -std::numeric_limits<double>::infinity();
  const WeightedGraph& g = m.graph();
  double w = 0.0;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    w += g.field(v).h * s[v];
    for (const auto& nb : g.neighbors(v))
      if (v < nb.v) w += nb.beta * s[v] * s[nb.v];
  }
  return w;
}

double conditional_plus_prob(const IsingModel& m, const SpinConfig& s, Vertex v) {
  if (m.is_pinned(v)) {
    throw ContractViolation("conditional update requested at pinned vertex " + std::to_string(v));
  }
  return logistic2(m.local_field(s, v));
}

// ---------------------------------------------------------------------------

namespace {

struct Enumerator {
  int n = 0;
  std::vector<double> h;
  std::vector<Edge> edges;

  explicit Enumerator(const IsingModel& m) : n(m.size()), edges(m.graph().edges()) {
    for (Vertex v = 0; v < n; ++v) h.push_back(m.graph().field(v).h);
  }

  double log_weight(std::uint64_t mask) const {
    double w = 0.0;
    for (int v = 0; v < n; ++v) w += ((mask >> v) & 1U) ? h[v] : -h[v];
    for (const auto& e : edges) {
      const bool same = (((mask >> e.u) ^ (mask >> e.v)) & 1U) == 0;
      w += same ? e.beta : -e.beta;
    }
    return w;
  }
};

// Visits every mask that has `plus` bits set, `minus` bits clear, and any
// value on the remaining bits.
template <typename F>
void for_each_completion(int n, std::uint64_t plus, std::uint64_t minus, F&& f) {
  std::vector<int> open;
  for (int v = 0; v < n; ++v)
    if (!(((plus | minus) >> v) & 1U)) open.push_back(v);
  const std::uint64_t count = std::uint64_t{1} << open.size();
  for (std::uint64_t k = 0; k < count; ++k) {
    std::uint64_t mask = plus;
    for (std::size_t i = 0; i < open.size(); ++i)
      if ((k >> i) & 1U) mask |= std::uint64_t{1} << open[i];
    f(mask);
  }
}

void pin_masks(const IsingModel& m, std::uint64_t& plus, std::uint64_t& minus) {
  plus = minus = 0;
  for (Vertex v = 0; v < m.size(); ++v) {
    const auto& f = m.graph().field(v);
    if (f.pin == Pin::Plus) plus |= std::uint64_t{1} << v;
    if (f.pin == Pin::Minus) minus |= std::uint64_t{1} << v;
  }
}

void check_size(const IsingModel& m) {
  if (m.size() > exact_size_cap) {
    throw SizeError("exact enumeration is capped at n = " + std::to_string(exact_size_cap) +
                    ", got n = " + std::to_string(m.size()));
  }
}

}  // namespace

ExactDistribution exact_distribution(const IsingModel& m) {
  check_size(m);
  const int n = m.size();
  const Enumerator en(m);
  std::uint64_t plus = 0, minus = 0;
  pin_masks(m, plus, minus);

  ExactDistribution d;
  d.n = n;
  const Eigen::Index states = Eigen::Index{1} << n;
  Eigen::VectorXd logw = Eigen::VectorXd::Constant(states, -std::numeric_limits<double>::infinity());
  double top = -std::numeric_limits<double>::infinity();
  for_each_completion(n, plus, minus, [&](std::uint64_t mask) {
    const double w = en.log_weight(mask);
    logw[static_cast<Eigen::Index>(mask)] = w;
    top = std::max(top, w);
  });
  // Scalar exp: the vectorized one maps -inf to a denormal, not 0.
  d.probs = logw.unaryExpr([top](double w) { return std::exp(w - top); });
  const double total = d.probs.sum();
  d.probs /= total;
  d.log_z = top + std::log(total);
  return d;
}

double exact_conditional_marginal(const IsingModel& m, Vertex v, const PartialConfig& cond) {
  check_size(m);
  if (!m.graph().valid(v)) throw ParameterError("vertex out of range");
  if (cond.size() != m.size()) throw ParameterError("conditioning has the wrong length");
  if (cond.assigned(v)) throw ContractViolation("query vertex is already conditioned");

  std::uint64_t plus = 0, minus = 0;
  pin_masks(m, plus, minus);
  for (Vertex u = 0; u < m.size(); ++u) {
    if (!cond.assigned(u)) continue;
    const std::uint64_t bit = std::uint64_t{1} << u;
    if (cond[u] > 0) plus |= bit; else minus |= bit;
  }
  if (plus & minus) throw ConditioningError("conditioning contradicts a pinned spin");

  const Enumerator en(m);
  const std::uint64_t vbit = std::uint64_t{1} << v;
  double top = -std::numeric_limits<double>::infinity();
  std::vector<std::pair<std::uint64_t, double>> terms;
  for_each_completion(m.size(), plus, minus, [&](std::uint64_t mask) {
    const double w = en.log_weight(mask);
    top = std::max(top, w);
    terms.emplace_back(mask, w);
  });
  if (terms.empty()) throw ConditioningError("conditioning event is empty");
  double up = 0.0, total = 0.0;
  for (const auto& [mask, w] : terms) {
    const double p = std::exp(w - top);
    total += p;
    if (mask & vbit) up += p;
  }
  return up / total;
}

IsingModel clamp_large_fields(const IsingModel& m) {
  const double beta = m.beta_max();
  const int n = m.size();
  if (beta <= 0.0) return m;
  const double threshold = 10.0 * beta * n;

  const WeightedGraph& g = m.graph();
  std::vector<VertexField> fields(g.fields().begin(), g.fields().end());
  for (auto& f : fields) {
    if (f.pinned()) continue;
    if (f.h > threshold) f.pin = Pin::Plus;
    else if (f.h < -threshold) f.pin = Pin::Minus;
  }

  WeightedGraph out(n);
  for (const Edge& e : g.edges()) {
    const bool pu = fields[e.u].pinned(), pv = fields[e.v].pinned();
    if (!pu && !pv) {
      out.add_edge(e.u, e.v, e.beta);
    } else if (pu && !pv) {
      fields[e.v].h += e.beta * fields[e.u].spin();
    } else if (!pu && pv) {
      fields[e.u].h += e.beta * fields[e.v].spin();
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    if (!fields[v].pinned() && std::abs(fields[v].h) > 100.0 * beta * n) {
      throw InvariantFailure("clamping left |h| > 100 beta n at vertex " + std::to_string(v));
    }
    out.set_field(v, fields[v]);
  }
  return IsingModel(std::move(out));
}

double tv_distance(const ExactDistribution& p, const ExactDistribution& q) {
  if (p.probs.size() != q.probs.size()) {
    throw ParameterError("TV distance between distributions of different support");
  }
  return tv_distance(p.probs, q.probs);
}

}  // namespace ising
