#include "ising/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "ising/error.hpp"

namespace ising {

int glauber_update(const IsingModel& m, SpinConfig& s, Vertex v, double u) {
  const int spin = u <= conditional_plus_prob(m, s, v) ? 1 : -1;
  s.set(v, spin);
  return spin;
}

SpinConfig glauber_step(const IsingModel& m, const SpinConfig& s, Vertex v, double u) {
  SpinConfig out = s;
  glauber_update(m, out, v, u);
  return out;
}

SpinConfig run_chain(const IsingModel& m, SpinConfig s, std::uint64_t steps,
                     UpdateStream& stream) {
  if (!m.respects_pins(s)) throw ContractViolation("initial configuration violates a pin");
  const auto& free = m.free_vertices();
  if (free.empty()) return s;
  for (std::uint64_t t = 0; t < steps; ++t) {
    const auto up = stream.next(free.size());
    glauber_update(m, s, free[up.index], up.u);
  }
  return s;
}

// ---------------------------------------------------------------------------

std::uint64_t default_coupling_cap(const IsingModel& m) {
  const double n = std::max(1, m.size());
  const double cap = 50.0 * n * std::max(1.0, std::log(n)) *
                     std::exp(4.0 * m.beta_max() * m.graph().max_degree());
  constexpr double limit = 0x1.0p62;
  return static_cast<std::uint64_t>(std::ceil(std::min(cap, limit)));
}

std::vector<std::uint64_t> geometric_checkpoints(std::uint64_t cap) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t s = 1; s <= cap; s *= 2) {
    out.push_back(s);
    if (s > cap / 2) break;
  }
  return out;
}

CouplingResult monotone_coupled_run(const IsingModel& m, UpdateStream& stream,
                                    const CouplingOptions& options) {
  CouplingResult r;
  r.cap = options.cap ? options.cap : default_coupling_cap(m);
  auto checkpoints = options.checkpoints.empty() ? geometric_checkpoints(r.cap)
                                                 : options.checkpoints;
  std::sort(checkpoints.begin(), checkpoints.end());
  auto next_checkpoint = checkpoints.begin();

  SpinConfig upper = m.constant_config(+1);
  SpinConfig lower = m.constant_config(-1);
  int hamming = upper.hamming(lower);
  const auto& free = m.free_vertices();
  if (hamming == 0) r.coupling_time = 0;
  if (free.empty()) {
    r.checkpoints.emplace_back(0, 0);
    return r;
  }

  std::uint64_t stop = r.coupling_time ? options.steps_after_coupling : r.cap;
  std::uint64_t t = 0;
  while (t < stop) {
    const auto up = stream.next(free.size());
    const Vertex v = free[up.index];
    const bool differed = upper[v] != lower[v];
    const int a = glauber_update(m, upper, v, up.u);
    const int b = glauber_update(m, lower, v, up.u);
    ++t;
    if (a < b) {
      throw InvariantFailure("monotone sandwich violated at step " + std::to_string(t) +
                             ", vertex " + std::to_string(v));
    }
    hamming += (a != b) - differed;
    while (next_checkpoint != checkpoints.end() && *next_checkpoint <= t) {
      if (*next_checkpoint == t) {
        if (!upper.dominates(lower)) {
          throw InvariantFailure("monotone sandwich violated at checkpoint " + std::to_string(t));
        }
        r.checkpoints.emplace_back(t, hamming);
      }
      ++next_checkpoint;
    }
    if (r.coupling_time) {
      if (hamming != 0) {
        throw InvariantFailure("coalesced chains split at step " + std::to_string(t));
      }
    } else if (hamming == 0) {
      r.coupling_time = t;
      stop = t + options.steps_after_coupling;
    }
  }
  r.steps_run = t;
  if (r.checkpoints.empty() || r.checkpoints.back().first != t) r.checkpoints.emplace_back(t, hamming);
  return r;
}

// ---------------------------------------------------------------------------

namespace {

struct BlockLaw {
  std::vector<Vertex> sites;    // free vertices of the block
  std::vector<double> weights;  // normalized, indexed by descending mask order
};

BlockLaw block_law(const IsingModel& m, const SpinConfig& s, const std::vector<Vertex>& block) {
  const WeightedGraph& g = m.graph();
  BlockLaw law;
  for (Vertex v : block) {
    if (!g.valid(v)) throw ParameterError("block vertex out of range");
    if (!m.is_pinned(v)) law.sites.push_back(v);
  }
  if (law.sites.size() > static_cast<std::size_t>(block_size_cap)) {
    throw SizeError("block of size " + std::to_string(law.sites.size()) + " exceeds cap " +
                    std::to_string(block_size_cap));
  }
  const std::size_t k = law.sites.size();
  const std::uint64_t count = std::uint64_t{1} << k;
  std::vector<int> slot(g.num_vertices(), -1);
  for (std::size_t i = 0; i < k; ++i) slot[law.sites[i]] = static_cast<int>(i);

  std::vector<double> logw(count);
  double top = -std::numeric_limits<double>::infinity();
  for (std::uint64_t r = 0; r < count; ++r) {
    const std::uint64_t mask = count - 1 - r;
    auto spin = [&](Vertex v) {
      return slot[v] >= 0 ? (((mask >> slot[v]) & 1U) ? 1 : -1) : s[v];
    };
    double w = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
      const Vertex v = law.sites[i];
      const int sv = spin(v);
      w += g.field(v).h * sv;
      for (const auto& nb : g.neighbors(v)) {
        // Edges inside the block are counted once, from the smaller slot.
        if (slot[nb.v] >= 0 && slot[nb.v] < static_cast<int>(i)) continue;
        w += nb.beta * sv * spin(nb.v);
      }
    }
    logw[r] = w;
    top = std::max(top, w);
  }
  double total = 0.0;
  law.weights.resize(count);
  for (std::uint64_t r = 0; r < count; ++r) total += law.weights[r] = std::exp(logw[r] - top);
  for (auto& w : law.weights) w /= total;
  return law;
}

void apply_block_config(SpinConfig& s, const BlockLaw& law, std::uint64_t r) {
  const std::uint64_t mask = (std::uint64_t{1} << law.sites.size()) - 1 - r;
  for (std::size_t i = 0; i < law.sites.size(); ++i) s.set(law.sites[i], ((mask >> i) & 1U) ? 1 : -1);
}

}  // namespace

SpinConfig block_dynamics_step(const IsingModel& m, const SpinConfig& s, const Blocks& blocks,
                               std::size_t i, UpdateStream& stream) {
  if (i >= blocks.size()) throw ParameterError("block index out of range");
  const BlockLaw law = block_law(m, s, blocks[i]);
  const double u = stream.next_uniform();
  std::uint64_t pick = law.weights.size() - 1;
  double cdf = 0.0;
  for (std::uint64_t r = 0; r < law.weights.size(); ++r) {
    cdf += law.weights[r];
    if (u <= cdf) {
      pick = r;
      break;
    }
  }
  SpinConfig out = s;
  apply_block_config(out, law, pick);
  return out;
}

SpinConfig block_dynamics_run(const IsingModel& m, SpinConfig s, const Blocks& blocks,
                              std::uint64_t steps, UpdateStream& stream) {
  if (blocks.empty()) throw ParameterError("block dynamics needs at least one block");
  for (std::uint64_t t = 0; t < steps; ++t) {
    const auto i = stream.next(blocks.size()).index;
    s = block_dynamics_step(m, s, blocks, i, stream);
  }
  return s;
}

// ---------------------------------------------------------------------------

namespace {

TransitionMatrix empty_kernel(const IsingModel& m) {
  if (static_cast<int>(m.free_vertices().size()) > transition_free_cap) {
    throw SizeError("transition matrix is capped at " + std::to_string(transition_free_cap) +
                    " free vertices");
  }
  const ExactDistribution dist = exact_distribution(m);
  TransitionMatrix t;
  t.n = m.size();
  for (Eigen::Index k = 0; k < dist.states(); ++k)
    if (dist.probs[k] > 0.0) t.states.push_back(static_cast<std::uint64_t>(k));
  const auto size = static_cast<Eigen::Index>(t.states.size());
  t.P = Eigen::MatrixXd::Zero(size, size);
  t.stationary.resize(size);
  for (Eigen::Index k = 0; k < size; ++k)
    t.stationary[k] = dist.probs[static_cast<Eigen::Index>(t.states[k])];
  return t;
}

Eigen::Index state_index(const TransitionMatrix& t, std::uint64_t mask) {
  auto it = std::lower_bound(t.states.begin(), t.states.end(), mask);
  return static_cast<Eigen::Index>(it - t.states.begin());
}

void finish_kernel(TransitionMatrix& t) {
  const Eigen::Index size = t.P.rows();
  for (Eigen::Index k = 0; k < size; ++k) {
    t.P(k, k) = 0.0;
    t.P(k, k) = 1.0 - t.P.row(k).sum();
  }
  t.max_row_error = (t.P.rowwise().sum().array() - 1.0).abs().maxCoeff();
  const Eigen::MatrixXd flow = t.stationary.asDiagonal() * t.P;
  t.max_balance_error = (flow - flow.transpose()).cwiseAbs().maxCoeff();
  t.reversible = t.max_row_error <= 1e-12 && t.max_balance_error <= 1e-10;
}

}  // namespace

TransitionMatrix build_transition_matrix(const IsingModel& m) {
  TransitionMatrix t = empty_kernel(m);
  const auto& free = m.free_vertices();
  const double select = free.empty() ? 0.0 : 1.0 / static_cast<double>(free.size());
  for (Eigen::Index k = 0; k < t.P.rows(); ++k) {
    const SpinConfig s = SpinConfig::from_mask(m.size(), t.states[k]);
    for (Vertex v : free) {
      const double p_plus = conditional_plus_prob(m, s, v);
      const double p_flip = s[v] > 0 ? 1.0 - p_plus : p_plus;
      const Eigen::Index j = state_index(t, t.states[k] ^ (std::uint64_t{1} << v));
      t.P(k, j) += select * p_flip;
    }
  }
  finish_kernel(t);
  return t;
}

TransitionMatrix build_block_transition_matrix(const IsingModel& m, const Blocks& blocks) {
  if (blocks.empty()) throw ParameterError("block dynamics needs at least one block");
  TransitionMatrix t = empty_kernel(m);
  const double select = 1.0 / static_cast<double>(blocks.size());
  for (Eigen::Index k = 0; k < t.P.rows(); ++k) {
    const SpinConfig s = SpinConfig::from_mask(m.size(), t.states[k]);
    for (const auto& block : blocks) {
      const BlockLaw law = block_law(m, s, block);
      for (std::uint64_t r = 0; r < law.weights.size(); ++r) {
        SpinConfig next = s;
        apply_block_config(next, law, r);
        const Eigen::Index j = state_index(t, next.mask());
        if (j != k) t.P(k, j) += select * law.weights[r];
      }
    }
  }
  finish_kernel(t);
  return t;
}

}  // namespace ising
