#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "ising/model.hpp"
#include "ising/rng.hpp"

namespace ising {

/// Deterministic sequence of (index, uniform) update variables. Coupled
/// chains share one stream (or copies of it) so they see identical updates.
class UpdateStream {
 public:
  struct Update {
    std::uint64_t index;  // uniform on [0, count)
    double u;             // uniform on [0, 1)
  };

  explicit UpdateStream(std::uint64_t seed, std::uint64_t stream_index = 0)
      : seed_(seed), rng_(CounterRng::stream(seed, "updates", stream_index)) {}

  Update next(std::uint64_t count) {
    const std::uint64_t i = rng_.below(count);
    return {i, rng_.uniform()};
  }
  double next_uniform() { return rng_.uniform(); }

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t position() const noexcept { return rng_.counter(); }

 private:
  std::uint64_t seed_;
  CounterRng rng_;
};

/// Heat-bath update: s_v becomes + iff u <= P(s_v = + | rest).
SpinConfig glauber_step(const IsingModel& m, const SpinConfig& s, Vertex v, double u);
/// In-place form; returns the new spin.
int glauber_update(const IsingModel& m, SpinConfig& s, Vertex v, double u);

/// `steps` Glauber updates at uniformly chosen free vertices.
SpinConfig run_chain(const IsingModel& m, SpinConfig s0, std::uint64_t steps,
                     UpdateStream& stream);

struct CouplingOptions {
  std::uint64_t cap = 0;                   // 0 selects default_coupling_cap(m)
  std::vector<std::uint64_t> checkpoints;  // empty selects geometric_checkpoints(cap)
  std::uint64_t steps_after_coupling = 0;  // keep running to audit non-splitting
};

struct CouplingResult {
  std::optional<std::uint64_t> coupling_time;  // empty: not coupled by cap
  std::uint64_t steps_run = 0;
  std::uint64_t cap = 0;
  std::vector<std::pair<std::uint64_t, int>> checkpoints;  // (step, Hamming distance)

  bool coupled() const noexcept { return coupling_time.has_value(); }
};

/// 50 n ln(n) exp(4 beta maxdeg), with ln(n) floored at 1 and the result
/// saturated at 2^62.
std::uint64_t default_coupling_cap(const IsingModel& m);
std::vector<std::uint64_t> geometric_checkpoints(std::uint64_t cap);

/// Runs the chains started from all + and all - on one update stream until
/// they meet or the cap is reached. The order X+ >= X- is audited after every
/// step; a violation (or a split after coalescence) throws InvariantFailure.
CouplingResult monotone_coupled_run(const IsingModel& m, UpdateStream& stream,
                                    const CouplingOptions& options = {});

using Blocks = std::vector<std::vector<Vertex>>;
inline constexpr int block_size_cap = 20;

/// Resamples block `i` from its exact conditional law given the rest, by
/// inversion of one uniform over block configurations in descending mask
/// order (all + first).
SpinConfig block_dynamics_step(const IsingModel& m, const SpinConfig& s, const Blocks& blocks,
                               std::size_t i, UpdateStream& stream);

/// Picks a block uniformly from the stream, then applies block_dynamics_step.
SpinConfig block_dynamics_run(const IsingModel& m, SpinConfig s, const Blocks& blocks,
                              std::uint64_t steps, UpdateStream& stream);

inline constexpr int transition_free_cap = 10;

/// Dense kernel over the pin-consistent configurations. `states[k]` is the
/// configuration mask of row/column k and `stationary` the restricted Gibbs
/// law.
struct TransitionMatrix {
  int n = 0;
  std::vector<std::uint64_t> states;
  Eigen::MatrixXd P;
  Eigen::VectorXd stationary;
  bool reversible = false;
  double max_row_error = 0.0;
  double max_balance_error = 0.0;
};

TransitionMatrix build_transition_matrix(const IsingModel& m);
TransitionMatrix build_block_transition_matrix(const IsingModel& m, const Blocks& blocks);

struct Spectrum {
  Eigen::VectorXd eigenvalues;  // ascending
  double gap = 1.0;             // min(1 - lambda_2, 1 - |lambda_min|)
  double relaxation_time = 1.0;
};

/// Eigenvalues of D^{1/2} P D^{-1/2}. Throws ParameterError when the input
/// is not reversible.
Spectrum spectral_analysis(const TransitionMatrix& t);

/// Relaxation time of the rate-1-per-site continuous-time chain.
inline double continuous_relaxation_time(const Spectrum& s, int free_vertices) {
  return s.relaxation_time / free_vertices;
}

/// Worst-start TV distance to stationarity after `steps` steps.
double worst_case_tv(const TransitionMatrix& t, std::uint64_t steps);

/// Smallest s with worst-start TV(P^s, stationary) <= 1/(2e).
std::uint64_t exact_mixing_time(const TransitionMatrix& t, const ExactDistribution& dist);

}  // namespace ising
