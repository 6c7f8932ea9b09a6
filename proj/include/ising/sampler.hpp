#pragma once

#include <cstddef>
#include <vector>

#include "ising/dynamics.hpp"
#include "ising/model.hpp"
#include "ising/saw_tree.hpp"

namespace ising {

/// Record of one sequential SAW-tree sampling pass. Vertices are visited in
/// ascending id; pinned vertices get p = 1 or 0 and still consume a variate.
struct SamplerRun {
  int depth = 0;
  std::vector<Vertex> order;
  std::vector<double> p;
  SpinConfig spins;
  std::vector<std::size_t> saw_sizes;
};

/// For each vertex in turn: p_i = SAW-tree marginal of v_i at depth L given
/// the spins already assigned; set + iff U_i <= p_i.
SamplerRun algorithm1_sample(const IsingModel& m, int depth, UpdateStream& stream,
                             std::size_t budget = default_saw_budget);

inline constexpr int output_law_cap = 14;

/// Exact law of algorithm1_sample's output, by expanding every prefix.
ExactDistribution algorithm1_output_law(const IsingModel& m, int depth,
                                        std::size_t budget = default_saw_budget);

/// Per step i, the largest frontier bracket width (frontier pinned + minus
/// frontier pinned -) over all assignments of the earlier vertices. The sum
/// bounds TV(output law, Gibbs law).
std::vector<double> algorithm1_bracket_widths(const IsingModel& m, int depth,
                                              std::size_t budget = default_saw_budget);

/// Sum over v of |S_saw(v, L)| (tanh beta)^L.
double algorithm1_sphere_bound(const IsingModel& m, int depth,
                               std::size_t budget = default_saw_budget);

/// ceil(r ln n), at least 0.
int radius_for(double r, int n);

/// (1 + gamma) / -ln(b tanh beta): radii r above this make the truncation
/// error O(n^-gamma) when every SAW ball of radius a log n has <= b^(a log n)
/// nodes. Throws ParameterError unless b tanh(beta) < 1.
double sufficient_radius_factor(double b, double beta, double gamma);

}  // namespace ising
