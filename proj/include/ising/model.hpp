#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <initializer_list>
#include <vector>

#include "ising/graph.hpp"

namespace ising {

/// Full assignment V -> {-1, +1}.
class SpinConfig {
 public:
  SpinConfig() = default;
  explicit SpinConfig(int n, int spin = 1) : s_(n, static_cast<std::int8_t>(spin > 0 ? 1 : -1)) {}
  SpinConfig(std::initializer_list<int> spins);

  /// Bit v set means vertex v is +.
  static SpinConfig from_mask(int n, std::uint64_t mask);
  std::uint64_t mask() const;

  int size() const noexcept { return static_cast<int>(s_.size()); }
  int operator[](Vertex v) const { return s_[v]; }
  void set(Vertex v, int spin) { s_[v] = static_cast<std::int8_t>(spin > 0 ? 1 : -1); }

  /// Pointwise order: this >= other at every vertex.
  bool dominates(const SpinConfig& other) const;
  int hamming(const SpinConfig& other) const;

  const std::vector<std::int8_t>& spins() const noexcept { return s_; }
  friend bool operator==(const SpinConfig&, const SpinConfig&) = default;

 private:
  std::vector<std::int8_t> s_;
};

/// Assignment of a subset of vertices; 0 marks an unassigned vertex.
class PartialConfig {
 public:
  PartialConfig() = default;
  explicit PartialConfig(int n) : s_(n, 0) {}

  int size() const noexcept { return static_cast<int>(s_.size()); }
  int operator[](Vertex v) const { return s_[v]; }
  bool assigned(Vertex v) const { return s_[v] != 0; }
  void set(Vertex v, int spin) { s_[v] = static_cast<std::int8_t>(spin > 0 ? 1 : -1); }
  void unset(Vertex v) { s_[v] = 0; }
  int count() const;

 private:
  std::vector<std::int8_t> s_;
};

/// Ferromagnetic Ising model on a weighted graph.
class IsingModel {
 public:
  IsingModel() = default;
  explicit IsingModel(WeightedGraph g);

  const WeightedGraph& graph() const noexcept { return graph_; }
  int size() const noexcept { return graph_.num_vertices(); }
  double beta_max() const noexcept { return beta_max_; }

  bool is_pinned(Vertex v) const { return graph_.field(v).pinned(); }
  const std::vector<Vertex>& free_vertices() const noexcept { return free_; }
  bool respects_pins(const SpinConfig& s) const;

  /// All-+ or all-- configuration with pinned vertices at their pins.
  SpinConfig constant_config(int spin) const;

  /// h_v + sum_u beta_uv s_u.
  double local_field(const SpinConfig& s, Vertex v) const;

 private:
  WeightedGraph graph_;
  double beta_max_ = 0.0;
  std::vector<Vertex> free_;
};

/// Numerically stable 1 / (1 + exp(-2 x)).
double logistic2(double x);

/// sum_edges beta_uv s_u s_v + sum_v h_v s_v; -inf if s contradicts a pin.
double log_weight(const IsingModel& m, const SpinConfig& s);

/// P(s_v = + | all other spins). Throws ContractViolation if v is pinned.
double conditional_plus_prob(const IsingModel& m, const SpinConfig& s, Vertex v);

inline constexpr int exact_size_cap = 20;

/// Probabilities over all 2^n configurations, indexed by SpinConfig::mask().
struct ExactDistribution {
  int n = 0;
  double log_z = 0.0;
  Eigen::VectorXd probs;

  double prob(const SpinConfig& s) const { return probs[static_cast<Eigen::Index>(s.mask())]; }
  Eigen::Index states() const { return probs.size(); }
};

ExactDistribution exact_distribution(const IsingModel& m);

/// P(s_v = + | cond) by enumeration. Throws ConditioningError when the
/// conditioning event has zero probability.
double exact_conditional_marginal(const IsingModel& m, Vertex v, const PartialConfig& cond);

/// Pins vertices with |h_v| > 10 beta n and folds them into their
/// neighbors' fields; the edges to pinned vertices are removed.
IsingModel clamp_large_fields(const IsingModel& m);

/// Half the L1 distance; throws ParameterError on size mismatch.
double tv_distance(const ExactDistribution& p, const ExactDistribution& q);

template <typename DerivedA, typename DerivedB>
double tv_distance(const Eigen::MatrixBase<DerivedA>& p, const Eigen::MatrixBase<DerivedB>& q) {
  return 0.5 * (p - q).template lpNorm<1>();
}

}  // namespace ising
