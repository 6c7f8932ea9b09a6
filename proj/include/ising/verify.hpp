#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "ising/graph.hpp"

namespace ising::verify {

/// One checked instance: the measured value must not exceed the bound
/// (or, for lower-bound rows, must not fall below it; `ok` is authoritative).
struct CheckRow {
  std::string instance;
  double bound = 0.0;
  double measured = 0.0;
  bool ok = true;
};

struct CheckReport {
  std::string name;
  std::vector<CheckRow> rows;
  std::vector<std::string> notes;

  std::size_t violations() const;
  bool passed() const { return !rows.empty() && violations() == 0; }
  void print(std::ostream& out, bool all_rows = true) const;
};

// ----- weitz-identity ------------------------------------------------------

struct WeitzIdentityOptions {
  int models = 200;
  int max_n = 8;
  int max_conditioned = 3;
  double tolerance = 1e-9;
  std::uint64_t seed = 1;
};
/// SAW-tree marginal at L = n + 1 against enumeration, for every vertex and
/// every conditioning set of size <= max_conditioned (random spins).
CheckReport weitz_identity(const WeitzIdentityOptions& o = {});

// ----- tree-bounds ---------------------------------------------------------

struct PathDecayOptions {
  int max_length = 12;
  double tolerance = 1e-12;
  std::uint64_t seed = 2;
};
/// Two-point influence across a path with heterogeneous couplings equals the
/// product of tanh(beta_i), by the tree recursion and by enumeration.
CheckReport path_decay(const PathDecayOptions& o = {});

struct TreeBoundaryOptions {
  int trees = 1000;
  double mean_offspring = 2.0;
  int max_depth = 8;
  double pin_probability = 0.1;
  std::uint64_t seed = 3;
};
/// Boundary influence <= |S(v,l)| tanh(beta)^l on random GW trees.
CheckReport tree_boundary_bound(const TreeBoundaryOptions& o = {});

struct TreeRelaxationOptions {
  int max_n = 8;
  std::vector<double> betas{0.2, 0.5, 1.0};
  int instances_per_shape = 3;
  std::uint64_t seed = 4;
};
/// Continuous-time relaxation <= exp(4 beta m(T)) over every tree shape.
CheckReport tree_relaxation_bound(const TreeRelaxationOptions& o = {});

struct FieldDominationOptions {
  int trees = 500;
  std::uint64_t seed = 5;
  double slack = 1e-12;
};
/// Two-point influence with fields <= the same influence with h = 0.
CheckReport field_free_domination(const FieldDominationOptions& o = {});

// ----- spectral ------------------------------------------------------------

struct MixingSandwichOptions {
  int models = 50;
  int max_n = 8;
  std::uint64_t seed = 6;
};
/// relaxation <= exact mixing time <= relaxation (1 + log(1 / min P) / 2),
/// together with detailed balance of each kernel.
CheckReport mixing_sandwich(const MixingSandwichOptions& o = {});

// ----- sampler-tv ----------------------------------------------------------

struct SamplerTvOptions {
  int min_cycle = 4;
  int max_cycle = 10;
  double cycle_beta = 0.4;
  int random_graphs = 50;
  int max_n = 10;
  double max_beta = 0.5;
  double exact_tolerance = 1e-8;
  std::vector<int> truncated_depths{1, 2, 3};
  std::uint64_t seed = 7;
};
/// Output law of the sequential sampler: exact at L = n + 1, and within the
/// chained bounds under truncation.
CheckReport sampler_tv(const SamplerTvOptions& o = {});

// ----- coupling ------------------------------------------------------------

struct CouplingSoundnessOptions {
  int runs = 100;
  std::uint64_t steps_per_run = 10'000;
  std::uint64_t seed = 8;
};
/// Audits X+ >= X- after every step and checks coalesced chains stay equal.
CheckReport coupling_soundness(const CouplingSoundnessOptions& o = {});

struct CouplingTrendOptions {
  double mean_degree = 2.0;
  double beta = 0.05;
  std::vector<int> sizes{250, 500, 1000, 2000};
  int seeds = 20;
  double max_slope = 2.0;
  std::uint64_t seed = 9;
};
/// All runs couple within the default cap; log-log slope of the median
/// coupling time against n stays below max_slope.
CheckReport coupling_trend(const CouplingTrendOptions& o = {});

struct StarSlowdownOptions {
  std::vector<int> leaves{4, 6, 8, 10};
  double beta = 1.0;
  int seeds = 201;
  double min_ratio = 1.5;
  std::uint64_t seed = 10;
};
/// Median coupling time on K_{1,s} grows by >= min_ratio per step of s.
CheckReport star_slowdown(const StarSlowdownOptions& o = {});

// ----- structure -----------------------------------------------------------

struct SphereBoundOptions {
  int trees = 1000;
  double mean_offspring = 2.0;
  std::vector<int> radii{2, 3, 4};
  std::uint64_t seed = 11;
};
/// |S(v,a)| <= ((m - a + 1) / a)^a with m = m(v, a), on random GW trees.
CheckReport sphere_bound(const SphereBoundOptions& o = {});

struct RandomGraphStructureOptions {
  int n = 5000;
  double mean_degree = 2.0;
  int seeds = 10;
  long max_excess = 5;
  int saw_samples = 200;
  std::uint64_t seed = 12;
};
/// Max tree excess of radius ceil(0.3 ln n / ln d) balls, plus the
/// sub-multiplicative SAW growth bound on sampled vertices.
CheckReport random_graph_structure(const RandomGraphStructureOptions& o = {});

// ----- suites --------------------------------------------------------------

const std::vector<std::string>& suite_names();
/// Throws ParameterError for an unknown suite.
std::vector<CheckReport> run_suite(const std::string& name, std::uint64_t seed = 0);

// ----- helpers shared with tests -------------------------------------------

/// All unlabeled trees on n vertices, each as a parent array rooted at 0
/// with parent ids smaller than child ids.
std::vector<std::vector<int>> tree_shapes(int n);
RootedTree tree_from_parents(const std::vector<int>& parent);

/// Least-squares slope of log(y) against log(x).
double log_log_slope(const std::vector<double>& x, const std::vector<double>& y);

double median(std::vector<double> values);

}  // namespace ising::verify
