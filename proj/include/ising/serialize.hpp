#pragma once

#include <cstdint>

#include "json.hpp"

#include "ising/dynamics.hpp"
#include "ising/model.hpp"
#include "ising/sampler.hpp"

namespace ising {

using json = nlohmann::ordered_json;

/// {"n", "log_z", "probs"}; probs are in mask order, vertex 0 least significant.
json to_json(const ExactDistribution& d);
ExactDistribution exact_distribution_from_json(const json& j);

struct CouplingRecordMeta {
  std::uint64_t seed = 0;
  int n = 0;
  double d = 0.0;
  double beta = 0.0;
};

/// {seed, n, d, beta, coupled, steps, checkpoints: [[step, hamming], ...]}.
/// `steps` is the coupling time when coupled and the cap otherwise.
json to_json(const CouplingResult& r, const CouplingRecordMeta& meta);

/// {L, order, p, spins, saw_sizes}.
json to_json(const SamplerRun& run);

}  // namespace ising
