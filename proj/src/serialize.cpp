#include "ising/serialize.hpp"

#include <cmath>

#include "ising/error.hpp"

namespace ising {

json to_json(const ExactDistribution& d) {
  json probs = json::array();
  for (Eigen::Index i = 0; i < d.probs.size(); ++i) probs.push_back(d.probs[i]);
  return json{{"n", d.n}, {"log_z", d.log_z}, {"probs", std::move(probs)}};
}

ExactDistribution exact_distribution_from_json(const json& j) {
  ExactDistribution d;
  try {
    d.n = j.at("n").get<int>();
    d.log_z = j.at("log_z").get<double>();
    const auto& probs = j.at("probs");
    if (d.n < 0 || d.n > 62 || probs.size() != (std::size_t{1} << d.n)) {
      throw ParameterError("distribution must list 2^n probabilities");
    }
    d.probs.resize(static_cast<Eigen::Index>(probs.size()));
    for (std::size_t i = 0; i < probs.size(); ++i)
      d.probs[static_cast<Eigen::Index>(i)] = probs[i].get<double>();
  } catch (const json::exception& e) {
    throw ParameterError(std::string("malformed distribution JSON: ") + e.what());
  }
  return d;
}

json to_json(const CouplingResult& r, const CouplingRecordMeta& meta) {
  json checkpoints = json::array();
  for (const auto& [step, hamming] : r.checkpoints) checkpoints.push_back({step, hamming});
  return json{{"seed", meta.seed},
              {"n", meta.n},
              {"d", meta.d},
              {"beta", meta.beta},
              {"coupled", r.coupled()},
              {"steps", r.coupled() ? *r.coupling_time : r.cap},
              {"checkpoints", std::move(checkpoints)}};
}

json to_json(const SamplerRun& run) {
  json spins = json::array();
  for (auto s : run.spins.spins()) spins.push_back(static_cast<int>(s));
  return json{{"L", run.depth},
              {"order", run.order},
              {"p", run.p},
              {"spins", std::move(spins)},
              {"saw_sizes", run.saw_sizes}};
}

}  // namespace ising
