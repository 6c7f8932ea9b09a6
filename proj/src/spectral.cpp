#include <Eigen/Eigenvalues>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "ising/dynamics.hpp"
#include "ising/error.hpp"

namespace ising {

Spectrum spectral_analysis(const TransitionMatrix& t) {
  if (!t.reversible) {
    throw ParameterError("spectral analysis needs a reversible kernel (balance error " +
                         std::to_string(t.max_balance_error) + ")");
  }
  Spectrum out;
  if (t.P.rows() <= 1) {
    out.eigenvalues = Eigen::VectorXd::Ones(t.P.rows());
    return out;
  }
  const Eigen::VectorXd root = t.stationary.cwiseSqrt();
  const Eigen::VectorXd inv_root = root.cwiseInverse();
  Eigen::MatrixXd sym = root.asDiagonal() * t.P * inv_root.asDiagonal();
  sym = 0.5 * (sym + sym.transpose()).eval();

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(sym, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw Error("eigenvalue solver did not converge");
  out.eigenvalues = solver.eigenvalues();
  const Eigen::Index m = out.eigenvalues.size();
  const double second = out.eigenvalues[m - 2];
  const double smallest = out.eigenvalues[0];
  out.gap = std::min(1.0 - second, 1.0 - std::abs(smallest));
  out.relaxation_time = 1.0 / out.gap;
  return out;
}

namespace {

double worst_tv(const Eigen::MatrixXd& power, const Eigen::VectorXd& pi) {
  return 0.5 * (power.rowwise() - pi.transpose()).cwiseAbs().rowwise().sum().maxCoeff();
}

}  // namespace

double worst_case_tv(const TransitionMatrix& t, std::uint64_t steps) {
  Eigen::MatrixXd result = Eigen::MatrixXd::Identity(t.P.rows(), t.P.cols());
  Eigen::MatrixXd base = t.P;
  for (std::uint64_t s = steps; s; s >>= 1) {
    if (s & 1U) result = (result * base).eval();
    if (s > 1) base = (base * base).eval();
  }
  return worst_tv(result, t.stationary);
}

std::uint64_t exact_mixing_time(const TransitionMatrix& t, const ExactDistribution& dist) {
  if (t.states.size() > (std::size_t{1} << transition_free_cap)) {
    throw SizeError("exact mixing time is capped at " + std::to_string(transition_free_cap) +
                    " free vertices");
  }
  Eigen::VectorXd pi(static_cast<Eigen::Index>(t.states.size()));
  for (std::size_t k = 0; k < t.states.size(); ++k)
    pi[static_cast<Eigen::Index>(k)] = dist.probs[static_cast<Eigen::Index>(t.states[k])];

  const double threshold = 1.0 / (2.0 * std::numbers::e);
  const Eigen::Index size = t.P.rows();
  if (worst_tv(Eigen::MatrixXd::Identity(size, size), pi) <= threshold) return 0;

  // powers[j] = P^(2^j); stop at the first power that is mixed.
  std::vector<Eigen::MatrixXd> powers{t.P};
  while (worst_tv(powers.back(), pi) > threshold) {
    if (powers.size() >= 62) throw Error("chain did not mix within 2^62 steps");
    powers.push_back(powers.back() * powers.back());
  }
  // Largest s with d(s) > threshold, assembled bit by bit from the top.
  Eigen::MatrixXd current = Eigen::MatrixXd::Identity(size, size);
  std::uint64_t s = 0;
  for (std::size_t j = powers.size() - 1; j-- > 0;) {
    Eigen::MatrixXd candidate = current * powers[j];
    if (worst_tv(candidate, pi) > threshold) {
      current = std::move(candidate);
      s += std::uint64_t{1} << j;
    }
  }
  return s + 1;
}

}  // namespace ising
