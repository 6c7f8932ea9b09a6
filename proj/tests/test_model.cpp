#include <cmath>
#include <limits>

#include "doctest.h"
#include "ising/error.hpp"
#include "ising/model.hpp"
#include "ising/rng.hpp"
#include "oracles.hpp"

using namespace ising;

namespace {

WeightedGraph random_graph(CounterRng& rng, int n, double p, double beta_max, double h_max) {
  WeightedGraph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (rng.uniform() < p) g.add_edge(u, v, beta_max * rng.uniform());
  for (Vertex v = 0; v < n; ++v) g.set_h(v, h_max * (2 * rng.uniform() - 1));
  return g;
}

}  // namespace

TEST_CASE("spin configurations") {
  const SpinConfig s{1, -1, 1};
  CHECK(s.mask() == 0b101);
  CHECK(SpinConfig::from_mask(3, 0b101) == s);
  CHECK(SpinConfig(3, 1).dominates(s));
  CHECK_FALSE(s.dominates(SpinConfig(3, 1)));
  CHECK(s.hamming(SpinConfig(3, -1)) == 2);
  PartialConfig p(4);
  p.set(2, -1);
  CHECK(p.count() == 1);
  CHECK(p[2] == -1);
  p.unset(2);
  CHECK_FALSE(p.assigned(2));
}

TEST_CASE("log weight examples") {
  const IsingModel edge(path_graph(2, 1.0));
  CHECK(log_weight(edge, SpinConfig{1, 1}) == doctest::Approx(1.0));
  CHECK(log_weight(edge, SpinConfig{1, -1}) == doctest::Approx(-1.0));

  WeightedGraph tri = complete_graph(3, 0.5);
  for (Vertex v = 0; v < 3; ++v) tri.set_h(v, 0.2);
  CHECK(log_weight(IsingModel(tri), SpinConfig(3, 1)) == doctest::Approx(2.1));

  WeightedGraph pinned = path_graph(2, 1.0);
  pinned.set_field(0, VertexField::pinned_to(1));
  CHECK(log_weight(IsingModel(pinned), SpinConfig{-1, 1}) ==
        -std::numeric_limits<double>::infinity());
}

TEST_CASE("beta max is cached") {
  WeightedGraph g(3);
  CHECK(IsingModel(g).beta_max() == 0.0);
  g.add_edge(0, 1, 0.3);
  g.add_edge(1, 2, 0.9);
  CHECK(IsingModel(g).beta_max() == 0.9);
}

TEST_CASE("conditional plus probability examples") {
  const IsingModel free3(WeightedGraph(3));
  CHECK(conditional_plus_prob(free3, SpinConfig(3, -1), 1) == doctest::Approx(0.5));

  WeightedGraph iso(1);
  iso.set_h(0, 0.5);
  CHECK(conditional_plus_prob(IsingModel(iso), SpinConfig(1, 1), 0) ==
        doctest::Approx(0.731059).epsilon(1e-6));

  const IsingModel edge(path_graph(2, 0.5));
  CHECK(conditional_plus_prob(edge, SpinConfig{-1, 1}, 0) == doctest::Approx(0.731059).epsilon(1e-6));

  WeightedGraph pinned(2);
  pinned.set_field(1, VertexField::pinned_to(-1));
  CHECK_THROWS_AS(conditional_plus_prob(IsingModel(pinned), SpinConfig{1, -1}, 1), ContractViolation);

  CHECK(logistic2(400.0) == 1.0);
  CHECK(logistic2(-400.0) == doctest::Approx(0.0));
  CHECK(std::isfinite(logistic2(-1e308)));
}

TEST_CASE("exact distribution examples") {
  const ExactDistribution single = exact_distribution(IsingModel(WeightedGraph(1)));
  CHECK(single.probs[0] == doctest::Approx(0.5));
  CHECK(single.probs[1] == doctest::Approx(0.5));

  const ExactDistribution edge = exact_distribution(IsingModel(path_graph(2, 1.0)));
  // e / (2e + 2/e) = 0.440399
  const double agree = std::exp(1.0) / (2 * std::exp(1.0) + 2 * std::exp(-1.0));
  CHECK(edge.probs[0b11] == doctest::Approx(agree).epsilon(1e-12));
  CHECK(edge.probs[0b00] == doctest::Approx(agree).epsilon(1e-12));
  CHECK(edge.probs[0b11] == doctest::Approx(0.440399).epsilon(1e-6));
  CHECK(edge.probs[0b01] == doctest::Approx(0.5 - agree).epsilon(1e-12));
  CHECK(edge.probs[0b10] == doctest::Approx(0.059601).epsilon(1e-5));
  CHECK(edge.log_z == doctest::Approx(std::log(2 * std::exp(1.0) + 2 * std::exp(-1.0))));

  const ExactDistribution tri = exact_distribution(IsingModel(complete_graph(3, 0.2)));
  for (std::uint64_t s = 0; s < 8; ++s) CHECK(tri.probs[s] == doctest::Approx(tri.probs[7 ^ s]));

  CHECK_THROWS_AS(exact_distribution(IsingModel(WeightedGraph(21))), SizeError);
}

TEST_CASE("exact distribution matches the naive oracle and is normalized") {
  CounterRng rng = CounterRng::stream(1, "model-test");
  for (int k = 0; k < 30; ++k) {
    const int n = 1 + static_cast<int>(rng.below(9));
    WeightedGraph g = random_graph(rng, n, 0.5, 2.0, 1.0);
    if (n > 2) g.set_field(1, VertexField::pinned_to(rng.uniform() < 0.5 ? 1 : -1));
    const IsingModel m(g);
    const ExactDistribution d = exact_distribution(m);
    const auto expect = oracle::distribution(oracle::from_graph(g));
    CHECK(d.probs.sum() == doctest::Approx(1.0).epsilon(1e-12));
    for (std::size_t s = 0; s < expect.size(); ++s) {
      CHECK(d.probs[static_cast<Eigen::Index>(s)] >= 0.0);
      CHECK(d.probs[static_cast<Eigen::Index>(s)] == doctest::Approx(expect[s]).epsilon(1e-10));
      if (expect[s] == 0.0) CHECK(d.probs[static_cast<Eigen::Index>(s)] == 0.0);
    }
  }
}

TEST_CASE("global flip symmetry without fields") {
  CounterRng rng = CounterRng::stream(2, "model-test");
  for (int n = 1; n <= 10; ++n) {
    WeightedGraph g = random_graph(rng, n, 0.5, 1.5, 0.0);
    const ExactDistribution d = exact_distribution(IsingModel(g));
    const std::uint64_t all = (std::uint64_t{1} << n) - 1;
    for (std::uint64_t s = 0; s <= all; ++s)
      CHECK(d.probs[static_cast<Eigen::Index>(s)] ==
            doctest::Approx(d.probs[static_cast<Eigen::Index>(all ^ s)]).epsilon(1e-12));
  }
}

TEST_CASE("conditionals are monotone") {
  CounterRng rng = CounterRng::stream(3, "model-test");
  for (int k = 0; k < 200; ++k) {
    const int n = 2 + static_cast<int>(rng.below(8));
    const IsingModel m(random_graph(rng, n, 0.5, 1.5, 1.0));
    SpinConfig x(n), y(n);
    for (Vertex v = 0; v < n; ++v) {
      const int a = rng.uniform() < 0.5 ? 1 : -1;
      const int b = rng.uniform() < 0.5 ? 1 : -1;
      x.set(v, std::max(a, b));
      y.set(v, std::min(a, b));
    }
    const auto v = static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(n)));
    CHECK(conditional_plus_prob(m, x, v) >= conditional_plus_prob(m, y, v));
  }
}

TEST_CASE("conditional plus probability equals full conditioning by enumeration") {
  CounterRng rng = CounterRng::stream(4, "model-test");
  for (int k = 0; k < 100; ++k) {
    const int n = 2 + static_cast<int>(rng.below(7));
    const IsingModel m(random_graph(rng, n, 0.6, 1.5, 1.0));
    const SpinConfig s = SpinConfig::from_mask(n, rng() & ((1U << n) - 1));
    const auto v = static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(n)));
    PartialConfig cond(n);
    for (Vertex u = 0; u < n; ++u)
      if (u != v) cond.set(u, s[u]);
    CHECK(conditional_plus_prob(m, s, v) ==
          doctest::Approx(exact_conditional_marginal(m, v, cond)).epsilon(1e-12));
  }
}

TEST_CASE("exact conditional marginal examples") {
  WeightedGraph g(3);
  g.set_h(0, 0.3);
  g.set_h(1, -0.7);
  PartialConfig none(3);
  CHECK(exact_conditional_marginal(IsingModel(g), 1, none) ==
        doctest::Approx(1.0 / (1.0 + std::exp(1.4))));

  const IsingModel path(path_graph(3, 1.0));
  PartialConfig plus(3), minus(3);
  plus.set(0, 1);
  minus.set(0, -1);
  const double influence =
      exact_conditional_marginal(path, 2, plus) - exact_conditional_marginal(path, 2, minus);
  CHECK(influence == doctest::Approx(0.580026).epsilon(1e-6));
  CHECK(influence == doctest::Approx(std::pow(std::tanh(1.0), 2)).epsilon(1e-12));

  CHECK_THROWS_AS(exact_conditional_marginal(path, 0, plus), ContractViolation);
  WeightedGraph pinned = path_graph(3, 1.0);
  pinned.set_field(0, VertexField::pinned_to(1));
  CHECK_THROWS_AS(exact_conditional_marginal(IsingModel(pinned), 2, minus), ConditioningError);
}

TEST_CASE("clamping examples") {
  WeightedGraph small = path_graph(4, 1.0);
  small.set_h(2, 3.0);
  const IsingModel unchanged = clamp_large_fields(IsingModel(small));
  CHECK(unchanged.graph().edges() == small.edges());
  CHECK(unchanged.free_vertices().size() == 4);

  WeightedGraph big = path_graph(10, 1.0);
  big.set_h(4, 1e6);
  big.set_h(5, 0.25);
  const IsingModel clamped = clamp_large_fields(IsingModel(big));
  CHECK(clamped.graph().field(4).pin == Pin::Plus);
  CHECK(clamped.graph().field(5).h == doctest::Approx(1.25));
  CHECK(clamped.graph().field(3).h == doctest::Approx(1.0));
  CHECK_FALSE(clamped.graph().has_edge(4, 5));

  WeightedGraph two = path_graph(4, 0.5);
  two.set_h(1, 1e6);
  two.set_h(2, -1e6);
  const IsingModel both = clamp_large_fields(IsingModel(two));
  CHECK(both.graph().field(1).pin == Pin::Plus);
  CHECK(both.graph().field(2).pin == Pin::Minus);
  CHECK(both.graph().field(0).h == doctest::Approx(0.5));
  CHECK(both.graph().field(3).h == doctest::Approx(-0.5));
}

TEST_CASE("clamping preserves the conditional law of the free spins") {
  CounterRng rng = CounterRng::stream(6, "model-test");
  for (int k = 0; k < 40; ++k) {
    const int n = 3 + static_cast<int>(rng.below(6));
    WeightedGraph g = random_graph(rng, n, 0.6, 1.0, 1.0);
    if (g.num_edges() == 0) g.add_edge(0, 1, 0.5);
    const auto big = static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(n)));
    const int sign = rng.uniform() < 0.5 ? 1 : -1;
    g.set_h(big, sign * 1e4);
    const IsingModel original(g);
    const IsingModel clamped = clamp_large_fields(original);
    REQUIRE(clamped.is_pinned(big));

    WeightedGraph conditioned = g;
    conditioned.set_field(big, VertexField::pinned_to(sign));
    const ExactDistribution want = exact_distribution(IsingModel(conditioned));
    const ExactDistribution got = exact_distribution(clamped);
    CHECK(tv_distance(want, got) <= 1e-9);
  }
}

TEST_CASE("total variation examples") {
  ExactDistribution p, q;
  p.n = q.n = 1;
  p.probs = Eigen::Vector2d(0.5, 0.5);
  q.probs = Eigen::Vector2d(0.75, 0.25);
  CHECK(tv_distance(p, p) == 0.0);
  CHECK(tv_distance(p, q) == doctest::Approx(0.25));
  ExactDistribution a = p, b = p;
  a.probs = Eigen::Vector2d(1.0, 0.0);
  b.probs = Eigen::Vector2d(0.0, 1.0);
  CHECK(tv_distance(a, b) == 1.0);
  ExactDistribution wide;
  wide.probs = Eigen::Vector4d(0.25, 0.25, 0.25, 0.25);
  CHECK_THROWS_AS(tv_distance(p, wide), ParameterError);
}
