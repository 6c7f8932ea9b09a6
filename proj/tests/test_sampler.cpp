#include <cmath>
#include <numeric>
#include <string>

#include "doctest.h"
#include "ising/error.hpp"
#include "ising/sampler.hpp"
#include "ising/verify.hpp"

using namespace ising;

namespace {

WeightedGraph with_fields(WeightedGraph g, CounterRng& rng, double h_max) {
  for (Vertex v = 0; v < g.num_vertices(); ++v) g.set_h(v, h_max * (2 * rng.uniform() - 1));
  return g;
}

double output_tv(const IsingModel& m, int depth) {
  return tv_distance(algorithm1_output_law(m, depth), exact_distribution(m));
}

}  // namespace

TEST_CASE("independent spins sample their logistic marginals") {
  CounterRng rng = CounterRng::stream(1, "sampler-test");
  const IsingModel m(with_fields(WeightedGraph(6), rng, 2.0));
  for (int depth : {0, 1, 5}) {
    UpdateStream stream(3);
    const SamplerRun run = algorithm1_sample(m, depth, stream);
    REQUIRE(run.p.size() == 6);
    for (int i = 0; i < 6; ++i) {
      CHECK(run.order[i] == i);
      CHECK(run.p[i] == doctest::Approx(logistic2(m.graph().field(i).h)).epsilon(1e-14));
    }
  }
  CHECK(output_tv(m, 1) <= 1e-12);
}

TEST_CASE("sampler output law is exact on trees") {
  CounterRng rng = CounterRng::stream(2, "sampler-test");
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const RootedTree t = generate_galton_watson(1.5, 3, seed);
    if (t.size() > 12) continue;
    const IsingModel m(with_fields(t.to_graph(std::vector<double>{0.8}), rng, 1.0));
    CHECK(output_tv(m, std::max(1, 2 * t.height())) <= 1e-12);
  }
}

TEST_CASE("sampler output law examples on cycles") {
  CounterRng rng = CounterRng::stream(3, "sampler-test");
  CHECK(output_tv(IsingModel(with_fields(cycle_graph(4, 0.3), rng, 0.5)), 4) <= 1e-9);
  CHECK(output_tv(IsingModel(complete_graph(3, 0.4)), 3) <= 1e-9);

  const IsingModel c6(cycle_graph(6, 0.4));
  double bound = 0.0;
  for (Vertex v = 0; v < 6; ++v)
    bound += static_cast<double>(saw_level_counts(c6.graph(), v, 2).back()) * std::pow(std::tanh(0.4), 2);
  CHECK(algorithm1_sphere_bound(c6, 2) == doctest::Approx(bound));
  const double tv = output_tv(c6, 2);
  CHECK(tv > 0.0);
  CHECK(tv <= bound);
}

TEST_CASE("tv is bounded by the summed bracket widths and shrinks with the radius") {
  CounterRng rng = CounterRng::stream(4, "sampler-test");
  for (int k = 0; k < 12; ++k) {
    const int n = 4 + static_cast<int>(rng.below(5));
    WeightedGraph g(n);
    for (int i = 1; i < n; ++i) g.add_edge(i, static_cast<Vertex>(rng.below(i)), 0.5 * rng.uniform());
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v)
        if (!g.has_edge(u, v) && rng.uniform() < 0.25) g.add_edge(u, v, 0.5 * rng.uniform());
    const IsingModel m(with_fields(g, rng, 0.5));
    double prev_width = 1e300;
    for (int depth = 1; depth <= n; ++depth) {
      const auto widths = algorithm1_bracket_widths(m, depth);
      const double total = std::accumulate(widths.begin(), widths.end(), 0.0);
      CHECK(output_tv(m, depth) <= total + 1e-12);
      CHECK(total <= prev_width + 1e-12);
      prev_width = total;
    }
    CHECK(output_tv(m, n + 1) <= 1e-9);
  }
}

TEST_CASE("sampler tv suite") {
  verify::SamplerTvOptions o;
  o.random_graphs = 10;
  CHECK(verify::sampler_tv(o).violations() == 0);
}

TEST_CASE("sampler runs are reproducible") {
  const IsingModel m(generate_erdos_renyi(40, 2.0, 5, 0.3));
  UpdateStream a(9), b(9), c(10);
  const SamplerRun ra = algorithm1_sample(m, 4, a);
  const SamplerRun rb = algorithm1_sample(m, 4, b);
  CHECK(ra.spins == rb.spins);
  CHECK(ra.p == rb.p);
  CHECK(ra.saw_sizes == rb.saw_sizes);
  CHECK(ra.depth == 4);
  for (double p : ra.p) CHECK((p >= 0.0 && p <= 1.0));
  CHECK(algorithm1_sample(m, 4, c).spins != ra.spins);
}

TEST_CASE("sampler respects pins and clamps") {
  WeightedGraph g = cycle_graph(6, 0.5);
  g.set_field(2, VertexField::pinned_to(-1));
  g.set_h(4, 1e6);
  const IsingModel m = clamp_large_fields(IsingModel(g));
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    UpdateStream s(seed);
    const SamplerRun run = algorithm1_sample(m, 3, s);
    CHECK(run.spins[2] == -1);
    CHECK(run.spins[4] == 1);
    CHECK(run.p[2] == 0.0);
    CHECK(run.p[4] == 1.0);
  }
}

TEST_CASE("sampler errors carry context") {
  UpdateStream s(1);
  try {
    algorithm1_sample(IsingModel(complete_graph(9, 0.1)), 9, s, 1000);
    FAIL("expected a budget error");
  } catch (const BudgetError& e) {
    CHECK(std::string(e.what()).find("vertex 0") != std::string::npos);
  }
  CHECK_THROWS_AS(algorithm1_output_law(IsingModel(WeightedGraph(15)), 1), SizeError);
}

TEST_CASE("radius helpers") {
  CHECK(radius_for(1.0, 1) == 0);
  CHECK(radius_for(2.0, 100) == static_cast<int>(std::ceil(2.0 * std::log(100.0))));
  CHECK(radius_for(0.5, 1000) == 4);
  CHECK(sufficient_radius_factor(2.0, 0.1, 1.0) ==
        doctest::Approx(2.0 / -std::log(2.0 * std::tanh(0.1))));
  CHECK_THROWS_AS(sufficient_radius_factor(3.0, 1.0, 1.0), ParameterError);
}
