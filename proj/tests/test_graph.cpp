#include <cmath>
#include <set>
#include <sstream>

#include "doctest.h"
#include "ising/error.hpp"
#include "ising/graph.hpp"
#include "ising/rng.hpp"
#include "ising/verify.hpp"
#include "oracles.hpp"

using namespace ising;

TEST_CASE("weighted graph validates edges") {
  WeightedGraph g(3);
  g.add_edge(0, 1, 0.5);
  CHECK(g.has_edge(1, 0));
  CHECK(g.coupling(1, 0) == 0.5);
  CHECK(g.coupling(0, 2) == 0.0);
  CHECK_THROWS_AS(g.add_edge(0, 0, 1.0), ParameterError);
  CHECK_THROWS_AS(g.add_edge(1, 0, 1.0), ParameterError);
  CHECK_THROWS_AS(g.add_edge(0, 2, -0.1), ParameterError);
  CHECK_THROWS_AS(g.add_edge(0, 3, 1.0), ParameterError);
  CHECK(g.num_edges() == 1);
}

TEST_CASE("adjacency is symmetric on random graphs") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const WeightedGraph g = generate_erdos_renyi(200, 3.0, seed, 0.7);
    std::size_t half_edges = 0;
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      for (const auto& nb : g.neighbors(v)) {
        CHECK(nb.v != v);
        CHECK(g.coupling(nb.v, v) == nb.beta);
        ++half_edges;
      }
    }
    CHECK(half_edges == 2 * g.num_edges());
  }
}

TEST_CASE("erdos-renyi trivial and concentration examples") {
  CHECK(generate_erdos_renyi(4, 0.0, 99).num_edges() == 0);
  CHECK(generate_erdos_renyi(3, 3.0, 5).num_edges() == 3);
  CHECK_THROWS_AS(generate_erdos_renyi(5, -1.0, 1), ParameterError);
  CHECK_THROWS_AS(generate_erdos_renyi(5, 6.0, 1), ParameterError);

  const double n = 10000, d = 2;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto edges = static_cast<double>(generate_erdos_renyi(10000, 2.0, seed).num_edges());
    CHECK(std::abs(edges - n * d / 2) <= 4 * std::sqrt(n * d / 2));
  }
  CHECK(generate_erdos_renyi(300, 2.0, 7).edges() == generate_erdos_renyi(300, 2.0, 7).edges());
  CHECK(generate_erdos_renyi(300, 2.0, 7).edges() != generate_erdos_renyi(300, 2.0, 8).edges());
}

TEST_CASE("poisson inversion matches the mean") {
  double sum = 0.0;
  const int k = 100000;
  for (int i = 0; i < k; ++i) sum += poisson_inverse(2.0, (i + 0.5) / k);
  CHECK(sum / k == doctest::Approx(2.0).epsilon(1e-3));
  CHECK(poisson_inverse(3.0, 0.0) == 0);
  CHECK_THROWS_AS(poisson_inverse(31.0, 0.5), ParameterError);
}

TEST_CASE("galton-watson examples") {
  CHECK(generate_galton_watson(1.0, 0, 3).size() == 1);
  CHECK_THROWS_AS(generate_galton_watson(0.0, 3, 1), ParameterError);

  double mean = 0.0;
  const int seeds = 10000;
  for (int s = 0; s < seeds; ++s) mean += generate_galton_watson(2.0, 8, s).count_at_depth(8);
  mean /= seeds;
  CHECK(std::abs(mean - 256.0) <= 0.05 * 256.0);

  std::vector<double> exp_means;
  for (int r : {4, 6, 8}) {
    double m = 0.0;
    for (int s = 0; s < seeds; ++s)
      m += std::exp(generate_galton_watson(2.0, r, s).count_at_depth(r) / std::pow(2.0, r));
    exp_means.push_back(m / seeds);
  }
  for (double m : exp_means) {
    CHECK(std::isfinite(m));
    CHECK(m / exp_means.front() == doctest::Approx(1.0).epsilon(0.15));
  }
}

TEST_CASE("galton-watson respects its node budget") {
  CHECK_THROWS_AS(generate_galton_watson(3.0, 12, 1, 1000), BudgetError);
}

TEST_CASE("ball examples") {
  const WeightedGraph c4 = cycle_graph(4);
  const Ball b0 = ball(c4, 2, 0);
  CHECK(b0.vertices == std::vector<Vertex>{2});
  CHECK(b0.edges.empty());
  CHECK(b0.sphere == std::vector<Vertex>{2});

  const Ball b1 = ball(c4, 0, 1);
  CHECK(std::set<Vertex>(b1.vertices.begin(), b1.vertices.end()) == std::set<Vertex>{0, 1, 3});
  CHECK(b1.edges.size() == 2);
  CHECK(b1.sphere == std::vector<Vertex>{1, 3});

  const Ball b2 = ball(c4, 0, 2);
  CHECK(b2.vertices.size() == 4);
  CHECK(b2.edges.size() == 4);
  CHECK(b2.sphere == std::vector<Vertex>{2});
}

TEST_CASE("ball agrees with a BFS oracle") {
  const WeightedGraph g = generate_erdos_renyi(60, 2.5, 11);
  for (Vertex v = 0; v < 60; v += 7) {
    const auto dist = oracle::bfs_distances(g, v);
    for (int l = 0; l <= 4; ++l) {
      const Ball b = ball(g, v, l);
      std::set<Vertex> expect, sphere;
      for (Vertex u = 0; u < 60; ++u) {
        if (dist[u] >= 0 && dist[u] <= l) expect.insert(u);
        if (dist[u] == l) sphere.insert(u);
      }
      CHECK(std::set<Vertex>(b.vertices.begin(), b.vertices.end()) == expect);
      CHECK(std::set<Vertex>(b.sphere.begin(), b.sphere.end()) == sphere);
      std::size_t induced = 0;
      for (const Edge& e : g.edges()) induced += expect.count(e.u) && expect.count(e.v);
      CHECK(b.edges.size() == induced);
      CHECK(b.local.num_edges() == induced);
    }
  }
}

TEST_CASE("spanning tree and tree excess") {
  const Ball tree_ball = ball(path_graph(5), 2, 2);
  CHECK(bfs_spanning_tree(tree_ball).extra_edges.empty());
  CHECK(tree_excess(tree_ball) == 0);

  const WeightedGraph tri = complete_graph(3);
  const SpanningTree st = bfs_spanning_tree(ball(tri, 0, 1));
  CHECK(st.tree.size() == 3);
  CHECK(st.tree.children(0).size() == 2);
  CHECK(st.extra_edges.size() == 1);
  CHECK(tree_excess(ball(tri, 0, 1)) == 1);

  const SpanningTree c4 = bfs_spanning_tree(ball(cycle_graph(4), 0, 2));
  CHECK(c4.tree.size() == 4);
  CHECK(c4.extra_edges.size() == 1);

  CHECK(tree_excess(ball(complete_graph(4), 0, 1)) == 3);

  CounterRng rng = CounterRng::stream(5, "excess-test");
  for (int k = 0; k < 100; ++k) {
    const WeightedGraph g = generate_erdos_renyi(80, 3.0, rng());
    const auto v = static_cast<Vertex>(rng.below(80));
    const int l = static_cast<int>(rng.below(5));
    const Ball b = ball(g, v, l);
    CHECK(tree_excess(b) >= 0);
    CHECK(static_cast<long>(bfs_spanning_tree(b).extra_edges.size()) == tree_excess(b));
    CHECK(bfs_spanning_tree(b).tree.size() == static_cast<int>(b.vertices.size()));
  }
}

TEST_CASE("path density examples") {
  CHECK(path_density(ball(WeightedGraph(1), 0, 3), 3) == 0);
  CHECK(path_density(ball(star_graph(3), 0, 1), 1) == 4);
  CHECK(path_density(ball(star_graph(3), 0, 2), 5) == 4);
  CHECK(path_density(ball(path_graph(3), 0, 2), 2) == 4);

  CHECK(tree_path_density(RootedTree()) == 0);
  RootedTree edge;
  edge.add_child(0);
  CHECK(tree_path_density(edge) == 2);
  RootedTree leaf_root;  // K_{1,3} rooted at a leaf
  const int center = leaf_root.add_child(0);
  leaf_root.add_child(center);
  leaf_root.add_child(center);
  CHECK(tree_path_density(leaf_root) == 5);
  RootedTree star;
  for (int i = 0; i < 3; ++i) star.add_child(0);
  CHECK(tree_path_density(star) == 4);
}

TEST_CASE("path density is monotone and matches the tree form on trees") {
  const WeightedGraph g = generate_erdos_renyi(100, 2.5, 3);
  for (Vertex v = 0; v < 100; v += 9) {
    long prev = -1;
    for (int l = 0; l <= 5; ++l) {
      const long m = path_density(ball(g, v, l), l);
      CHECK(m >= prev);
      prev = m;
    }
  }
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const RootedTree t = generate_galton_watson(2.0, 4, seed);
    const WeightedGraph tg = t.to_graph(std::vector<double>{1.0});
    CHECK(path_density(ball(tg, 0, t.height()), t.height()) == tree_path_density(t));
  }
  CHECK_THROWS_AS(path_density(ball(complete_graph(9), 0, 1), 8, 1000), BudgetError);
}

TEST_CASE("sphere size bound on galton-watson trees") {
  const auto report = verify::sphere_bound();
  CHECK(report.rows.size() == 3000);
  CHECK(report.violations() == 0);
}

TEST_CASE("graph text format round trips") {
  WeightedGraph g = generate_erdos_renyi(30, 3.0, 4, 0.37);
  g.set_h(3, -0.125);
  g.set_field(5, VertexField::pinned_to(1));
  g.set_field(6, VertexField::pinned_to(-1));
  std::stringstream ss;
  write_graph(ss, g);
  const WeightedGraph back = read_graph(ss);
  CHECK(back.edges() == g.edges());
  for (Vertex v = 0; v < 30; ++v) {
    CHECK(back.field(v).pin == g.field(v).pin);
    if (!g.field(v).pinned()) CHECK(back.field(v).h == g.field(v).h);
  }

  std::stringstream with_comments("# header\n3 2\n0 1 0.5\n1 2 0.25 # tail\n0 0\n1 inf\n2 -0.5\n");
  const WeightedGraph c = read_graph(with_comments);
  CHECK(c.num_edges() == 2);
  CHECK(c.field(1).pin == Pin::Plus);
  CHECK(c.field(2).h == -0.5);

  std::stringstream bad("3 1\n0 5 0.5\n");
  CHECK_THROWS_AS(read_graph(bad), ParameterError);
  CHECK_THROWS(load_graph("/nonexistent/graph.txt"));
}

TEST_CASE("tree shapes are the unlabeled trees") {
  const std::vector<std::size_t> counts{1, 1, 1, 2, 3, 6, 11, 23};
  for (int n = 1; n <= 8; ++n) CHECK(verify::tree_shapes(n).size() == counts[n - 1]);
  for (const auto& parent : verify::tree_shapes(6)) {
    const RootedTree t = verify::tree_from_parents(parent);
    CHECK(t.size() == 6);
    for (int i = 1; i < t.size(); ++i) CHECK(t.parent(i) < i);
  }
}
