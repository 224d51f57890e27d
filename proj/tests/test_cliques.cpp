#include <gtest/gtest.h>

#include "gprod/cliques.hpp"
#include "gprod/generators.hpp"
#include "gprod/products.hpp"
#include "oracles.hpp"

using namespace gprod;

TEST(Census, CompleteGraph) {
  const CliqueCensus c = count_k_cliques(complete_graph(4), 4);
  EXPECT_EQ(c.count(1), 4);
  EXPECT_EQ(c.count(2), 6);
  EXPECT_EQ(c.count(3), 4);
  EXPECT_EQ(c.count(4), 1);
  EXPECT_EQ(c.largest_nonzero(), 4U);
}

TEST(Census, TrianglesInTensorOfTriangles) {
  const Product t = tensor_product(complete_graph(3), complete_graph(3));
  EXPECT_EQ(count_k_cliques(t.graph, 3).count(3), 6);
  EXPECT_EQ(oracle::naive_clique_count(t.graph, 3), 6U);
}

TEST(Census, TwoDisjointEdges) {
  Graph g(4);
  g.add_edge(0, 1);
  g.add_edge(2, 3);
  EXPECT_EQ(count_k_cliques(g, 3).count(3), 0);
}

TEST(Census, BasicInvariants) {
  Rng rng(RngSeed{31, 0});
  for (int t = 0; t < 30; ++t) {
    const Graph g = oracle::random_graph(3 + rng.below(20), rng.uniform(), rng);
    const CliqueCensus c = count_k_cliques(g, 6);
    EXPECT_EQ(c.count(1), g.order());
    EXPECT_EQ(c.count(2), g.edge_count());
    bool zero = false;
    for (std::size_t k = 1; k <= 6; ++k) {
      if (zero) EXPECT_EQ(c.count(k), 0);
      zero = zero || c.count(k) == 0;
    }
  }
}

TEST(Census, MatchesSubsetOracle) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    Rng rng(RngSeed{seed, 100});
    const std::size_t n = 1 + rng.below(12);
    const Graph g = oracle::random_graph(n, 0.15 + 0.8 * rng.uniform(), rng);
    const CliqueCensus c = count_k_cliques(g, 5);
    for (std::size_t k = 1; k <= 5; ++k) ASSERT_EQ(c.count(k), oracle::naive_clique_count(g, k)) << "seed " << seed;
  }
}

TEST(Census, HandshakeIdentity) {
  Rng rng(RngSeed{32, 0});
  for (int t = 0; t < 40; ++t) {
    const Graph g = oracle::random_graph(2 + rng.below(25), rng.uniform(), rng);
    const CliqueCensus c = count_k_cliques(g, 5, {}, true);
    ASSERT_TRUE(c.has_per_vertex());
    for (std::size_t k = 1; k < 5; ++k) {
      BigInt sum = 0;
      for (vertex_t v = 0; v < g.order(); ++v) sum += c.per_vertex[k][v];
      ASSERT_EQ(sum, BigInt(k + 1) * c.count(k + 1));
    }
  }
}

TEST(PerVertex, Examples) {
  for (auto a : per_vertex_clique_counts(complete_graph(4), 2)) EXPECT_EQ(a, 3U);
  EXPECT_EQ(per_vertex_clique_counts(star_graph(3), 2)[0], 0U);

  GeneratorSpec spec{Model::erdos_renyi, 10, {}};
  spec.params.p = 0.5;
  const Graph g = generate(spec, RngSeed{2024, 0});
  const auto a2 = per_vertex_clique_counts(g, 2);
  for (vertex_t v = 0; v < 10; ++v) EXPECT_EQ(a2[v], oracle::triangles_at(g, v));
}

TEST(PerVertex, MatchesSubsetOracleAndCensus) {
  Rng rng(RngSeed{33, 0});
  for (int t = 0; t < 30; ++t) {
    const Graph g = oracle::random_graph(1 + rng.below(12), rng.uniform(), rng);
    const CliqueCensus c = count_k_cliques(g, 4, {}, true);
    for (std::size_t k = 1; k <= 3; ++k) {
      const auto a = per_vertex_clique_counts(g, k);
      for (vertex_t v = 0; v < g.order(); ++v) {
        ASSERT_EQ(a[v], oracle::naive_incident(g, v, k));
        ASSERT_EQ(a[v], c.per_vertex[k][v]);
      }
    }
  }
}

TEST(MaxClique, Examples) {
  for (std::size_t n = 1; n <= 9; ++n) EXPECT_EQ(max_clique(complete_graph(n)).omega, n);
  const Product t = tensor_product(complete_graph(3), complete_graph(3));
  EXPECT_EQ(max_clique(t.graph).omega, 3U);
  EXPECT_EQ(oracle::naive_clique_number(t.graph), 3U);
  const Product m = modular_product(path_graph(3), complete_graph(3));
  EXPECT_EQ(max_clique(m.graph).omega, 2U);
  EXPECT_EQ(max_clique(Graph(5)).omega, 1U);
  EXPECT_THROW(max_clique(Graph(0)), invalid_parameters);
}

TEST(MaxClique, AgreesWithCensusAndWitnessIsClique) {
  Rng rng(RngSeed{34, 0});
  for (int t = 0; t < 60; ++t) {
    const Graph g = oracle::random_graph(1 + rng.below(40), rng.uniform(), rng);
    const MaxCliqueResult r = max_clique(g);
    EXPECT_TRUE(is_clique(g, r.witness));
    EXPECT_EQ(r.witness.size(), r.omega);
    const CliqueCensus c = count_k_cliques(g, r.omega + 1);
    EXPECT_GT(c.count(r.omega), 0);
    EXPECT_EQ(c.count(r.omega + 1), 0);
    EXPECT_EQ(c.largest_nonzero(), r.omega);
  }
}

TEST(MaxClique, TensorCliqueNumberIsMinOfFactors) {
  Rng rng(RngSeed{35, 0});
  for (int t = 0; t < 40; ++t) {
    const Graph g = oracle::random_graph(2 + rng.below(14), 0.3 + 0.6 * rng.uniform(), rng);
    const Graph h = oracle::random_graph(2 + rng.below(14), 0.3 + 0.6 * rng.uniform(), rng);
    const std::size_t direct = max_clique(tensor_product(g, h).graph).omega;
    EXPECT_EQ(direct, std::min(max_clique(g).omega, max_clique(h).omega));
  }
}

TEST(Budget, ExhaustionIsAnError) {
  const Graph k12 = complete_graph(12);
  EXPECT_THROW(count_k_cliques(k12, 6, CliqueOptions{10}), budget_exceeded);
  EXPECT_THROW(max_clique(k12, CliqueOptions{3}), budget_exceeded);
  EXPECT_THROW(incident_clique_count(k12, 0, 4, CliqueOptions{5}), budget_exceeded);
  EXPECT_NO_THROW(count_k_cliques(k12, 6));
}

TEST(Census, DeterministicNodeCount) {
  GeneratorSpec spec{Model::erdos_renyi, 60, {}};
  spec.params.p = 0.5;
  const Graph g = generate(spec, RngSeed{1, 0});
  EXPECT_EQ(count_k_cliques(g, 5).nodes_explored, count_k_cliques(g, 5).nodes_explored);
}

TEST(TensorCensusIdentity, Examples) {
  EXPECT_TRUE(tensor_census_identity_check(complete_graph(3), complete_graph(3), 3));
  const Product t = tensor_product(complete_graph(4), complete_graph(4));
  EXPECT_EQ(count_k_cliques(t.graph, 3).count(3), 96);
  EXPECT_TRUE(tensor_census_identity_check(complete_graph(4), complete_graph(4), 3));
}

TEST(TensorCensusIdentity, RandomSweep) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Rng rng(RngSeed{seed, 200});
    const double p = std::array{0.3, 0.5, 0.7}[seed % 3];
    const Graph g = oracle::random_graph(1 + rng.below(10), p, rng);
    const Graph h = oracle::random_graph(1 + rng.below(10), p, rng);
    for (std::size_t k = 1; k <= 4; ++k) ASSERT_TRUE(tensor_census_identity_check(g, h, k)) << seed << " k=" << k;
  }
}

TEST(Degeneracy, OrderIsPermutation) {
  Rng rng(RngSeed{36, 0});
  const Graph g = oracle::random_graph(50, 0.3, rng);
  auto order = degeneracy_order(g);
  std::sort(order.begin(), order.end());
  for (vertex_t i = 0; i < 50; ++i) EXPECT_EQ(order[i], i);
}
