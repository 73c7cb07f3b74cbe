#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "fdim/errors.hpp"
#include "fdim/graph.hpp"
#include "oracles.hpp"

using namespace fibdim;

namespace {

Graph permuted(const Graph& g, const std::vector<NodeId>& perm) {
  Graph h(g.node_count());
  for (const auto& [u, v] : g.edges()) h.add_edge(perm[u], perm[v]);
  return h;
}

Graph random_graph(std::size_t n, double p, std::mt19937& rng) {
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = u + 1; v < n; ++v) {
      if (coin(rng)) g.add_edge(u, v);
    }
  }
  return g;
}

bool exhaustive_isomorphism_check(const Graph& g, const Graph& h, const NodeMapping& m) {
  if (m.image.size() != g.node_count()) return false;
  std::vector<NodeId> sorted = m.image;
  std::sort(sorted.begin(), sorted.end());
  for (NodeId u = 0; u < sorted.size(); ++u) {
    if (sorted[u] != u) return false;
  }
  for (NodeId u = 0; u < g.node_count(); ++u) {
    for (NodeId v = u + 1; v < g.node_count(); ++v) {
      if (g.adjacent(u, v) != h.adjacent(m.image[u], m.image[v])) return false;
    }
  }
  return true;
}

}  // namespace

TEST(Graph, RejectsLoopsAndOutOfRange) {
  Graph g(3);
  EXPECT_THROW(g.add_edge(1, 1), InvalidInput);
  EXPECT_THROW(g.add_edge(0, 3), InvalidInput);
}

TEST(Graph, DuplicateEdgesCollapse) {
  Graph g(3);
  g.add_edge(0, 1);
  g.add_edge(1, 0);
  g.add_edge(0, 1);
  EXPECT_EQ(g.edge_count(), 1u);
  EXPECT_EQ(g.edges(), (std::vector<Edge>{{0, 1}}));
}

TEST(Isomorphism, FiveCycleMatchesDifferenceGraph) {
  const Graph d5 = oracle::difference_graph(5, {2, 3});
  auto m = is_isomorphic(graphs::cycle(5), d5);
  ASSERT_TRUE(m);
  EXPECT_TRUE(exhaustive_isomorphism_check(graphs::cycle(5), d5, *m));
}

TEST(Isomorphism, TriangleIsNotAPath) {
  EXPECT_FALSE(is_isomorphic(graphs::complete(3), graphs::path(3)));
}

TEST(Isomorphism, RandomRelabelingsAreFound) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 14;
    const Graph g = random_graph(n, 0.4, rng);
    std::vector<NodeId> perm(n);
    std::iota(perm.begin(), perm.end(), NodeId{0});
    std::shuffle(perm.begin(), perm.end(), rng);
    const Graph h = permuted(g, perm);
    auto m = is_isomorphic(g, h);
    ASSERT_TRUE(m) << "trial " << trial;
    EXPECT_TRUE(exhaustive_isomorphism_check(g, h, *m));
  }
}

TEST(Isomorphism, AgreesWithCanonicalCodesOnSmallGraphs) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t n = 2 + rng() % 6;
    const Graph g = random_graph(n, 0.5, rng);
    const Graph h = random_graph(n, 0.5, rng);
    const bool same = oracle::canonical_code(g) == oracle::canonical_code(h);
    auto m = is_isomorphic(g, h);
    EXPECT_EQ(same, m.has_value());
    if (m) EXPECT_TRUE(exhaustive_isomorphism_check(g, h, *m));
  }
}

TEST(Isomorphism, PetersenIsNotTheFivePrism) {
  const Graph prism = cartesian_product(graphs::cycle(5), graphs::complete(2));
  EXPECT_FALSE(is_isomorphic(graphs::petersen(), prism));
  EXPECT_TRUE(is_isomorphic(graphs::petersen(), graphs::petersen()));
}

TEST(Coloring, ExactValues) {
  EXPECT_EQ(color(graphs::complete(6), ColoringMode::exact).k, 6u);
  EXPECT_EQ(color(graphs::cycle(5), ColoringMode::exact).k, 3u);
  EXPECT_EQ(color(graphs::cycle(8), ColoringMode::exact).k, 2u);
  EXPECT_EQ(color(graphs::petersen(), ColoringMode::exact).k, 3u);
  const Coloring c = color(graphs::cycle(5), ColoringMode::exact);
  EXPECT_TRUE(c.exact);
  EXPECT_FALSE(color(graphs::cycle(5), ColoringMode::greedy).exact);
}

TEST(Coloring, ExactModeIsCapped) {
  EXPECT_THROW(color(graphs::cycle(30), ColoringMode::exact), CapExceeded);
  EXPECT_EQ(color(graphs::cycle(30), ColoringMode::exact, 30).k, 2u);
}

TEST(Coloring, ExactNeverWorseThanGreedyAndMatchesOracle) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const Graph g = random_graph(1 + rng() % 10, 0.45, rng);
    const Coloring exact = color(g, ColoringMode::exact);
    const Coloring greedy = color(g, ColoringMode::greedy);
    EXPECT_TRUE(is_proper_coloring(g, exact));
    EXPECT_TRUE(is_proper_coloring(g, greedy));
    EXPECT_LE(exact.k, greedy.k);
    EXPECT_EQ(exact.k, oracle::chromatic_number(g));
  }
}

TEST(Coloring, ClassesAreAscendingAndNonempty) {
  const Coloring c = color(graphs::petersen(), ColoringMode::exact);
  for (const auto& cls : c.classes()) {
    EXPECT_FALSE(cls.empty());
    EXPECT_TRUE(std::is_sorted(cls.begin(), cls.end()));
  }
}

TEST(CartesianProduct, Examples) {
  const Graph k2 = graphs::complete(2);
  EXPECT_TRUE(is_isomorphic(cartesian_product(k2, k2), graphs::cycle(4)));
  const Graph g = graphs::petersen();
  EXPECT_TRUE(is_isomorphic(cartesian_product(g, graphs::complete(1)), g));
  const Graph p = cartesian_product(graphs::path(2), graphs::path(3));
  EXPECT_EQ(p.node_count(), 6u);
  EXPECT_EQ(p.edge_count(), 7u);
}

TEST(CartesianProduct, CommutativeAndAssociative) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const Graph a = random_graph(1 + rng() % 3, 0.6, rng);
    const Graph b = random_graph(1 + rng() % 2, 0.6, rng);
    const Graph c = random_graph(1 + rng() % 2, 0.6, rng);
    EXPECT_TRUE(is_isomorphic(cartesian_product(a, b), cartesian_product(b, a)));
    EXPECT_TRUE(is_isomorphic(cartesian_product(cartesian_product(a, b), c),
                              cartesian_product(a, cartesian_product(b, c))));
  }
}

TEST(Properties, Examples) {
  auto c7 = properties(graphs::cycle(7));
  EXPECT_TRUE(c7.connected);
  EXPECT_FALSE(c7.bipartite);
  auto c8 = properties(graphs::cycle(8));
  EXPECT_TRUE(c8.connected);
  EXPECT_TRUE(c8.bipartite);
  Graph two(4);
  two.add_edge(0, 1);
  two.add_edge(2, 3);
  auto t = properties(two);
  EXPECT_FALSE(t.connected);
  EXPECT_TRUE(t.bipartite);
  EXPECT_EQ(t.components, 2u);
}

TEST(Properties, BipartiteIffNoOddCycle) {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 500; ++trial) {
    const Graph g = random_graph(1 + rng() % 12, 0.2, rng);
    const auto props = properties(g);
    EXPECT_EQ(props.bipartite, !oracle::has_odd_cycle(g));
    if (props.bipartite) {
      for (const auto& [u, v] : g.edges()) {
        EXPECT_NE(props.two_coloring[u], props.two_coloring[v]);
      }
    }
  }
}

TEST(Families, Shapes) {
  EXPECT_EQ(graphs::petersen().edge_count(), 15u);
  EXPECT_EQ(graphs::wheel(6).edge_count(), 12u);
  EXPECT_EQ(graphs::star(4).degree(0), 4u);
  const std::vector<std::size_t> sizes{2, 3};
  EXPECT_EQ(graphs::complete_multipartite(sizes).edge_count(), 6u);
  EXPECT_EQ(clique_number(graphs::petersen()), 2u);
  EXPECT_EQ(clique_number(graphs::complete(7)), 7u);
}

TEST(Zoo, CountsMatchKnownSequence) {
  const std::size_t expected[] = {1, 1, 2, 4, 11, 34, 156, 1044};
  for (std::size_t n = 0; n <= 7; ++n) {
    EXPECT_EQ(oracle::graphs_up_to_iso(n).size(), expected[n]) << "n = " << n;
  }
}
