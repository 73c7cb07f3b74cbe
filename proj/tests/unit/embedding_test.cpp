#include <gtest/gtest.h>

#include <algorithm>

#include "fdim/embedding.hpp"
#include "fdim/errors.hpp"
#include "fdim/fiber_graph.hpp"
#include "fdim/solver.hpp"
#include "oracles.hpp"

using namespace fibdim;

namespace {

// Independent re-check: F(P, M) rebuilt by the oracles equals g under the map.
void expect_realises(const Embedding& e, const Graph& g) {
  EXPECT_EQ(e.graph(), g);
  std::vector<Point> images = e.vertex_map();
  EXPECT_TRUE(oracle::realizes(g, images, e.moves().moves()));
  std::sort(images.begin(), images.end());
  if (e.dimension() <= 3) {
    EXPECT_EQ(oracle::lattice_points(e.polytope().generators()), images);
  } else {
    EXPECT_EQ(enumerate_lattice_points(e.polytope(), kEmbeddingLimits), images);
  }
  EXPECT_EQ(dimension(e.polytope()), e.dimension());
  const auto fg = build_fiber_graph(e.polytope(), e.moves(), kEmbeddingLimits);
  EXPECT_TRUE(is_isomorphic(fg.graph, g));
}

std::vector<Graph> corpus(std::size_t max_nodes) {
  std::vector<Graph> out;
  for (std::size_t n = 1; n <= max_nodes; ++n) {
    for (auto& g : oracle::graphs_up_to_iso(n)) out.push_back(g);
  }
  out.push_back(graphs::petersen());
  out.push_back(graphs::wheel(6));
  out.push_back(graphs::cycle(9));
  return out;
}

}  // namespace

TEST(Simplex, Examples) {
  const Embedding k3 = embed_simplex(graphs::complete(3));
  EXPECT_EQ(k3.dimension(), 2u);
  EXPECT_EQ(k3.moves().size(), 6u);
  expect_realises(k3, graphs::complete(3));
  const Embedding empty = embed_simplex(graphs::empty(4));
  EXPECT_EQ(empty.dimension(), 3u);
  EXPECT_TRUE(empty.moves().empty());
  expect_realises(embed_simplex(graphs::petersen()), graphs::petersen());
  EXPECT_EQ(embed_simplex(graphs::complete(1)).dimension(), 0u);
}

TEST(Chromatic, Examples) {
  Coloring c;
  c.k = 3;
  c.class_of = {0, 1, 0, 1, 2};
  const Embedding e = embed_chromatic(graphs::cycle(5), c);
  EXPECT_LE(e.dimension(), 4u);
  expect_realises(e, graphs::cycle(5));
  for (std::size_t n = 1; n <= 6; ++n) {
    const Graph k = graphs::complete(n);
    EXPECT_LE(embed_chromatic(k, color(k, ColoringMode::exact)).dimension(), n - 1);
  }
  const std::vector<std::size_t> sizes{2, 3};
  const Graph k23 = graphs::complete_multipartite(sizes);
  EXPECT_LE(embed_chromatic(k23, color(k23, ColoringMode::exact)).dimension(), 3u);
}

TEST(Chromatic, RejectsImproperColoring) {
  Coloring c;
  c.k = 1;
  c.class_of = {0, 0, 0};
  EXPECT_THROW(embed_chromatic(graphs::path(3), c), InvalidInput);
}

TEST(Chromatic, DimensionLawOnCorpus) {
  for (const Graph& g : corpus(6)) {
    const Coloring c = color(g, ColoringMode::exact);
    std::size_t singletons = 0;
    for (const auto& cls : c.classes()) singletons += cls.size() == 1 ? 1 : 0;
    const Embedding e = embed_chromatic(g, c);
    EXPECT_LE(e.dimension() + singletons + 1, 2 * c.k);
    EXPECT_LE(e.dimension() + 1, 2 * c.k);
    EXPECT_EQ(e.graph(), g);
  }
}

TEST(Product, Examples) {
  const std::vector<std::int64_t> pos{1, 2}, one{1};
  const Embedding k2 = embed_difference(graphs::complete(2), pos, one);
  const std::vector<Embedding> sq{k2, k2};
  const Embedding c4 = embed_product(sq);
  EXPECT_EQ(c4.dimension(), 2u);
  EXPECT_TRUE(is_isomorphic(c4.graph(), graphs::cycle(4)));
  expect_realises(c4, c4.graph());

  const std::vector<std::int64_t> p3{1, 2, 3};
  const Embedding path = embed_difference(graphs::path(3), p3, one);
  const std::vector<Embedding> grid{path, path};
  const Embedding g = embed_product(grid);
  EXPECT_EQ(g.dimension(), 2u);
  EXPECT_EQ(g.graph().edge_count(), 12u);

  const Embedding five = embed_cycle(5);
  const std::vector<Embedding> with_point{five, embed_simplex(graphs::complete(1))};
  const Embedding same = embed_product(with_point);
  EXPECT_EQ(same.dimension(), 1u);
  EXPECT_TRUE(is_isomorphic(same.graph(), graphs::cycle(5)));
}

TEST(Product, DimensionIsAdditive) {
  const auto small = corpus(3);
  for (const Graph& a : small) {
    for (const Graph& b : small) {
      const std::vector<Embedding> parts{*fdim_bracket(a).upper_certificate,
                                         *fdim_bracket(b).upper_certificate};
      const Embedding e = embed_product(parts);
      EXPECT_EQ(e.dimension(), parts[0].dimension() + parts[1].dimension());
      EXPECT_TRUE(is_isomorphic(e.graph(), cartesian_product(a, b)));
    }
  }
}

TEST(Apex, Examples) {
  const std::vector<std::int64_t> pos{1, 2, 3}, none{}, one{1};
  const Embedding edgeless = embed_difference(graphs::empty(3), pos, none);
  const Embedding star = embed_apex(graphs::star(3), 0, edgeless);
  EXPECT_EQ(star.dimension(), 2u);
  expect_realises(star, graphs::star(3));

  const Embedding path = embed_difference(graphs::path(3), pos, one);
  const Embedding c4 = embed_apex(graphs::cycle(4), 0, path);
  EXPECT_EQ(c4.dimension(), 2u);

  const Embedding wheel = embed_apex(graphs::wheel(6), 0, embed_cycle(6));
  EXPECT_EQ(wheel.dimension(), 3u);
  expect_realises(wheel, graphs::wheel(6));
}

TEST(Apex, RejectsWrongSubEmbedding) {
  EXPECT_THROW(embed_apex(graphs::star(3), 0, embed_cycle(5)), InvalidInput);
}

TEST(Cycle, Examples) {
  const Embedding c5 = embed_cycle(5);
  EXPECT_EQ(c5.moves().positive_representatives(), (std::vector<Point>{{2}, {3}}));
  const Embedding c10 = embed_cycle(10);
  EXPECT_EQ(c10.moves().positive_representatives(), (std::vector<Point>{{3}, {7}}));
  expect_realises(c10, graphs::cycle(10));
  EXPECT_EQ(embed_cycle(6).dimension(), 2u);
  expect_realises(embed_cycle(6), graphs::cycle(6));
}

TEST(Cycle, OneDimensionalExactlyOutsideExceptions) {
  for (std::size_t n = 3; n <= 50; ++n) {
    const Embedding e = embed_cycle(n);
    const bool special = n == 3 || n == 4 || n == 6;
    EXPECT_EQ(e.dimension(), special ? 2u : 1u) << "n = " << n;
    EXPECT_TRUE(is_isomorphic(e.graph(), graphs::cycle(n)));
  }
}

TEST(CompleteMultipartite, Examples) {
  for (std::size_t n = 1; n <= 16; ++n) {
    const std::vector<std::size_t> ones(n, 1);
    EXPECT_EQ(embed_complete_multipartite(ones).dimension(), ceil_log2(n)) << "n = " << n;
  }
  const std::vector<std::size_t> two_two{2, 2}, one_three{1, 3};
  const Embedding c4 = embed_complete_multipartite(two_two);
  EXPECT_LE(c4.dimension(), 2u);
  EXPECT_TRUE(is_isomorphic(c4.graph(), graphs::cycle(4)));
  EXPECT_LE(embed_complete_multipartite(one_three).dimension(), 3u);
}

TEST(CompleteMultipartite, MovesAreMinimalAndBoundHolds) {
  for (std::size_t a = 1; a <= 4; ++a) {
    for (std::size_t b = 1; b <= 4; ++b) {
      for (std::size_t c = 0; c <= 3; ++c) {
        std::vector<std::size_t> sizes{a, b};
        if (c) sizes.push_back(c);
        const Embedding e = embed_complete_multipartite(sizes);
        EXPECT_TRUE(is_minimal(e.polytope(), e.moves(), kEmbeddingLimits).minimal);
        EXPECT_LE(e.dimension(),
                  ceil_log2(sizes.size()) + ceil_log2(*std::max_element(sizes.begin(), sizes.end())));
        expect_realises(e, graphs::complete_multipartite(sizes));
      }
    }
  }
}

TEST(RoundTrip, EveryMethodOnSmallGraphs) {
  for (const Graph& g : corpus(6)) {
    expect_realises(embed_simplex(g), g);
    expect_realises(embed_chromatic(g, color(g, ColoringMode::exact)), g);
    if (g.node_count() >= 2) {
      const auto sub = fdim_bracket(remove_node(g, 0)).upper_certificate;
      expect_realises(embed_apex(g, 0, *sub), g);
    }
    if (auto cert = is_difference_graph(g)) {
      expect_realises(embed_difference(g, cert->position, cert->dset), g);
    }
    if (auto parts = complete_multipartite_parts(g)) {
      expect_realises(relabel(embed_complete_multipartite(*parts), g), g);
    }
  }
}

TEST(Misc, CeilLog2) {
  EXPECT_EQ(ceil_log2(1), 0u);
  EXPECT_EQ(ceil_log2(2), 1u);
  EXPECT_EQ(ceil_log2(5), 3u);
  EXPECT_EQ(ceil_log2(16), 4u);
  EXPECT_EQ(parse_embedding_method("complete-multipartite"),
            EmbeddingMethod::complete_multipartite);
  EXPECT_EQ(parse_embedding_method("nope"), std::nullopt);
  EXPECT_EQ(to_string(EmbeddingMethod::exhaustive_search), "exhaustive-search");
}
