#include <gtest/gtest.h>

#include "fdim/errors.hpp"
#include "fdim/solver.hpp"
#include "oracles.hpp"

using namespace fibdim;

TEST(DifferenceGraph, Examples) {
  const auto c5 = is_difference_graph(graphs::cycle(5));
  ASSERT_TRUE(c5);
  EXPECT_EQ(c5->dset, (std::vector<std::int64_t>{2, 3}));
  EXPECT_TRUE(check_difference_certificate(graphs::cycle(5), *c5));
  EXPECT_FALSE(is_difference_graph(graphs::cycle(6)));
  for (std::size_t n = 3; n <= 8; ++n) EXPECT_FALSE(is_difference_graph(graphs::star(n)));
  EXPECT_TRUE(is_difference_graph(graphs::empty(5)));
  EXPECT_TRUE(is_difference_graph(graphs::path(6)));
}

TEST(DifferenceGraph, CapIsEnforced) {
  EXPECT_THROW(is_difference_graph(graphs::cycle(11)), CapExceeded);
  EXPECT_TRUE(is_difference_graph(graphs::cycle(11), 11));
}

TEST(DifferenceGraph, Construction) {
  const std::vector<std::int64_t> d{3, 7};
  EXPECT_EQ(difference_graph(10, d), oracle::difference_graph(10, d));
  const std::vector<std::int64_t> bad{2, 4};
  EXPECT_THROW(difference_graph(6, bad), InvalidInput);
  EXPECT_TRUE(is_anti_divisible(std::vector<std::int64_t>{4, 6, 9}));
  EXPECT_FALSE(is_anti_divisible(std::vector<std::int64_t>{3, 9}));
}

TEST(DifferenceGraph, AgreesWithBruteForceUpToSixNodes) {
  for (std::size_t n = 1; n <= 6; ++n) {
    for (const Graph& g : oracle::graphs_up_to_iso(n)) {
      const auto cert = is_difference_graph(g);
      EXPECT_EQ(cert.has_value(), oracle::brute_force_difference_graph(g));
      if (cert) EXPECT_TRUE(check_difference_certificate(g, *cert));
    }
  }
}

TEST(Bracket, TrivialSizes) {
  const auto zero = fdim_bracket(Graph(0));
  EXPECT_EQ(zero.upper, 0u);
  EXPECT_FALSE(zero.upper_certificate);
  const auto one = fdim_bracket(Graph(1));
  EXPECT_TRUE(one.exact());
  EXPECT_EQ(one.upper, 0u);
  for (std::size_t n = 2; n <= 12; ++n) {
    const auto b = fdim_bracket(graphs::empty(n));
    EXPECT_EQ(b.lower, 1u);
    EXPECT_EQ(b.upper, 1u);
  }
}

TEST(Bracket, NamedExactValues) {
  for (std::size_t n = 1; n <= 16; ++n) {
    const auto b = fdim_bracket(graphs::complete(n));
    EXPECT_EQ(b.lower, ceil_log2(n)) << "n = " << n;
    EXPECT_EQ(b.upper, ceil_log2(n)) << "n = " << n;
  }
  for (std::size_t n = 3; n <= 20; ++n) {
    const auto b = fdim_bracket(graphs::cycle(n));
    const std::size_t expected = (n == 3 || n == 4 || n == 6) ? 2 : 1;
    EXPECT_EQ(b.lower, expected) << "n = " << n;
    EXPECT_EQ(b.upper, expected) << "n = " << n;
  }
  for (std::size_t n = 3; n <= 6; ++n) {
    const auto b = fdim_bracket(graphs::star(n));
    EXPECT_EQ(b.lower, 2u);
    EXPECT_EQ(b.upper, 2u);
    EXPECT_EQ(b.upper_certificate->method(), EmbeddingMethod::apex);
    EXPECT_EQ(b.lower_certificate, LowerCertificate::non_difference_graph);
  }
}

TEST(Bracket, Petersen) {
  const auto b = fdim_bracket(graphs::petersen());
  EXPECT_EQ(b.lower, 2u);
  EXPECT_LE(b.upper, 5u);
}

TEST(Bracket, SoundOnAllSmallGraphs) {
  for (std::size_t n = 1; n <= 6; ++n) {
    for (const Graph& g : oracle::graphs_up_to_iso(n)) {
      const auto b = fdim_bracket(g);
      ASSERT_TRUE(b.upper_certificate);
      EXPECT_LE(b.lower, b.upper);
      EXPECT_EQ(b.upper_certificate->dimension(), b.upper);
      EXPECT_EQ(b.upper_certificate->graph(), g);
      EXPECT_TRUE(oracle::realizes(g, b.upper_certificate->vertex_map(),
                                   b.upper_certificate->moves().moves()));
      // Lower bound never exceeds any construction.
      EXPECT_LE(b.lower, embed_simplex(g).dimension());
      EXPECT_LE(b.lower, embed_chromatic(g, color(g, ColoringMode::greedy)).dimension());
      if (b.lower >= 2) {
        const auto s = fdim_exact_search(g, 1, 6);
        EXPECT_NE(s.status, ExactSearchResult::Status::found);
      }
    }
  }
}

TEST(ExactSearch, Examples) {
  const auto c4 = fdim_exact_search(graphs::cycle(4), 2, 1);
  ASSERT_EQ(c4.status, ExactSearchResult::Status::found);
  EXPECT_EQ(c4.embedding->dimension(), 2u);
  EXPECT_EQ(enumerate_lattice_points(c4.embedding->polytope()),
            (std::vector<Point>{{0, 0}, {0, 1}, {1, 0}, {1, 1}}));
  EXPECT_TRUE(oracle::realizes(graphs::cycle(4), c4.embedding->vertex_map(),
                               c4.embedding->moves().moves()));
  const auto k4 = fdim_exact_search(graphs::complete(4), 2, 1);
  ASSERT_EQ(k4.status, ExactSearchResult::Status::found);
  EXPECT_EQ(k4.embedding->moves().size(), 8u);
  for (std::int64_t box = 1; box <= 8; ++box) {
    const auto k3 = fdim_exact_search(graphs::complete(3), 1, box);
    EXPECT_EQ(k3.status, ExactSearchResult::Status::none_in_box);
    EXPECT_EQ(k3.box, box);
  }
  EXPECT_EQ(fdim_exact_search(graphs::petersen(), 2, 3, 10).status,
            ExactSearchResult::Status::budget_exceeded);
}

TEST(ExactSearch, OneDimensionalAgreesWithDifferenceSearch) {
  for (std::size_t n = 2; n <= 6; ++n) {
    for (const Graph& g : oracle::graphs_up_to_iso(n)) {
      const auto s = fdim_exact_search(g, 1, static_cast<std::int64_t>(n));
      EXPECT_EQ(s.status == ExactSearchResult::Status::found,
                is_difference_graph(g).has_value());
    }
  }
}

TEST(Recognition, CompleteMultipartiteParts) {
  const std::vector<std::size_t> sizes{2, 3, 1};
  auto parts = complete_multipartite_parts(graphs::complete_multipartite(sizes));
  ASSERT_TRUE(parts);
  EXPECT_EQ(*parts, sizes);
  EXPECT_FALSE(complete_multipartite_parts(graphs::path(4)));
  EXPECT_EQ(complete_multipartite_parts(graphs::empty(3)), (std::vector<std::size_t>{3}));
}
