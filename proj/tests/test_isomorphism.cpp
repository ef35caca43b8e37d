#include <gtest/gtest.h>

#include <random>

#include "gemkit/fixtures.hpp"
#include "gemkit/isomorphism.hpp"
#include "test_support.hpp"

namespace gemkit {
namespace {

ColoredGraph shuffled(const ColoredGraph& g, std::mt19937_64& rng, bool colors_too) {
  auto vmap = testing::random_vertex_permutation(g.order(), rng);
  std::vector<int> cmap(static_cast<std::size_t>(g.num_colors()));
  std::iota(cmap.begin(), cmap.end(), 0);
  if (colors_too) std::shuffle(cmap.begin(), cmap.end(), rng);
  return ColoredGraph::from_involutions(g.num_colors(), testing::apply_maps(g, vmap, cmap));
}

TEST(Isomorphism, AgreesWithBruteForceOnSmallGraphs) {
  std::mt19937_64 rng(17);
  int positives = 0;
  int negatives = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const int colors = 2 + static_cast<int>(rng() % 3);
    const Vertex n = 2 * static_cast<Vertex>(1 + rng() % 3);
    const ColoredGraph a = testing::random_graph(colors, n, rng);
    const ColoredGraph b = trial % 3 == 0 ? shuffled(a, rng, trial % 2 == 0) : testing::random_graph(colors, n, rng);
    for (bool allow : {false, true}) {
      const bool expected = testing::brute_force_isomorphic(a, b, allow);
      const auto cert = are_isomorphic(a, b, allow);
      ASSERT_EQ(cert.has_value(), expected) << "trial " << trial << " allow " << allow;
      if (cert) {
        EXPECT_TRUE(verify_certificate(a, b, *cert));
        ++positives;
      } else {
        ++negatives;
      }
      EXPECT_EQ(canonical_code(a, allow) == canonical_code(b, allow), expected);
    }
  }
  EXPECT_GT(positives, 50);
  EXPECT_GT(negatives, 50);
}

TEST(Isomorphism, CanonicalCodeMatchesIsomorphismOnRandomPairs) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    const int colors = 3 + static_cast<int>(rng() % 3);
    const Vertex n = 2 * static_cast<Vertex>(1 + rng() % 4);
    const ColoredGraph a = testing::random_graph(colors, n, rng);
    // half the pairs are relabelings, half are one edge swap away
    ColoredGraph b = shuffled(a, rng, trial % 4 == 0);
    if (trial % 2 == 1 && n >= 4) {
      const Vertex x = static_cast<Vertex>(rng() % n);
      Vertex y = static_cast<Vertex>(rng() % n);
      while (y == x || y == b.neighbor(0, x)) y = static_cast<Vertex>(rng() % n);
      b = testing::swap_edges(b, 0, x, y);
    }
    for (bool allow : {false, true}) {
      const bool iso = are_isomorphic(a, b, allow).has_value();
      EXPECT_EQ(canonical_code(a, allow) == canonical_code(b, allow), iso) << "trial " << trial;
    }
  }
}

TEST(Isomorphism, RelabelingIsAlwaysIsomorphic) {
  std::mt19937_64 rng(5);
  for (auto key : kFixtureKeys) {
    const ColoredGraph g = builtin(key).graph;
    for (int trial = 0; trial < 5; ++trial) {
      const ColoredGraph h = shuffled(g, rng, false);
      const auto cert = are_isomorphic(g, h);
      ASSERT_TRUE(cert.has_value()) << key;
      EXPECT_TRUE(verify_certificate(g, h, *cert));
      EXPECT_EQ(canonical_code(g), canonical_code(h));
      const ColoredGraph k = shuffled(g, rng, true);
      EXPECT_TRUE(are_isomorphic(g, k, true).has_value());
      EXPECT_EQ(canonical_code(g, true), canonical_code(k, true));
    }
  }
}

TEST(Isomorphism, CanonicalFormIsIdempotentAndRelabelingInvariant) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 60; ++trial) {
    const ColoredGraph g = testing::random_graph(3, 6, rng);
    const CanonicalForm cf = canonical_form(g);
    EXPECT_EQ(relabel(g, cf.labeling, cf.color_map), cf.graph);
    EXPECT_EQ(canonical_form(cf.graph).graph, cf.graph);
    const ColoredGraph h = shuffled(g, rng, false);
    EXPECT_EQ(testing::brute_force_canonical(g), testing::brute_force_canonical(h));
    EXPECT_EQ(canonical_form(h).graph, cf.graph);
  }
}

TEST(Isomorphism, ColorPermutedFormReportsItsColorMap) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 30; ++trial) {
    const ColoredGraph g = testing::random_graph(4, 6, rng);
    const CanonicalForm cf = canonical_form(g, true);
    EXPECT_EQ(relabel(g, cf.labeling, cf.color_map), cf.graph);
  }
}

TEST(Isomorphism, BundleDrawingsAreNotIsomorphic) {
  const ColoredGraph a = builtin("s1xs3").graph;
  const ColoredGraph b = builtin("s1~s3").graph;
  EXPECT_FALSE(are_isomorphic(a, b).has_value());
  EXPECT_FALSE(are_isomorphic(a, b, true).has_value());
  EXPECT_NE(canonical_code(a), canonical_code(b));
  EXPECT_NE(canonical_code(a, true), canonical_code(b, true));
}

TEST(Isomorphism, DisconnectedGraphsMatchComponentwise) {
  const ColoredGraph s1s3 = builtin("s1xs3").graph;
  const ColoredGraph rp4 = builtin("rp4").graph;
  const ColoredGraph ab = disjoint_union(s1s3, rp4);
  const ColoredGraph ba = disjoint_union(rp4, s1s3);
  const auto cert = are_isomorphic(ab, ba);
  ASSERT_TRUE(cert.has_value());
  EXPECT_TRUE(verify_certificate(ab, ba, *cert));
  EXPECT_EQ(canonical_code(ab), canonical_code(ba));
  EXPECT_FALSE(are_isomorphic(disjoint_union(s1s3, s1s3), disjoint_union(s1s3, builtin("s1~s3").graph)).has_value());
}

TEST(Isomorphism, MismatchedShapesAreNotIsomorphic) {
  const ColoredGraph s4 = builtin("s4").graph;
  const ColoredGraph three = ColoredGraph::from_involutions(3, {{1, 0}, {1, 0}, {1, 0}});
  EXPECT_FALSE(are_isomorphic(s4, three).has_value());
  EXPECT_FALSE(are_isomorphic(s4, builtin("rp4").graph).has_value());
  EXPECT_NE(canonical_code(s4), canonical_code(three));
}

TEST(Isomorphism, EncodingLayout) {
  const ColoredGraph g = ColoredGraph::from_involutions(2, {{1, 0}, {1, 0}});
  EXPECT_EQ(to_hex(encode(g)), "02" "00000002" "00000001" "00000000" "00000001" "00000000");
}

}  // namespace
}  // namespace gemkit
