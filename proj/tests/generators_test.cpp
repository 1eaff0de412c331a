#include <gtest/gtest.h>

#include "mids/generators.hpp"

using namespace mids;

TEST(Gnp, Extremes) {
  EXPECT_EQ(gnp(5, 0.0, 9).m(), 0u);
  EXPECT_EQ(gnp(4, 1.0, 9).m(), 6u);
  EXPECT_THROW(gnp(4, 1.5, 0), std::invalid_argument);
  EXPECT_THROW(gnp(4, -0.1, 0), std::invalid_argument);
}

TEST(Gnp, DeterministicPerSeed) {
  EXPECT_EQ(gnp(10, 0.5, 42).edges(), gnp(10, 0.5, 42).edges());
  EXPECT_NE(gnp(30, 0.5, 1).edges(), gnp(30, 0.5, 2).edges());
}

TEST(Gnp, PinnedSampler) {
  // computed by an independent MT19937-64 port, then frozen
  const std::vector<Edge> expect{{0, 4}, {1, 2}, {1, 4}, {1, 5}, {2, 3}, {2, 4}};
  EXPECT_EQ(gnp(6, 0.5, 42).edges(), expect);
}

TEST(Gnp, EdgeDensity) {
  std::size_t m = 0;
  for (std::uint64_t s = 0; s < 20; ++s) m += gnp(40, 0.3, s).m();
  const double mean = static_cast<double>(m) / 20.0 / (40.0 * 39.0 / 2.0);
  EXPECT_NEAR(mean, 0.3, 0.02);
}

TEST(Named, Families) {
  const Graph c5 = named(Family::cycle, 5);
  EXPECT_EQ(c5.n(), 5u);
  EXPECT_EQ(c5.m(), 5u);
  for (vertex_id v = 0; v < 5; ++v) EXPECT_EQ(c5.degree(v), 2u);

  const Graph t3 = named(Family::triangles, 3);
  EXPECT_EQ(t3.n(), 9u);
  EXPECT_EQ(t3.m(), 9u);

  const Graph star = named(Family::star, 5);
  EXPECT_EQ(star.degree(0), 4u);
  EXPECT_EQ(star.m(), 4u);

  EXPECT_EQ(named(Family::complete, 7).m(), 21u);
  EXPECT_EQ(named(Family::path, 4).m(), 3u);
  const Graph k23 = named(Family::complete_bipartite, 2, 3);
  EXPECT_EQ(k23.n(), 5u);
  EXPECT_EQ(k23.m(), 6u);
  EXPECT_FALSE(k23.adjacent(0, 1));
}

TEST(Named, CardinalityProperties) {
  for (std::size_t n = 3; n < 20; ++n) {
    EXPECT_EQ(named(Family::cycle, n).m(), n);
    EXPECT_EQ(named(Family::complete, n).m(), n * (n - 1) / 2);
  }
}

TEST(Named, RejectsBadSizes) {
  EXPECT_THROW(named(Family::cycle, 2), std::invalid_argument);
  EXPECT_THROW(named(Family::star, 0), std::invalid_argument);
  EXPECT_THROW(family_from_name("wheel"), std::invalid_argument);
  EXPECT_EQ(family_from_name("triangles"), Family::triangles);
}

TEST(Gnp, GeneratedGraphsAreSimple) {
  for (std::uint64_t s = 0; s < 30; ++s) {
    const Graph g = gnp(25, 0.5, s);
    for (vertex_id v = 0; v < g.n(); ++v) {
      EXPECT_FALSE(g.neighbors(v).contains(v));
      for (auto u : g.neighbors(v)) EXPECT_TRUE(g.adjacent(u, v));
    }
  }
}
