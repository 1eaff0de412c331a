#include <gtest/gtest.h>

#include <cmath>

#include "mids/approx.hpp"
#include "mids/generators.hpp"
#include "mids/oracle.hpp"
#include "support/brute.hpp"

using namespace mids;

TEST(Greedy, Examples) {
  EXPECT_EQ(greedy_ids(named(Family::cycle, 5), VertexSet(5)).size(), 2u);
  EXPECT_EQ(greedy_ids(named(Family::star, 5), VertexSet(5)).to_vector(),
            (std::vector<vertex_id>{1, 2, 3, 4}));
  EXPECT_EQ(greedy_ids(Graph(3), VertexSet(3)).size(), 3u);
  const Graph p5 = named(Family::path, 5);
  EXPECT_EQ(greedy_ids(p5, VertexSet::of(5, {0, 1, 2})).to_vector(), (std::vector<vertex_id>{3}));
}

TEST(Greedy, AlwaysMaximal) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    auto g = mids::testing::random_graph(seed, 1, 30);
    EXPECT_TRUE(verify_solution(*g, greedy_ids(*g, g->none())).ok());
  }
}

TEST(FixedR, Examples) {
  const auto star = approx_fixed_r(named(Family::star, 9), 3.0);
  EXPECT_TRUE(star.certified_optimal);
  EXPECT_EQ(star.solution.vertices, (std::vector<vertex_id>{0}));

  const auto c5 = approx_fixed_r(named(Family::cycle, 5), 3.0);
  EXPECT_FALSE(c5.certified_optimal);
  EXPECT_EQ(c5.solution.size(), 2u);
  EXPECT_DOUBLE_EQ(c5.ratio_bound, 3.0);
  EXPECT_THROW(approx_fixed_r(named(Family::cycle, 5), 2.5), std::invalid_argument);
}

TEST(Partition, Examples) {
  const auto c5 = approx_partition(named(Family::cycle, 5), 3.0);
  EXPECT_EQ(c5.solution.size(), 2u);
  EXPECT_EQ(c5.blocks, 2u);
  EXPECT_TRUE(verify_solution(named(Family::cycle, 5), c5.solution.vertices).ok());
  EXPECT_THROW(approx_partition(named(Family::cycle, 5), 1.0), std::invalid_argument);
  EXPECT_NEAR(c5.ratio_bound, 3.0 - (2.0 / 3.0) * std::log2(3.0), 1e-12);
}

TEST(Approx, GuaranteesAgainstOracle) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    auto g = mids::testing::random_graph(seed + 300, 1, 16);
    const auto opt = oracle_opt(Instance(g)).size();
    for (double r : {3.0, 4.0, 5.0}) {
      const auto a = approx_fixed_r(*g, r);
      const auto b = approx_partition(*g, r);
      ASSERT_TRUE(verify_solution(*g, a.solution.vertices).ok());
      ASSERT_TRUE(verify_solution(*g, b.solution.vertices).ok());
      EXPECT_LE(static_cast<double>(a.solution.size()), r * static_cast<double>(opt));
      EXPECT_LE(static_cast<double>(b.solution.size()), ratio_of_r(r) * static_cast<double>(opt));
      EXPECT_LE(b.solution.size(), a.solution.size());
      if (a.certified_optimal) {
        EXPECT_EQ(a.solution.size(), opt);
      }
      if (opt <= static_cast<std::size_t>(std::floor(static_cast<double>(g->n()) / r))) {
        EXPECT_TRUE(a.certified_optimal);
      }
    }
  }
}

TEST(Ratio, InverseRoundTrip) {
  for (double rho : {1.9, 2.0, 3.0, 4.5, 10.0, 50.0}) {
    if (rho < ratio_of_r(3.0)) {
      EXPECT_THROW(r_of_ratio(rho), std::invalid_argument);
      continue;
    }
    EXPECT_NEAR(ratio_of_r(r_of_ratio(rho)), rho, 1e-9);
  }
  EXPECT_THROW(ratio_of_r(2.9), std::invalid_argument);
}

TEST(Ratio, FrozenInversions) {
  const std::vector<std::pair<double, double>> rows{
      {2, 3.111115081}, {3, 4.787291537}, {4, 6.210465733},  {5, 7.524687887},
      {10, 13.47358667}, {20, 24.42129537}, {50, 55.69535644}};
  for (auto [rho, r] : rows) EXPECT_NEAR(r_of_ratio(rho), r, 1e-8) << rho;
}

TEST(Ratio, TimeBaseTable) {
  const std::vector<std::pair<double, double>> fixed{{3, 1.4423}, {4, 1.4143},  {5, 1.3798},
                                                     {10, 1.2590}, {20, 1.1616}, {50, 1.0814}};
  for (auto [r, base] : fixed) EXPECT_NEAR(time_base(r), base, 1e-3);
  const std::vector<std::pair<double, double>> partition{
      {2, 1.4403}, {3, 1.3870}, {4, 1.3419}, {5, 1.3077}, {10, 1.2130}, {20, 1.1398}, {50, 1.0749}};
  for (auto [rho, base] : partition) EXPECT_NEAR(time_base(r_of_ratio(rho)), base, 1e-3);
}
