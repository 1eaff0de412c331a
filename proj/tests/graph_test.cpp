#include <gtest/gtest.h>

#include <map>

#include "mids/graph.hpp"
#include "mids/instance.hpp"
#include "support/brute.hpp"

using namespace mids;
using mids::testing::make;

namespace {

std::vector<vertex_id> ids(const VertexSet& s) { return s.to_vector(); }

VertexSet set_of(std::size_t n, std::initializer_list<vertex_id> v) { return VertexSet::of(n, v); }

}  // namespace

TEST(VertexSet, BasicOps) {
  VertexSet s(130);
  s.insert(0);
  s.insert(64);
  s.insert(129);
  EXPECT_EQ(s.size(), 3u);
  EXPECT_EQ(ids(s), (std::vector<vertex_id>{0, 64, 129}));
  EXPECT_EQ(s.next(1), 64u);
  EXPECT_EQ(s.next(130), 130u);
  VertexSet full(130, true);
  EXPECT_EQ(full.size(), 130u);
  EXPECT_EQ((full - s).size(), 127u);
  EXPECT_TRUE(s.is_subset_of(full));
  s.erase(64);
  EXPECT_FALSE(s.contains(64));
}

TEST(Graph, RejectsLoopsAndDuplicates) {
  EXPECT_THROW(Graph(3, {{0, 0}}), std::invalid_argument);
  EXPECT_THROW(Graph(3, {{0, 1}, {1, 0}}), std::invalid_argument);
  EXPECT_THROW(Graph(3, {{0, 3}}), std::invalid_argument);
}

TEST(Graph, ClosedNeighborhood) {
  Graph tri(3, {{0, 1}, {1, 2}, {0, 2}});
  EXPECT_EQ(ids(closed_neighborhood(tri, 0)), (std::vector<vertex_id>{0, 1, 2}));
  Graph iso(1);
  EXPECT_EQ(ids(closed_neighborhood(iso, 0)), (std::vector<vertex_id>{0}));
  Graph p3(3, {{0, 1}, {1, 2}});
  EXPECT_EQ(ids(closed_neighborhood(p3, 1)), (std::vector<vertex_id>{0, 1, 2}));
  EXPECT_EQ(ids(closed_neighborhood(p3, 1, set_of(3, {1, 2}))), (std::vector<vertex_id>{1, 2}));
}

TEST(Graph, ClosedNeighborhoodIsSymmetric) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    auto g = mids::testing::random_graph(seed, 1, 20);
    for (vertex_id v = 0; v < g->n(); ++v) {
      const auto nv = closed_neighborhood(*g, v);
      EXPECT_TRUE(nv.contains(v));
      for (vertex_id u = 0; u < g->n(); ++u)
        EXPECT_EQ(nv.contains(u), closed_neighborhood(*g, u).contains(v));
    }
  }
}

TEST(Graph, DegreeUnderMask) {
  Graph star(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
  EXPECT_EQ(star.degree(0), 4u);
  EXPECT_EQ(star.degree(0, set_of(5, {0, 1, 2})), 2u);
}

TEST(Instance, FreeDegree) {
  // v=0 free, neighbours 1 (marked) and 2 (free)
  auto g = make(3, {{0, 1}, {0, 2}});
  Instance inst(g, set_of(3, {0, 2}));
  EXPECT_EQ(free_degree(inst, 0), 1u);

  auto g2 = make(3, {{0, 1}, {0, 2}});
  Instance all_marked_nbrs(g2, set_of(3, {0}));
  EXPECT_EQ(free_degree(all_marked_nbrs, 0), 0u);

  auto c5 = std::make_shared<const Graph>(named(Family::cycle, 5));
  Instance c5i(c5);
  for (vertex_id v = 0; v < 5; ++v) EXPECT_EQ(free_degree(c5i, v), 2u);
}

TEST(Instance, MarkedEdgesAreInvisible) {
  auto g = make(3, {{0, 1}, {1, 2}, {0, 2}});
  Instance inst(g, set_of(3, {2}));
  EXPECT_EQ(inst.degree(0), 1u);
  EXPECT_EQ(ids(inst.neighbors(0)), (std::vector<vertex_id>{2}));
  EXPECT_EQ(inst.degree(2), 2u);
  EXPECT_EQ(inst.harvest_marked_edges(), 1u);
  EXPECT_EQ(inst.harvest_marked_edges(), 0u);
  inst.mark(2);
  EXPECT_EQ(inst.harvest_marked_edges(), 2u);
}

TEST(Instance, TakeDeletesClosedNeighborhood) {
  auto g = std::make_shared<const Graph>(named(Family::path, 4));
  Instance inst(g);
  inst.take(1);
  EXPECT_EQ(ids(inst.alive()), (std::vector<vertex_id>{3}));
  EXPECT_EQ(ids(inst.chosen()), (std::vector<vertex_id>{1}));
}

TEST(EquivalentPair, Examples) {
  auto k2 = make(2, {{0, 1}});
  EXPECT_EQ(find_equivalent_pair(Instance(k2)), (EquivalentPair{0, 1}));
  EXPECT_EQ(find_equivalent_pair(Instance(k2, set_of(2, {0}))), (EquivalentPair{0, 1}));
  // the marked one goes even when it has the lower id
  EXPECT_EQ(find_equivalent_pair(Instance(k2, set_of(2, {1}))), (EquivalentPair{1, 0}));
  auto p3 = std::make_shared<const Graph>(named(Family::path, 3));
  EXPECT_FALSE(find_equivalent_pair(Instance(p3)).has_value());
}

TEST(EquivalentPair, MatchesPairwiseScanOnAllSmallGraphs) {
  for (std::size_t n = 1; n <= 6; ++n) {
    std::vector<Edge> all;
    for (vertex_id u = 0; u < n; ++u)
      for (vertex_id v = u + 1; v < n; ++v) all.emplace_back(u, v);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << all.size()); ++mask) {
      std::vector<Edge> e;
      for (std::size_t i = 0; i < all.size(); ++i)
        if ((mask >> i) & 1U) e.push_back(all[i]);
      auto g = make(n, e);
      // free/marked pattern derived from the mask so marks get exercised too
      VertexSet free = g->all();
      if (mask % 3 == 1) free.erase(static_cast<vertex_id>(mask % n));
      Instance inst(g, free);

      bool expect = false;
      for (vertex_id u = 0; u < n && !expect; ++u)
        for (vertex_id v = u + 1; v < n && !expect; ++v)
          expect = inst.closed_neighbors(u) == inst.closed_neighbors(v);
      const auto got = find_equivalent_pair(inst);
      ASSERT_EQ(got.has_value(), expect) << "n=" << n << " mask=" << mask;
      if (got) {
        EXPECT_EQ(inst.closed_neighbors(got->keep), inst.closed_neighbors(got->drop));
        if (inst.is_marked(got->keep)) {
          EXPECT_TRUE(inst.is_marked(got->drop));
        }
      }
    }
  }
}

TEST(MinDegreeVertex, Examples) {
  auto star = std::make_shared<const Graph>(named(Family::star, 5));
  EXPECT_EQ(min_degree_vertex(Instance(star)), 1u);
  auto c5 = std::make_shared<const Graph>(named(Family::cycle, 5));
  EXPECT_EQ(min_degree_vertex(Instance(c5)), 0u);
  auto p4 = std::make_shared<const Graph>(named(Family::path, 4));
  EXPECT_EQ(min_degree_vertex(Instance(p4)), 0u);
  auto k2 = make(2, {{0, 1}});
  EXPECT_FALSE(min_degree_vertex(Instance(k2, k2->none())).has_value());
}

TEST(MinDegreeVertex, PrefersHigherDegreeNeighbour) {
  // vertices 0 and 3 both have degree 2; only 3 touches the degree-3 vertex 4
  auto g = make(6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}, {4, 1}});
  Instance inst(g);
  const auto v = min_degree_vertex(inst);
  ASSERT_TRUE(v);
  EXPECT_EQ(inst.degree(*v), 2u);
  bool has_bigger = false;
  for (auto u : inst.neighbors(*v)) has_bigger = has_bigger || inst.degree(u) >= 3;
  EXPECT_TRUE(has_bigger);
}

TEST(MinDegreeVertex, AlwaysGlobalMinimumAmongFree) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    auto g = mids::testing::random_graph(seed, 1, 16);
    Instance inst(g, mids::testing::random_free(*g, seed, 0.3));
    const auto v = min_degree_vertex(inst);
    if (inst.free().empty()) {
      EXPECT_FALSE(v);
      continue;
    }
    ASSERT_TRUE(v);
    EXPECT_TRUE(inst.is_free(*v));
    for (auto u : inst.free()) EXPECT_LE(inst.degree(*v), inst.degree(u));
  }
}

TEST(VerifySolution, Examples) {
  Graph c4 = named(Family::cycle, 4);
  auto r = verify_solution(c4, std::vector<vertex_id>{0, 2});
  EXPECT_TRUE(r.independent && r.dominating);
  r = verify_solution(c4, std::vector<vertex_id>{0});
  EXPECT_TRUE(r.independent);
  EXPECT_FALSE(r.dominating);
  r = verify_solution(c4, std::vector<vertex_id>{0, 1});
  EXPECT_FALSE(r.independent);
  EXPECT_TRUE(r.dominating);
}

TEST(VerifySolution, EquivalentToMaximalIndependence) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    auto g = mids::testing::random_graph(seed, 1, 10);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g->n()); ++mask) {
      VertexSet s = g->none();
      for (auto v : mids::testing::ids_of(mask)) s.insert(v);
      ASSERT_EQ(verify_solution(*g, s).ok(), mids::testing::maximal_mask(*g, mask));
    }
  }
}

TEST(Graph, ConnectedComponents) {
  Graph g = named(Family::triangles, 2);
  const auto comps = connected_components(g, g.all());
  ASSERT_EQ(comps.size(), 2u);
  EXPECT_EQ(ids(comps[0]), (std::vector<vertex_id>{0, 1, 2}));
  EXPECT_EQ(ids(comps[1]), (std::vector<vertex_id>{3, 4, 5}));
  EXPECT_TRUE(connected_components(Graph(0), Graph(0).all()).empty());
}
