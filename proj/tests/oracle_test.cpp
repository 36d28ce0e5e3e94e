#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include <monoprism/generators.hpp>
#include <monoprism/graph_io.hpp>
#include <monoprism/oracle.hpp>

#include "test_support.hpp"

using namespace monoprism;
using monoprism::test_support::brute_clique;
using monoprism::test_support::small_corpus;

namespace {

const Graph petersen = complementary_prism(cycle_graph(5));

std::vector<Graph> oracle_corpus() {
  std::vector<Graph> out;
  for (const auto &g : small_corpus()) {
    out.push_back(g);
    if (g.order() <= 5) out.push_back(complementary_prism(g));
  }
  return out;
}

// Smallest k for which some k-set satisfies `pred`, by plain enumeration.
template <typename Pred> std::size_t brute_minimum(std::size_t n, Pred pred) {
  std::size_t best = n + 1;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    VertexSet s(mask);
    if (s.size() < best && pred(s)) best = s.size();
  }
  return best;
}

} // namespace

TEST(CliqueNumber, Examples) {
  EXPECT_EQ(clique_number(cycle_graph(5)).value, 2U);
  EXPECT_EQ(independence_number(cycle_graph(5)).value, 2U);
  EXPECT_EQ(clique_number(complete_graph(4)).value, 4U);
  EXPECT_EQ(independence_number(complete_graph(4)).value, 1U);
  const auto two_k2 = disjoint_union(complete_graph(2), complete_graph(2));
  EXPECT_EQ(clique_number(two_k2).value, 2U);
  EXPECT_EQ(independence_number(two_k2).value, 2U);
  EXPECT_EQ(clique_number(petersen).value, 2U);
  EXPECT_EQ(independence_number(petersen).value, 4U);
}

TEST(CliqueNumber, MatchesBruteForce) {
  for (const auto &g : oracle_corpus()) {
    const auto w = clique_number(g);
    EXPECT_EQ(w.value, brute_clique(g));
    EXPECT_TRUE(is_clique(g, w.witness));
    EXPECT_EQ(w.witness.size(), w.value);
    const auto a = independence_number(g);
    EXPECT_EQ(a.value, brute_clique(complement(g)));
    EXPECT_TRUE(is_independent(g, a.witness));
  }
}

TEST(ConvexityNumber, Examples) {
  EXPECT_EQ(convexity_number(petersen).value, 2U);
  EXPECT_EQ(convexity_number(path_graph(4)).value, 3U);
  EXPECT_EQ(convexity_number(complete_graph(4)).value, 3U);
  // Frozen from the brute-force interval and an unpruned subset scan.
  const auto prism_2k2 = complementary_prism(disjoint_union(complete_graph(2), complete_graph(2)));
  EXPECT_EQ(convexity_number(prism_2k2).value, 2U);
}

TEST(ConvexityNumber, MatchesUnprunedScan) {
  for (const auto &g : oracle_corpus()) {
    const IntervalTable t(g);
    std::size_t best = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.order()); ++mask) {
      VertexSet s(mask);
      if (s != g.vertices() && s.size() > best && is_convex(t, s)) best = s.size();
    }
    EXPECT_EQ(convexity_number(t).value, best) << to_graph6(g);
  }
}

TEST(MonophonicNumber, Examples) {
  EXPECT_EQ(monophonic_number(petersen).value, 3U);
  EXPECT_EQ(hull_number(petersen).value, 2U);
  const auto p4 = complementary_prism(path_graph(4));
  EXPECT_EQ(monophonic_number(p4).value, 2U);
  EXPECT_EQ(hull_number(p4).value, 2U);
  const auto three = complementary_prism(disjoint_union(disjoint_union(complete_graph(3), path_graph(2)), complete_graph(1)));
  EXPECT_EQ(monophonic_number(three).value, 3U);
}

TEST(Oracle, DegenerateInputs) {
  EXPECT_THROW(convexity_number(Graph(0)), std::invalid_argument);
  EXPECT_THROW(monophonic_number(Graph(0)), std::invalid_argument);
  const auto k1 = complete_graph(1);
  EXPECT_EQ(convexity_number(k1).value, 0U);
  EXPECT_EQ(monophonic_number(k1).value, 1U);
  EXPECT_EQ(hull_number(k1).value, 1U);
  const auto k2 = complete_graph(2);
  EXPECT_EQ(convexity_number(k2).value, 1U);
  EXPECT_EQ(monophonic_number(k2).value, 2U);
  EXPECT_EQ(hull_number(k2).value, 2U);
}

TEST(Oracle, RefusesGraphsAboveCap) {
  EXPECT_THROW(convexity_number(cycle_graph(17)), OracleOutOfRange);
  EXPECT_THROW(monophonic_number(cycle_graph(9), 8), OracleOutOfRange);
  EXPECT_NO_THROW(monophonic_number(cycle_graph(9), 9));
  EXPECT_THROW(hull_number(IntervalTable(path_graph(5)), 4), OracleOutOfRange);
}

TEST(Oracle, HullSearchBoundIsEnforced) {
  // h_m(C6) = 2, so a bound of 1 leaves nothing to find
  EXPECT_THROW(hull_number(IntervalTable(cycle_graph(6)), 16, true, 1), std::logic_error);
}

TEST(Oracle, WitnessesSatisfyTheirPredicates) {
  for (const auto &g : oracle_corpus()) {
    const IntervalTable t(g);
    const auto r = oracle_invariants(t);
    EXPECT_EQ(r.cm.witness.size(), r.cm.value);
    EXPECT_TRUE(is_convex(t, r.cm.witness));
    EXPECT_NE(r.cm.witness, g.vertices());
    EXPECT_EQ(r.m.witness.size(), r.m.value);
    EXPECT_TRUE(is_m_set(t, r.m.witness));
    EXPECT_EQ(r.hm.witness.size(), r.hm.value);
    EXPECT_TRUE(is_hull_set(t, r.hm.witness));
  }
}

TEST(Oracle, MinimaMatchPlainEnumeration) {
  for (const auto &g : oracle_corpus()) {
    const IntervalTable t(g);
    EXPECT_EQ(monophonic_number(t).value, brute_minimum(g.order(), [&](VertexSet s) { return is_m_set(t, s); }));
    EXPECT_EQ(hull_number(t).value, brute_minimum(g.order(), [&](VertexSet s) { return is_hull_set(t, s); }));
  }
}

TEST(Properties, FeasibilityIsMonotone) {
  std::mt19937_64 rng(17);
  for (const auto &g : oracle_corpus()) {
    const IntervalTable t(g);
    for (int i = 0; i < 20; ++i) {
      const VertexSet s(rng() & g.vertices().bits());
      const VertexSet bigger = s | VertexSet(rng() & g.vertices().bits());
      if (is_m_set(t, s)) { EXPECT_TRUE(is_m_set(t, bigger)); }
      if (is_hull_set(t, s)) { EXPECT_TRUE(is_hull_set(t, bigger)); }
    }
  }
}

TEST(Properties, SimplicialVertexGivesLargestConvexSet) {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 100; ++i) {
    const std::size_t n = 4 + i % 8;
    Graph g = random_gnp(n, 0.2 + 0.15 * (i % 5), rng);
    // plant a pendant vertex on vertex 0
    auto edges = g.edges();
    edges.push_back({0, n});
    g = Graph(n + 1, edges);
    ASSERT_TRUE(is_simplicial(g, n));
    EXPECT_EQ(convexity_number(g).value, g.order() - 1) << to_graph6(g);
  }
}

TEST(Properties, SimplicialVerticesLieInEveryMinimumSet) {
  for (const auto &g : oracle_corpus()) {
    const IntervalTable t(g);
    const VertexSet simplicial = simplicial_vertices(g);
    const auto m = monophonic_number(t, default_oracle_cap, false);
    const auto h = hull_number(t, default_oracle_cap, false);
    EXPECT_EQ(m.value, monophonic_number(t).value);
    EXPECT_EQ(h.value, hull_number(t).value);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.order()); ++mask) {
      VertexSet s(mask);
      if (s.size() == m.value && is_m_set(t, s)) { EXPECT_TRUE(simplicial.is_subset_of(s)) << to_graph6(g); }
      if (s.size() == h.value && is_hull_set(t, s)) { EXPECT_TRUE(simplicial.is_subset_of(s)) << to_graph6(g); }
    }
  }
}

TEST(Properties, HullNumberBoundedByOtherInvariants) {
  for (const auto &g : oracle_corpus()) {
    const IntervalTable t(g);
    const auto cm = convexity_number(t).value;
    const auto m = monophonic_number(t).value;
    const auto h = hull_number(t).value;
    EXPECT_LE(h, std::min(m, cm + 1)) << to_graph6(g);
  }
}
