#include <gtest/gtest.h>

#include <monoprism/generators.hpp>
#include <monoprism/graph_io.hpp>
#include <monoprism/harness.hpp>
#include <monoprism/prism_formulas.hpp>

#include "test_support.hpp"

using namespace monoprism;
using monoprism::test_support::small_corpus;

namespace {

Graph two_k2() { return disjoint_union(complete_graph(2), complete_graph(2)); }
Graph k3_k1() { return disjoint_union(complete_graph(3), complete_graph(1)); }

// Every graph with n <= 4 plus the small corpus.
std::vector<Graph> formula_corpus() {
  auto out = exhaustive_corpus(4);
  for (const auto &g : small_corpus()) out.push_back(g);
  return out;
}

} // namespace

TEST(Classify, Examples) {
  const auto c5 = classify(cycle_graph(5));
  EXPECT_EQ(c5.orientation, Orientation::both_connected);
  EXPECT_TRUE(c5.is_c5);
  EXPECT_EQ(classify(k3_k1()).orientation, Orientation::base_disconnected);
  const auto k4 = classify(complete_graph(4));
  EXPECT_EQ(k4.orientation, Orientation::complement_disconnected);
  EXPECT_TRUE(k4.complete);
  EXPECT_TRUE(classify(empty_graph(3)).edgeless);
  EXPECT_EQ(classify(path_graph(4)).orientation, Orientation::both_connected);
  EXPECT_THROW(classify(Graph(0)), std::invalid_argument);
}

TEST(Classify, FiveCycleDetection) {
  EXPECT_TRUE(is_five_cycle(cycle_graph(5)));
  EXPECT_TRUE(is_five_cycle(complement(cycle_graph(5))));
  EXPECT_FALSE(is_five_cycle(cycle_graph(6)));
  EXPECT_FALSE(is_five_cycle(path_graph(5)));
  // 2-regular on five vertices but not connected is impossible; K3 ∪ K2 is not 2-regular
  EXPECT_FALSE(is_five_cycle(disjoint_union(complete_graph(3), complete_graph(2))));
  for (const auto &g : all_labelled_graphs(5)) {
    bool regular = true;
    for (vertex v = 0; v < 5; ++v) regular = regular && g.degree(v) == 2;
    EXPECT_EQ(is_five_cycle(g), regular);
  }
}

TEST(ConvexityFormula, Examples) {
  const auto c5 = cm_prism(cycle_graph(5));
  EXPECT_EQ(c5.value, 2U);
  EXPECT_EQ(c5.rule, Rule::both_connected);

  const auto kk = cm_prism(k3_k1());
  EXPECT_EQ(kk.value, 7U);
  EXPECT_EQ(kk.rule, Rule::trivial_component);
  EXPECT_EQ(kk.witness, VertexSet::full(8) - VertexSet{3});

  EXPECT_EQ(cm_prism(complete_graph(1)).value, 1U);
}

TEST(ConvexityFormula, TwoK2ClosedFormDisagreesWithSearch) {
  // The closed-form branch for a disconnected side without trivial components
  // gives 3 here; exhaustive search finds no convex set of size 3.
  const auto closed = cm_prism(two_k2());
  EXPECT_EQ(closed.value, 3U);
  EXPECT_EQ(closed.rule, Rule::nontrivial_components);
  const IntervalTable t(complementary_prism(two_k2()));
  EXPECT_FALSE(verify_witness(t, closed));
  EXPECT_EQ(convexity_number(t).value, 2U);

  const auto amended = cm_prism(two_k2(), CmVariant::amended);
  EXPECT_EQ(amended.value, 2U);
  EXPECT_TRUE(verify_witness(t, amended));
}

TEST(ConvexityFormula, ClosedFormAgreesWhenNoComponentIsComplete) {
  // C4 ∪ C4: every component has independence number 2 and is not complete
  const auto g = disjoint_union(cycle_graph(4), cycle_graph(4));
  const auto closed = cm_prism(g);
  EXPECT_EQ(closed.value, cm_prism(g, CmVariant::amended).value);
}

TEST(MonophonicFormula, Examples) {
  const auto c5 = m_prism(cycle_graph(5));
  EXPECT_EQ(c5.value, 3U);
  EXPECT_EQ(c5.rule, Rule::five_cycle);
  EXPECT_EQ(c5.witness, (VertexSet{0, 3, 9}));

  const auto three = m_prism(disjoint_union(disjoint_union(complete_graph(3), complete_graph(2)), complete_graph(2)));
  EXPECT_EQ(three.value, 3U);
  EXPECT_EQ(three.witness, (VertexSet{0, 3, 5}));

  const auto p4 = m_prism(path_graph(4));
  EXPECT_EQ(p4.value, 2U);
  EXPECT_EQ(p4.rule, Rule::diameter_three);
  EXPECT_EQ(p4.witness, (VertexSet{0, 3}));

  EXPECT_EQ(m_prism(two_k2()).value, 2U);
  EXPECT_EQ(m_prism(complete_graph(1)).value, 2U);
}

TEST(HullFormula, Examples) {
  const auto a = hm_prism(two_k2());
  EXPECT_EQ(a.value, 2U);
  EXPECT_EQ(a.rule, Rule::no_trivial_component);
  EXPECT_EQ(a.witness, (VertexSet{4, 5}));

  const auto b = hm_prism(k3_k1());
  EXPECT_EQ(b.value, 2U);
  EXPECT_EQ(b.rule, Rule::trivial_plus_one);
  EXPECT_EQ(b.witness, (VertexSet{0, 3}));

  const auto c = hm_prism(cycle_graph(5));
  EXPECT_EQ(c.value, 2U);
  EXPECT_EQ(c.witness, (VertexSet{0, 3}));

  const auto d = hm_prism(empty_graph(3));
  EXPECT_EQ(d.value, 3U);
  EXPECT_EQ(d.rule, Rule::edgeless_side);

  // complete graphs reach the edgeless side through the complement
  const auto e = hm_prism(complete_graph(3));
  EXPECT_EQ(e.value, 3U);
  EXPECT_EQ(e.witness, (VertexSet{3, 4, 5}));
}

TEST(Formulas, RejectBadInput) {
  EXPECT_THROW(cm_prism(Graph(0)), std::invalid_argument);
  EXPECT_THROW(m_prism(Graph(33)), std::invalid_argument);
  EXPECT_THROW(hm_prism(Graph(0)), std::invalid_argument);
}

TEST(InducedP4, IntervalContainsPathAndPartners) {
  EXPECT_TRUE(p4_interval_check(path_graph(4), {0, 1, 2, 3}));
  EXPECT_TRUE(p4_interval_check(cycle_graph(6), {0, 1, 2, 3}));
  EXPECT_THROW(p4_interval_check(cycle_graph(4), {0, 1, 2, 3}), std::invalid_argument);
  EXPECT_THROW(p4_interval_check(path_graph(4), {0, 1, 2, 2}), std::invalid_argument);
  std::size_t seen = 0;
  for (const auto &g : small_corpus())
    for (const auto &p : induced_p4s(g)) {
      ++seen;
      EXPECT_TRUE(p4_interval_check(g, p)) << to_graph6(g);
    }
  EXPECT_GT(seen, 50U);
}

TEST(InducedP4, EnumerationIsComplete) {
  for (const auto &g : small_corpus()) {
    std::size_t brute = 0;
    const std::size_t n = g.order();
    for (vertex a = 0; a < n; ++a)
      for (vertex b = 0; b < n; ++b)
        for (vertex c = 0; c < n; ++c)
          for (vertex d = a + 1; d < n; ++d)
            if (is_induced_p4(g, {a, b, c, d})) ++brute;
    EXPECT_EQ(induced_p4s(g).size(), brute);
  }
}

TEST(Properties, ComplementGivesTheSameValues) {
  for (const auto &g : formula_corpus()) {
    const auto gc = complement(g);
    EXPECT_EQ(cm_prism(g).value, cm_prism(gc).value);
    EXPECT_EQ(cm_prism(g, CmVariant::amended).value, cm_prism(gc, CmVariant::amended).value);
    EXPECT_EQ(m_prism(g).value, m_prism(gc).value);
    EXPECT_EQ(hm_prism(g).value, hm_prism(gc).value);
  }
}

TEST(Properties, WitnessesVerify) {
  for (const auto &g : formula_corpus()) {
    const IntervalTable t(complementary_prism(g));
    EXPECT_TRUE(verify_witness(t, cm_prism(g, CmVariant::amended))) << to_graph6(g);
    EXPECT_TRUE(verify_witness(t, m_prism(g))) << to_graph6(g);
    EXPECT_TRUE(verify_witness(t, hm_prism(g))) << to_graph6(g);
  }
}

TEST(Properties, DiameterTwoGraphsHaveAnEdgeWithTwoPrivateNeighbours) {
  std::size_t checked = 0;
  for (std::size_t n = 5; n <= 6; ++n)
    for (const auto &g : all_labelled_graphs(n)) {
      if (is_five_cycle(g) || diameter(g) != Distance(2) || diameter(complement(g)) != Distance(2)) continue;
      ++checked;
      const auto [u, v] = detail::diameter_two_witness_edge(g);
      EXPECT_TRUE(g.adjacent(u, v));
      EXPECT_GE(detail::private_neighbours(g, u, v).size(), 2U) << to_graph6(g);
    }
  EXPECT_GT(checked, 0U);
}

TEST(Properties, TriangleFallbackYieldsAValidEdge) {
  for (std::size_t n = 5; n <= 6; ++n)
    for (const auto &g : all_labelled_graphs(n)) {
      if (is_five_cycle(g) || diameter(g) != Distance(2) || diameter(complement(g)) != Distance(2)) continue;
      for (vertex a = 0; a < n; ++a)
        for (vertex b : g.neighbours(a))
          for (vertex c : g.neighbours(a) & g.neighbours(b)) {
            if (!(a < b && b < c)) continue;
            if (auto e = detail::private_pair_from_triangle(g, a, b, c)) {
              EXPECT_TRUE(g.adjacent(e->first, e->second));
              EXPECT_TRUE(detail::has_two_private_neighbours(g, e->first, e->second));
            }
          }
    }
}

TEST(Properties, MonophonicAndHullFormulasMatchOracle) {
  for (const auto &g : formula_corpus()) {
    const IntervalTable t(complementary_prism(g));
    const auto r = oracle_invariants(t);
    EXPECT_EQ(m_prism(g).value, r.m.value) << to_graph6(g);
    EXPECT_EQ(hm_prism(g).value, r.hm.value) << to_graph6(g);
  }
}

TEST(Properties, AmendedConvexityFormulaMatchesOracle) {
  for (const auto &g : formula_corpus()) {
    const IntervalTable t(complementary_prism(g));
    EXPECT_EQ(cm_prism(g, CmVariant::amended).value, convexity_number(t).value) << to_graph6(g);
  }
}

TEST(Properties, ClosedFormFailsOnlyWithACompleteComponent) {
  for (const auto &g : formula_corpus()) {
    const auto closed = cm_prism(g);
    const auto amended = cm_prism(g, CmVariant::amended);
    if (closed.value == amended.value) continue;
    const auto tag = classify(g);
    const Graph side = tag.orientation == Orientation::base_disconnected ? g : complement(g);
    const auto parts = components(side);
    bool has_complete = false;
    for (auto members : parts.members) has_complete = has_complete || is_clique(side, members);
    EXPECT_EQ(closed.rule, Rule::nontrivial_components);
    EXPECT_TRUE(has_complete) << to_graph6(g);
  }
}
