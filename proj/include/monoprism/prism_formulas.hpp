#ifndef MONOPRISM_PRISM_FORMULAS_HPP
#define MONOPRISM_PRISM_FORMULAS_HPP

#include <algorithm>
#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "graph.hpp"
#include "monophonic.hpp"
#include "oracle.hpp"

namespace monoprism {

/// Which of G and Ḡ is disconnected. At most one can be.
enum class Orientation { both_connected, base_disconnected, complement_disconnected };

struct CaseTag {
  Orientation orientation = Orientation::both_connected;
  bool is_c5 = false;    ///< G is the 5-cycle (then so is Ḡ)
  bool edgeless = false; ///< G has no edges
  bool complete = false; ///< G is complete

  friend bool operator==(const CaseTag &, const CaseTag &) = default;
};

/// The branch of a closed form that produced a value.
enum class Rule {
  single_vertex,        ///< n = 1, the prism is K2
  both_connected,       ///< c_m = max{ω, α}; h_m = 2
  trivial_component,    ///< c_m = 2n - 1 (minimum component of order 1)
  nontrivial_components,///< c_m for a disconnected side whose components all have order >= 2
  one_per_component,    ///< m = r
  five_cycle,           ///< G = C5
  diameter_three,       ///< diam(G) >= 3 or diam(Ḡ) >= 3
  diameter_two,         ///< diam(G) = diam(Ḡ) = 2, G != C5
  no_trivial_component, ///< h_m = 2 (t = 0)
  trivial_plus_one,     ///< h_m = t + 1
  edgeless_side,        ///< h_m = t = n for an edgeless disconnected side
};

enum class WitnessKind { max_convex_set, m_set, hull_set };

/// How to evaluate c_m when the disconnected side has no trivial component.
/// `closed_form` is max{ω, α + 2 - min αᵢ}; `amended` is max{ω, α}, which is
/// what exhaustive search finds once some component is complete.
enum class CmVariant { closed_form, amended };

struct FormulaResult {
  std::size_t value = 0;
  CaseTag case_used;
  Rule rule = Rule::single_vertex;
  VertexSet witness; ///< prism coordinates, see PrismLayout
  WitnessKind witness_kind = WitnessKind::max_convex_set;
};

inline std::string_view to_string(Orientation o) {
  switch (o) {
  case Orientation::both_connected: return "both_connected";
  case Orientation::base_disconnected: return "base_disconnected";
  case Orientation::complement_disconnected: return "complement_disconnected";
  }
  return "?";
}

inline std::string_view to_string(Rule r) {
  switch (r) {
  case Rule::single_vertex: return "single_vertex";
  case Rule::both_connected: return "both_connected";
  case Rule::trivial_component: return "trivial_component";
  case Rule::nontrivial_components: return "nontrivial_components";
  case Rule::one_per_component: return "one_per_component";
  case Rule::five_cycle: return "five_cycle";
  case Rule::diameter_three: return "diameter_three";
  case Rule::diameter_two: return "diameter_two";
  case Rule::no_trivial_component: return "no_trivial_component";
  case Rule::trivial_plus_one: return "trivial_plus_one";
  case Rule::edgeless_side: return "edgeless_side";
  }
  return "?";
}

inline std::string_view to_string(WitnessKind k) {
  switch (k) {
  case WitnessKind::max_convex_set: return "max_convex_set";
  case WitnessKind::m_set: return "m_set";
  case WitnessKind::hull_set: return "hull_set";
  }
  return "?";
}

/// C5 is the only connected 2-regular graph on five vertices.
inline bool is_five_cycle(const Graph &g) {
  if (g.order() != 5) return false;
  for (vertex v = 0; v < 5; ++v)
    if (g.degree(v) != 2) return false;
  return components(g).connected();
}

inline CaseTag classify(const Graph &g) {
  if (g.order() == 0) throw std::invalid_argument("classify needs at least one vertex");
  CaseTag tag;
  if (!components(g).connected())
    tag.orientation = Orientation::base_disconnected;
  else if (!components(complement(g)).connected())
    tag.orientation = Orientation::complement_disconnected;
  tag.is_c5 = is_five_cycle(g);
  tag.edgeless = g.edge_count() == 0;
  tag.complete = 2 * g.edge_count() == g.order() * (g.order() - 1);
  return tag;
}

namespace detail {

// The disconnected one of G, Ḡ together with the map from its own prism's
// coordinates into those of G's prism. The two prisms coincide under the
// partner swap.
struct DisconnectedSide {
  Graph graph;
  ComponentStructure parts;
  PrismLayout layout;
  bool swapped = false;

  VertexSet to_prism(VertexSet s) const {
    if (!swapped) return s;
    VertexSet out;
    for (vertex v : s) out.insert(layout.partner(v));
    return out;
  }
};

inline std::optional<DisconnectedSide> disconnected_side(const Graph &g, const CaseTag &tag) {
  switch (tag.orientation) {
  case Orientation::both_connected: return std::nullopt;
  case Orientation::base_disconnected: return DisconnectedSide{g, components(g), {g.order()}, false};
  case Orientation::complement_disconnected: {
    Graph gc = complement(g);
    auto parts = components(gc);
    return DisconnectedSide{std::move(gc), std::move(parts), {g.order()}, true};
  }
  }
  return std::nullopt;
}

// u1..u5 around the cycle, starting at vertex 0 towards its lower neighbour.
inline std::array<vertex, 5> five_cycle_order(const Graph &g) {
  std::array<vertex, 5> order{};
  order[0] = 0;
  order[1] = g.neighbours(0).front();
  for (std::size_t i = 2; i < 5; ++i)
    order[i] = (g.neighbours(order[i - 1]) - VertexSet::singleton(order[i - 2])).front();
  return order;
}

inline std::optional<edge> pair_at_distance_three(const Graph &g) {
  for (vertex u = 0; u < g.order(); ++u) {
    auto d = distances_from(g, u);
    for (vertex v = u + 1; v < g.order(); ++v)
      if (d[v] == 3) return edge{u, v};
  }
  return std::nullopt;
}

// N(u) minus N[v]: neighbours of u other than v that v does not see.
inline VertexSet private_neighbours(const Graph &g, vertex u, vertex v) {
  return g.neighbours(u) - g.closed_neighbours(v);
}

inline bool has_two_private_neighbours(const Graph &g, vertex u, vertex v) {
  return private_neighbours(g, u, v).size() >= 2;
}

// First ordered edge (u, v) with |N(u) \ N[v]| >= 2: edges in lexicographic
// order, orientation (u, v) before (v, u).
inline std::optional<edge> private_pair_edge(const Graph &g) {
  for (auto [a, b] : g.edges()) {
    if (has_two_private_neighbours(g, a, b)) return edge{a, b};
    if (has_two_private_neighbours(g, b, a)) return edge{b, a};
  }
  return std::nullopt;
}

// Derives an edge with two private neighbours from a triangle {a, b, c} in a
// graph where both it and its complement have diameter 2.
inline std::optional<edge> private_pair_from_triangle(const Graph &g, vertex a, vertex b, vertex c) {
  const VertexSet outside = g.vertices() - (g.closed_neighbours(a) | g.closed_neighbours(b));
  if (outside.empty()) return std::nullopt;
  const vertex x = outside.front();
  const VertexSet links = (g.neighbours(a) | g.neighbours(b)) & g.neighbours(x);
  if (links.empty()) return std::nullopt;
  const vertex y = links.contains(c) ? c : links.front();
  edge candidate;
  if (y == c || (g.adjacent(y, a) && g.adjacent(y, b))) {
    candidate = {y, x};
  } else {
    const vertex near = g.adjacent(y, a) ? a : b; // y sees exactly one of a, b
    candidate = g.adjacent(c, y) ? edge{y, x} : edge{near, y};
  }
  if (has_two_private_neighbours(g, candidate.first, candidate.second)) return candidate;
  return std::nullopt;
}

inline edge diameter_two_witness_edge(const Graph &g) {
  if (auto e = private_pair_edge(g)) return *e;
  for (vertex a = 0; a < g.order(); ++a)
    for (vertex b : g.neighbours(a))
      if (a < b)
        for (vertex c : g.neighbours(a) & g.neighbours(b))
          if (b < c)
            if (auto e = private_pair_from_triangle(g, a, b, c)) return *e;
  throw std::logic_error("no edge with two private neighbours in a diameter-2 graph other than C5");
}

inline std::size_t component_independence(const Graph &g, VertexSet members) {
  return independence_number(induced_subgraph(g, members)).value;
}

inline FormulaResult make(std::size_t value, const CaseTag &tag, Rule rule, VertexSet witness, WitnessKind kind) {
  FormulaResult r;
  r.value = value;
  r.case_used = tag;
  r.rule = rule;
  r.witness = witness;
  r.witness_kind = kind;
  return r;
}

inline void check_prism_input(const Graph &g) {
  if (g.order() == 0) throw std::invalid_argument("prism formulas need at least one vertex");
  if (g.order() > max_prism_base)
    throw std::invalid_argument("graph order " + std::to_string(g.order()) + " exceeds prism capacity");
}

} // namespace detail

/// c_m(GḠ) from ω, α and the component structure of whichever of G, Ḡ is
/// disconnected, with a maximum convex set of the prism as witness.
inline FormulaResult cm_prism(const Graph &g, CmVariant variant = CmVariant::closed_form) {
  detail::check_prism_input(g);
  const CaseTag tag = classify(g);
  const std::size_t n = g.order();
  const PrismLayout layout{n};
  constexpr auto kind = WitnessKind::max_convex_set;

  if (n == 1) return detail::make(1, tag, Rule::single_vertex, VertexSet{0}, kind);

  auto side = detail::disconnected_side(g, tag);
  if (!side) {
    const auto omega = clique_number(g);
    const auto alpha = independence_number(g);
    if (omega.value >= alpha.value)
      return detail::make(omega.value, tag, Rule::both_connected, omega.witness, kind);
    return detail::make(alpha.value, tag, Rule::both_connected, layout.partners(alpha.witness), kind);
  }

  const Graph &d = side->graph;
  const auto &parts = side->parts;
  if (parts.min_order == 1) {
    std::size_t first_trivial = 0;
    while (parts.sizes[first_trivial] != 1) ++first_trivial;
    const VertexSet all = VertexSet::full(2 * n);
    return detail::make(2 * n - 1, tag, Rule::trivial_component,
                        side->to_prism(all - parts.members[first_trivial]), kind);
  }

  const auto omega = clique_number(d);
  const auto alpha = independence_number(d);
  if (variant == CmVariant::amended) {
    if (omega.value >= alpha.value)
      return detail::make(omega.value, tag, Rule::nontrivial_components, side->to_prism(omega.witness), kind);
    return detail::make(alpha.value, tag, Rule::nontrivial_components,
                        side->to_prism(layout.partners(alpha.witness)), kind);
  }

  // H = {u, ū} ∪ (Ī \ V(Ḡᵢ)) for a maximum independent set I and u ∈ I in a
  // component Gᵢ of least independence number l.
  std::size_t least = 0;
  std::size_t l = detail::component_independence(d, parts.members[0]);
  for (std::size_t i = 1; i < parts.count; ++i) {
    const std::size_t ai = detail::component_independence(d, parts.members[i]);
    if (ai < l) {
      l = ai;
      least = i;
    }
  }
  const VertexSet independent = alpha.witness;
  const vertex u = (independent & parts.members[least]).front();
  VertexSet h = layout.partners(independent - parts.members[least]);
  h.insert(u);
  h.insert(layout.partner(u));
  const std::size_t h_size = alpha.value + 2 - l;
  if (omega.value >= h_size)
    return detail::make(omega.value, tag, Rule::nontrivial_components, side->to_prism(omega.witness), kind);
  return detail::make(h_size, tag, Rule::nontrivial_components, side->to_prism(h), kind);
}

/// m(GḠ): r for a disconnected side, 3 for C5 and 2 otherwise.
inline FormulaResult m_prism(const Graph &g) {
  detail::check_prism_input(g);
  const CaseTag tag = classify(g);
  const std::size_t n = g.order();
  const PrismLayout layout{n};
  constexpr auto kind = WitnessKind::m_set;

  if (n == 1) return detail::make(2, tag, Rule::single_vertex, VertexSet{0, 1}, kind);

  if (auto side = detail::disconnected_side(g, tag)) {
    VertexSet reps;
    for (auto members : side->parts.members) reps.insert(members.front());
    return detail::make(side->parts.count, tag, Rule::one_per_component, side->to_prism(reps), kind);
  }

  if (tag.is_c5) {
    const auto u = detail::five_cycle_order(g);
    return detail::make(3, tag, Rule::five_cycle, VertexSet{u[0], u[3], layout.partner(u[4])}, kind);
  }

  if (diameter(g) >= Distance(3)) {
    auto [a, b] = *detail::pair_at_distance_three(g);
    return detail::make(2, tag, Rule::diameter_three, VertexSet{a, b}, kind);
  }
  const Graph gc = complement(g);
  if (diameter(gc) >= Distance(3)) {
    auto [a, b] = *detail::pair_at_distance_three(gc);
    return detail::make(2, tag, Rule::diameter_three, VertexSet{layout.partner(a), layout.partner(b)}, kind);
  }

  auto [u, v] = detail::diameter_two_witness_edge(g);
  return detail::make(2, tag, Rule::diameter_two, VertexSet{u, layout.partner(v)}, kind);
}

/// h_m(GḠ): 2 when G and Ḡ are connected; otherwise 2 or t + 1 by the number t
/// of trivial components of the disconnected side, and t when that side has
/// no edges at all.
inline FormulaResult hm_prism(const Graph &g) {
  detail::check_prism_input(g);
  const CaseTag tag = classify(g);
  const std::size_t n = g.order();
  const PrismLayout layout{n};
  constexpr auto kind = WitnessKind::hull_set;

  if (n == 1) return detail::make(2, tag, Rule::single_vertex, VertexSet{0, 1}, kind);

  auto side = detail::disconnected_side(g, tag);
  if (!side) {
    if (tag.is_c5) {
      const auto u = detail::five_cycle_order(g);
      return detail::make(2, tag, Rule::five_cycle, VertexSet{u[0], u[3]}, kind);
    }
    auto m = m_prism(g);
    return detail::make(2, tag, Rule::both_connected, m.witness, kind);
  }

  const auto &parts = side->parts;
  const std::size_t t = parts.trivial_count;
  if (t == parts.count)
    return detail::make(t, tag, Rule::edgeless_side, side->to_prism(VertexSet::full(n)), kind);

  if (t == 0) {
    auto [u, v] = side->graph.edges().front();
    return detail::make(2, tag, Rule::no_trivial_component,
                        side->to_prism(VertexSet{layout.partner(u), layout.partner(v)}), kind);
  }

  VertexSet s;
  bool have_anchor = false;
  for (std::size_t i = 0; i < parts.count; ++i) {
    if (parts.sizes[i] == 1)
      s |= parts.members[i];
    else if (!have_anchor) {
      s.insert(parts.members[i].front());
      have_anchor = true;
    }
  }
  return detail::make(t + 1, tag, Rule::trivial_plus_one, side->to_prism(s), kind);
}

/// True when the witness has the stated size and satisfies its predicate in
/// the prism whose interval table is given.
inline bool verify_witness(const IntervalTable &prism, const FormulaResult &r) {
  if (r.witness.size() != r.value) return false;
  if (!r.witness.is_subset_of(prism.graph().vertices())) return false;
  switch (r.witness_kind) {
  case WitnessKind::max_convex_set: return r.witness != prism.graph().vertices() && is_convex(prism, r.witness);
  case WitnessKind::m_set: return is_m_set(prism, r.witness);
  case WitnessKind::hull_set: return is_hull_set(prism, r.witness);
  }
  return false;
}

using InducedP4 = std::array<vertex, 4>;

inline bool is_induced_p4(const Graph &g, const InducedP4 &p) {
  for (std::size_t i = 0; i < 4; ++i) {
    if (p[i] >= g.order()) return false;
    for (std::size_t j = i + 1; j < 4; ++j) {
      if (p[i] == p[j]) return false;
      if (g.adjacent(p[i], p[j]) != (j == i + 1)) return false;
    }
  }
  return true;
}

/// Every induced P4 of g, each listed once with p[0] < p[3].
inline std::vector<InducedP4> induced_p4s(const Graph &g) {
  std::vector<InducedP4> out;
  for (vertex b = 0; b < g.order(); ++b)
    for (vertex c : g.neighbours(b))
      for (vertex a : g.neighbours(b) - g.closed_neighbours(c))
        for (vertex d : g.neighbours(c) - g.closed_neighbours(b) - g.neighbours(a))
          if (a < d) out.push_back({a, b, c, d});
  return out;
}

/// For an induced path u1 u2 u3 u4 of G, checks that the path and its partners
/// all lie in J[u1, u4] of the prism.
inline bool p4_interval_check(const Graph &g, const InducedP4 &path) {
  if (!is_induced_p4(g, path)) throw std::invalid_argument("p4_interval_check: vertices do not form an induced P4");
  const Graph prism = complementary_prism(g);
  const PrismLayout layout{g.order()};
  VertexSet expected;
  for (vertex v : path) {
    expected.insert(v);
    expected.insert(layout.partner(v));
  }
  return expected.is_subset_of(interval(prism, path[0], path[3]));
}

} // namespace monoprism

#endif // MONOPRISM_PRISM_FORMULAS_HPP
