#ifndef MONOPRISM_GRAPH_HPP
#define MONOPRISM_GRAPH_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "vertex_set.hpp"

namespace monoprism {

using edge = std::pair<vertex, vertex>;

/// Simple undirected graph on vertices 0..n-1, stored as one neighbourhood
/// bitset per vertex. Immutable once built.
class Graph {
public:
  Graph() = default;

  explicit Graph(std::size_t n) : adj_(n) { check_order(n); }

  Graph(std::size_t n, const std::vector<edge> &edges) : Graph(n) {
    for (auto [u, v] : edges) {
      if (u >= n || v >= n)
        throw std::invalid_argument("edge {" + std::to_string(u) + "," + std::to_string(v) +
                                    "} out of range for n=" + std::to_string(n));
      if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
      adj_[u].insert(v);
      adj_[v].insert(u);
    }
  }

  /// Builds from raw neighbourhoods, rejecting anything that is not a simple
  /// undirected graph.
  static Graph from_adjacency(std::vector<VertexSet> adj) {
    Graph g;
    check_order(adj.size());
    g.adj_ = std::move(adj);
    if (auto why = g.validate(); !why.empty()) throw std::invalid_argument(why);
    return g;
  }

  std::size_t order() const { return adj_.size(); }
  VertexSet vertices() const { return VertexSet::full(order()); }
  VertexSet neighbours(vertex v) const { return adj_[v]; }
  VertexSet closed_neighbours(vertex v) const { return adj_[v] | VertexSet::singleton(v); }
  std::size_t degree(vertex v) const { return adj_[v].size(); }
  bool adjacent(vertex u, vertex v) const { return adj_[u].contains(v); }

  std::size_t edge_count() const {
    std::size_t twice = 0;
    for (auto s : adj_) twice += s.size();
    return twice / 2;
  }

  /// Edges {u,v} with u < v in lexicographic order.
  std::vector<edge> edges() const {
    std::vector<edge> out;
    for (vertex u = 0; u < order(); ++u)
      for (vertex v : adj_[u])
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  /// Empty string when the adjacency is symmetric, irreflexive and in range;
  /// otherwise a description of the first violation.
  std::string validate() const {
    const auto all = vertices();
    for (vertex v = 0; v < order(); ++v) {
      if (!adj_[v].is_subset_of(all)) return "neighbour out of range at vertex " + std::to_string(v);
      if (adj_[v].contains(v)) return "self-loop at vertex " + std::to_string(v);
      for (vertex u : adj_[v])
        if (!adj_[u].contains(v))
          return "asymmetric adjacency between " + std::to_string(u) + " and " + std::to_string(v);
    }
    return {};
  }

  friend bool operator==(const Graph &, const Graph &) = default;

private:
  static void check_order(std::size_t n) {
    if (n > max_vertices)
      throw std::invalid_argument("graph order " + std::to_string(n) + " exceeds capacity " +
                                  std::to_string(max_vertices));
  }

  std::vector<VertexSet> adj_;
};

inline Graph complement(const Graph &g) {
  std::vector<VertexSet> adj(g.order());
  const auto all = g.vertices();
  for (vertex v = 0; v < g.order(); ++v) adj[v] = all - g.closed_neighbours(v);
  return Graph::from_adjacency(std::move(adj));
}

/// Vertex numbering inside a complementary prism: 0..n-1 is the base graph,
/// n..2n-1 its complement, and i <-> i+n are partners.
struct PrismLayout {
  std::size_t n = 0;

  vertex partner(vertex v) const { return v < n ? v + n : v - n; }
  bool on_base_side(vertex v) const { return v < n; }
  vertex base_index(vertex v) const { return v < n ? v : v - n; }

  VertexSet base_side() const { return VertexSet::full(n); }
  VertexSet complement_side() const { return VertexSet::full(2 * n) - VertexSet::full(n); }

  /// Image of a base-graph vertex set on the complement side.
  VertexSet partners(VertexSet s) const {
    VertexSet out;
    for (vertex v : s) out.insert(partner(v));
    return out;
  }
};

/// G ∪ Ḡ joined by the perfect matching {i, i+n}.
inline Graph complementary_prism(const Graph &g) {
  const std::size_t n = g.order();
  if (n == 0) throw std::invalid_argument("complementary prism needs at least one vertex");
  if (n > max_prism_base)
    throw std::invalid_argument("prism of a graph with " + std::to_string(n) +
                                " vertices exceeds capacity " + std::to_string(max_vertices));
  const PrismLayout layout{n};
  const Graph gc = complement(g);
  std::vector<VertexSet> adj(2 * n);
  for (vertex v = 0; v < n; ++v) {
    adj[v] = g.neighbours(v);
    adj[v].insert(layout.partner(v));
    adj[layout.partner(v)] = layout.partners(gc.neighbours(v));
    adj[layout.partner(v)].insert(v);
  }
  return Graph::from_adjacency(std::move(adj));
}

/// Relabels every vertex v of g as perm[v].
inline Graph relabel(const Graph &g, const std::vector<vertex> &perm) {
  std::vector<edge> es;
  for (auto [u, v] : g.edges()) es.emplace_back(perm.at(u), perm.at(v));
  return Graph(g.order(), es);
}

/// Subgraph induced by s, relabelled to 0..|s|-1 in increasing vertex order.
inline Graph induced_subgraph(const Graph &g, VertexSet s) {
  std::vector<vertex> index(g.order(), 0);
  vertex next = 0;
  for (vertex v : s) index[v] = next++;
  std::vector<edge> es;
  for (auto [u, v] : g.edges())
    if (s.contains(u) && s.contains(v)) es.emplace_back(index[u], index[v]);
  return Graph(s.size(), es);
}

/// Disjoint union; vertices of b are shifted by a.order().
inline Graph disjoint_union(const Graph &a, const Graph &b) {
  auto es = a.edges();
  for (auto [u, v] : b.edges()) es.emplace_back(u + a.order(), v + a.order());
  return Graph(a.order() + b.order(), es);
}

struct ComponentStructure {
  std::size_t count = 0;            ///< r
  std::vector<std::size_t> label;   ///< component id per vertex, ids ordered by lowest vertex
  std::vector<std::size_t> sizes;
  std::vector<VertexSet> members;
  std::size_t trivial_count = 0;    ///< t
  std::size_t min_order = 0;        ///< k (0 for the empty graph)

  bool connected() const { return count <= 1; }
};

inline ComponentStructure components(const Graph &g) {
  ComponentStructure cs;
  const std::size_t n = g.order();
  cs.label.assign(n, 0);
  VertexSet unseen = g.vertices();
  while (!unseen.empty()) {
    VertexSet comp = VertexSet::singleton(unseen.front());
    VertexSet frontier = comp;
    while (!frontier.empty()) {
      VertexSet next;
      for (vertex v : frontier) next |= g.neighbours(v);
      frontier = next - comp;
      comp |= frontier;
    }
    for (vertex v : comp) cs.label[v] = cs.count;
    cs.members.push_back(comp);
    cs.sizes.push_back(comp.size());
    unseen -= comp;
    ++cs.count;
  }
  cs.trivial_count = static_cast<std::size_t>(std::count(cs.sizes.begin(), cs.sizes.end(), 1U));
  cs.min_order = cs.sizes.empty() ? 0 : *std::min_element(cs.sizes.begin(), cs.sizes.end());
  return cs;
}

/// Hop count, with an explicit infinite value for unreachable pairs. Infinite
/// compares greater than every finite distance.
class Distance {
public:
  constexpr Distance() = default;
  constexpr explicit Distance(std::size_t hops) : hops_(hops) {}
  static constexpr Distance infinite() { return Distance(); }

  constexpr bool is_infinite() const { return hops_ == inf; }
  constexpr bool is_finite() const { return hops_ != inf; }
  constexpr std::size_t hops() const {
    if (is_infinite()) throw std::logic_error("hops() on an infinite distance");
    return hops_;
  }

  friend constexpr auto operator<=>(Distance, Distance) = default;
  friend constexpr bool operator==(Distance, Distance) = default;
  friend constexpr bool operator==(Distance a, std::size_t b) { return a.hops_ == b && b != inf; }

  std::string to_string() const { return is_infinite() ? "inf" : std::to_string(hops_); }

private:
  static constexpr std::size_t inf = std::numeric_limits<std::size_t>::max();
  std::size_t hops_ = inf;
};

/// BFS distances from one source.
inline std::vector<Distance> distances_from(const Graph &g, vertex source) {
  std::vector<Distance> d(g.order());
  VertexSet seen = VertexSet::singleton(source);
  VertexSet layer = seen;
  for (std::size_t depth = 0; !layer.empty(); ++depth) {
    VertexSet next;
    for (vertex v : layer) {
      d[v] = Distance(depth);
      next |= g.neighbours(v);
    }
    layer = next - seen;
    seen |= layer;
  }
  return d;
}

inline std::vector<std::vector<Distance>> distances(const Graph &g) {
  std::vector<std::vector<Distance>> d;
  d.reserve(g.order());
  for (vertex v = 0; v < g.order(); ++v) d.push_back(distances_from(g, v));
  return d;
}

inline Distance eccentricity(const Graph &g, vertex v) {
  auto d = distances_from(g, v);
  return d.empty() ? Distance(0) : *std::max_element(d.begin(), d.end());
}

/// Maximum eccentricity; 0 for graphs with fewer than two vertices.
inline Distance diameter(const Graph &g) {
  Distance best(0);
  for (vertex v = 0; v < g.order(); ++v) best = std::max(best, eccentricity(g, v));
  return best;
}

inline bool is_clique(const Graph &g, VertexSet s) {
  for (vertex v : s)
    if (!(s - VertexSet::singleton(v)).is_subset_of(g.neighbours(v))) return false;
  return true;
}

inline bool is_independent(const Graph &g, VertexSet s) {
  for (vertex v : s)
    if (g.neighbours(v).intersects(s)) return false;
  return true;
}

inline bool is_simplicial(const Graph &g, vertex v) { return is_clique(g, g.neighbours(v)); }

inline VertexSet simplicial_vertices(const Graph &g) {
  VertexSet out;
  for (vertex v = 0; v < g.order(); ++v)
    if (is_simplicial(g, v)) out.insert(v);
  return out;
}

} // namespace monoprism

#endif // MONOPRISM_GRAPH_HPP
