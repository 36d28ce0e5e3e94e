#ifndef MONOPRISM_MONOPHONIC_HPP
#define MONOPRISM_MONOPHONIC_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "graph.hpp"

namespace monoprism {

namespace detail {

inline void check_vertex(const Graph &g, vertex v) {
  if (v >= g.order())
    throw std::out_of_range("vertex " + std::to_string(v) + " out of range for order " + std::to_string(g.order()));
}

// Extends an induced path ending at `last`. `blocked` holds the path and the
// closed neighbourhoods of every path vertex except `last`; a neighbour of
// `last` outside it keeps the path chordless.
inline void induced_paths_to(const Graph &g, vertex target, VertexSet path, vertex last, VertexSet blocked,
                             VertexSet &out) {
  if (g.adjacent(last, target)) {
    // Any other continuation would leave a chord to the target.
    out |= path;
    out.insert(target);
    return;
  }
  const VertexSet next_blocked = blocked | g.closed_neighbours(last);
  if (next_blocked.contains(target)) return;
  for (vertex w : g.neighbours(last) - blocked) {
    VertexSet extended = path;
    extended.insert(w);
    induced_paths_to(g, target, extended, w, next_blocked, out);
  }
}

inline void induced_paths_from(const Graph &g, VertexSet path, vertex last, VertexSet blocked,
                               std::vector<VertexSet> &row) {
  row[last] |= path;
  const VertexSet next_blocked = blocked | g.closed_neighbours(last);
  for (vertex w : g.neighbours(last) - blocked) {
    VertexSet extended = path;
    extended.insert(w);
    induced_paths_from(g, extended, w, next_blocked, row);
  }
}

} // namespace detail

/// J[u,v]: every vertex on some chordless u,v-path, endpoints included.
/// Vertices in different components give {u, v}.
inline VertexSet interval(const Graph &g, vertex u, vertex v) {
  detail::check_vertex(g, u);
  detail::check_vertex(g, v);
  VertexSet out{u, v};
  if (u == v) return out;
  const VertexSet start = VertexSet::singleton(u);
  detail::induced_paths_to(g, v, start, u, start, out);
  return out;
}

/// All monophonic intervals of one graph, computed once by a depth-first
/// enumeration of induced paths from every source.
class IntervalTable {
public:
  explicit IntervalTable(Graph g) : graph_(std::move(g)), cell_(graph_.order() * graph_.order()) {
    const std::size_t n = graph_.order();
    std::vector<VertexSet> row(n);
    for (vertex s = 0; s < n; ++s) {
      for (vertex v = 0; v < n; ++v) row[v] = VertexSet{s, v};
      const VertexSet start = VertexSet::singleton(s);
      detail::induced_paths_from(graph_, start, s, start, row);
      for (vertex v = 0; v < n; ++v) cell_[s * n + v] = row[v];
    }
  }

  const Graph &graph() const { return graph_; }
  std::size_t order() const { return graph_.order(); }

  VertexSet operator()(vertex u, vertex v) const { return cell_[u * order() + v]; }

private:
  Graph graph_;
  std::vector<VertexSet> cell_;
};

/// J[S]: union of J[u,v] over all pairs of S (pairs with u = v give S itself).
inline VertexSet interval_of_set(const IntervalTable &t, VertexSet s) {
  VertexSet out = s;
  for (vertex u : s)
    for (vertex v : s)
      if (u < v) out |= t(u, v);
  return out;
}

inline bool is_convex(const IntervalTable &t, VertexSet s) {
  for (vertex u : s)
    for (vertex v : s)
      if (u < v && !t(u, v).is_subset_of(s)) return false;
  return true;
}

/// [S]: least fixpoint of J containing S.
inline VertexSet hull(const IntervalTable &t, VertexSet s) {
  VertexSet cur = s;
  for (std::size_t round = 0; round <= t.order(); ++round) {
    const VertexSet next = interval_of_set(t, cur);
    if (next == cur) return cur;
    cur = next;
  }
  throw std::logic_error("hull iteration did not reach a fixpoint within |V| rounds");
}

inline bool is_m_set(const IntervalTable &t, VertexSet s) { return interval_of_set(t, s) == t.graph().vertices(); }

inline bool is_hull_set(const IntervalTable &t, VertexSet s) { return hull(t, s) == t.graph().vertices(); }

} // namespace monoprism

#endif // MONOPRISM_MONOPHONIC_HPP
