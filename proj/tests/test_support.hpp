#ifndef MONOPRISM_TEST_SUPPORT_HPP
#define MONOPRISM_TEST_SUPPORT_HPP

// Shared corpora and brute-force references for the unit tests. Nothing here
// calls into the interval or formula code it is used to check.

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include <monoprism/generators.hpp>
#include <monoprism/graph.hpp>

namespace monoprism::test_support {

inline Graph g_of(std::size_t n, std::vector<edge> es) { return Graph(n, es); }

/// Small named graphs plus deterministic random ones, all with n <= 8.
inline std::vector<Graph> small_corpus() {
  std::vector<Graph> out = {
      complete_graph(1),
      complete_graph(2),
      empty_graph(2),
      path_graph(3),
      complete_graph(3),
      path_graph(4),
      cycle_graph(4),
      star_graph(3),
      cycle_graph(5),
      path_graph(5),
      complete_graph(4),
      empty_graph(3),
      disjoint_union(complete_graph(3), complete_graph(1)),
      disjoint_union(complete_graph(2), complete_graph(2)),
      disjoint_union(path_graph(3), complete_graph(2)),
      disjoint_union(complete_graph(3), path_graph(3)),
      disjoint_union(disjoint_union(complete_graph(3), complete_graph(2)), complete_graph(2)),
      complete_bipartite_graph(2, 3),
      cycle_graph(6),
      cycle_graph(7),
      g_of(6, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 5}}), // triangle with a tail
      g_of(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}}),         // C4 plus pendant (the "banner")
  };
  std::mt19937_64 rng(2024);
  for (std::size_t i = 0; i < 30; ++i) out.push_back(random_gnp(4 + i % 5, 0.25 + 0.1 * (i % 5), rng));
  return out;
}

/// Every simple u,v-path, as an ordered vertex list.
inline void all_simple_paths(const Graph &g, vertex u, vertex v, const std::function<void(const std::vector<vertex> &)> &f) {
  std::vector<vertex> path{u};
  std::vector<bool> used(g.order(), false);
  used[u] = true;
  std::function<void()> rec = [&] {
    const vertex last = path.back();
    if (last == v) {
      f(path);
      return;
    }
    for (vertex w = 0; w < g.order(); ++w) {
      if (used[w] || !g.adjacent(last, w)) continue;
      used[w] = true;
      path.push_back(w);
      rec();
      path.pop_back();
      used[w] = false;
    }
  };
  rec();
}

inline bool chordless(const Graph &g, const std::vector<vertex> &p) {
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 2; j < p.size(); ++j)
      if (g.adjacent(p[i], p[j])) return false;
  return true;
}

/// J[u,v] from all simple paths filtered by the chord test.
inline VertexSet brute_interval(const Graph &g, vertex u, vertex v) {
  VertexSet out{u, v};
  if (u == v) return out;
  all_simple_paths(g, u, v, [&](const std::vector<vertex> &p) {
    if (!chordless(g, p)) return;
    for (vertex x : p) out.insert(x);
  });
  return out;
}

/// Largest clique by checking every subset.
inline std::size_t brute_clique(const Graph &g) {
  std::size_t best = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.order()); ++mask) {
    VertexSet s(mask);
    if (s.size() > best && is_clique(g, s)) best = s.size();
  }
  return best;
}

} // namespace monoprism::test_support

#endif // MONOPRISM_TEST_SUPPORT_HPP
