#ifndef MONOPRISM_ORACLE_HPP
#define MONOPRISM_ORACLE_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "graph.hpp"
#include "monophonic.hpp"

namespace monoprism {

/// Exact exponential-search values of graph invariants, used as ground truth
/// for the closed forms in prism_formulas.hpp.
struct OracleResult {
  std::size_t value = 0;
  VertexSet witness;
  std::uint64_t nodes_explored = 0;
};

class OracleOutOfRange : public std::range_error {
public:
  using std::range_error::range_error;
};

inline constexpr std::size_t default_oracle_cap = 16;

namespace detail {

inline void check_oracle_input(const Graph &g, std::size_t cap) {
  if (g.order() == 0) throw std::invalid_argument("oracle needs at least one vertex");
  if (g.order() > cap)
    throw OracleOutOfRange("oracle out of range: order " + std::to_string(g.order()) + " exceeds cap " +
                           std::to_string(cap));
}

inline void grow_clique(const Graph &g, VertexSet chosen, VertexSet candidates, OracleResult &best) {
  ++best.nodes_explored;
  if (candidates.empty()) {
    if (chosen.size() > best.value) {
      best.value = chosen.size();
      best.witness = chosen;
    }
    return;
  }
  while (!candidates.empty()) {
    if (chosen.size() + candidates.size() <= best.value) return;
    const vertex v = candidates.front();
    candidates.erase(v);
    VertexSet with = chosen;
    with.insert(v);
    grow_clique(g, with, candidates & g.neighbours(v), best);
  }
}

/// Calls visit(mask) for every k-subset of `pool`, in increasing order of the
/// subset's bitmask. Stops early when visit returns true; returns whether it did.
template <typename Visit> bool for_each_subset_of_size(VertexSet pool, std::size_t k, Visit &&visit) {
  const std::vector<vertex> items = pool.to_vector();
  const std::size_t m = items.size();
  if (k > m) return false;
  auto expand = [&](std::uint64_t idx) {
    VertexSet s;
    for (std::size_t i = 0; i < m; ++i)
      if ((idx >> i) & 1U) s.insert(items[i]);
    return s;
  };
  if (k == 0) return visit(VertexSet{});
  const std::uint64_t limit = m == 64 ? 0 : (std::uint64_t{1} << m);
  std::uint64_t idx = (k == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << k) - 1);
  while (true) {
    if (visit(expand(idx))) return true;
    // Gosper's hack: next integer with the same popcount.
    const std::uint64_t low = idx & (~idx + 1);
    const std::uint64_t ripple = idx + low;
    if (ripple == 0) return false;
    idx = (((ripple ^ idx) >> 2) / low) | ripple;
    if (limit != 0 && idx >= limit) return false;
  }
}

enum class MinimumKind { m_set, hull_set };

inline OracleResult minimum_set(const IntervalTable &t, MinimumKind kind, bool force_simplicial,
                                std::optional<std::size_t> upper_bound) {
  const Graph &g = t.graph();
  const VertexSet forced = force_simplicial ? simplicial_vertices(g) : VertexSet{};
  const VertexSet rest = g.vertices() - forced;
  OracleResult r;
  const std::size_t last = upper_bound ? *upper_bound : g.order();
  for (std::size_t k = std::max<std::size_t>(1, forced.size()); k <= last; ++k) {
    bool found = for_each_subset_of_size(rest, k - forced.size(), [&](VertexSet extra) {
      ++r.nodes_explored;
      const VertexSet s = forced | extra;
      const bool ok = kind == MinimumKind::m_set ? is_m_set(t, s) : is_hull_set(t, s);
      if (ok) {
        r.value = k;
        r.witness = s;
      }
      return ok;
    });
    if (found) return r;
  }
  throw std::logic_error(upper_bound ? "no feasible set within the supplied upper bound"
                                     : "vertex set failed its own feasibility test");
}

} // namespace detail

/// ω(G) by branch and bound over bitset candidate sets.
inline OracleResult clique_number(const Graph &g, std::size_t cap = max_vertices) {
  detail::check_oracle_input(g, cap);
  OracleResult best;
  detail::grow_clique(g, {}, g.vertices(), best);
  return best;
}

/// α(G), computed as ω of the complement.
inline OracleResult independence_number(const Graph &g, std::size_t cap = max_vertices) {
  return clique_number(complement(g), cap);
}

/// c_m(G): largest proper convex set. Sizes are tried from n-1 downwards, so
/// the witness is the first maximum-size convex set in bitmask order.
/// c_m(K1) = 0, the empty set being its only proper convex subset.
inline OracleResult convexity_number(const IntervalTable &t, std::size_t cap = default_oracle_cap) {
  detail::check_oracle_input(t.graph(), cap);
  OracleResult r;
  for (std::size_t k = t.order() - 1;; --k) {
    bool found = detail::for_each_subset_of_size(t.graph().vertices(), k, [&](VertexSet s) {
      ++r.nodes_explored;
      if (!is_convex(t, s)) return false;
      r.value = k;
      r.witness = s;
      return true;
    });
    if (found || k == 0) return r;
  }
}

/// m(G): smallest S with J[S] = V. Candidates always contain every simplicial
/// vertex unless force_simplicial is false.
inline OracleResult monophonic_number(const IntervalTable &t, std::size_t cap = default_oracle_cap,
                                      bool force_simplicial = true) {
  detail::check_oracle_input(t.graph(), cap);
  return detail::minimum_set(t, detail::MinimumKind::m_set, force_simplicial, std::nullopt);
}

/// h_m(G): smallest S with [S] = V. `upper_bound` (normally m(G)) caps the
/// search; exceeding it is reported as a logic error.
inline OracleResult hull_number(const IntervalTable &t, std::size_t cap = default_oracle_cap,
                                bool force_simplicial = true, std::optional<std::size_t> upper_bound = std::nullopt) {
  detail::check_oracle_input(t.graph(), cap);
  return detail::minimum_set(t, detail::MinimumKind::hull_set, force_simplicial, upper_bound);
}

inline OracleResult convexity_number(const Graph &g, std::size_t cap = default_oracle_cap) {
  detail::check_oracle_input(g, cap);
  return convexity_number(IntervalTable(g), cap);
}

inline OracleResult monophonic_number(const Graph &g, std::size_t cap = default_oracle_cap) {
  detail::check_oracle_input(g, cap);
  return monophonic_number(IntervalTable(g), cap);
}

inline OracleResult hull_number(const Graph &g, std::size_t cap = default_oracle_cap) {
  detail::check_oracle_input(g, cap);
  return hull_number(IntervalTable(g), cap);
}

/// All three convexity invariants from one interval table, with the hull
/// search bounded by m(G).
struct OracleTriple {
  OracleResult cm, m, hm;
};

inline OracleTriple oracle_invariants(const IntervalTable &t, std::size_t cap = default_oracle_cap) {
  OracleTriple out;
  out.cm = convexity_number(t, cap);
  out.m = monophonic_number(t, cap);
  out.hm = hull_number(t, cap, true, out.m.value);
  return out;
}

} // namespace monoprism

#endif // MONOPRISM_ORACLE_HPP
