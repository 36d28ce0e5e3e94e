#ifndef MONOPRISM_GENERATORS_HPP
#define MONOPRISM_GENERATORS_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "graph.hpp"

namespace monoprism {

enum class Family { path, cycle, complete, empty, star, complete_bipartite };

inline std::optional<Family> family_from_name(std::string_view name) {
  if (name == "path") return Family::path;
  if (name == "cycle") return Family::cycle;
  if (name == "complete") return Family::complete;
  if (name == "empty") return Family::empty;
  if (name == "star") return Family::star;
  if (name == "complete_bipartite" || name == "bipartite") return Family::complete_bipartite;
  return std::nullopt;
}

inline Graph path_graph(std::size_t n) {
  if (n < 1) throw std::invalid_argument("path needs n >= 1");
  std::vector<edge> es;
  for (vertex i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
  return Graph(n, es);
}

inline Graph cycle_graph(std::size_t n) {
  if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
  std::vector<edge> es;
  for (vertex i = 0; i < n; ++i) es.emplace_back(i, (i + 1) % n);
  return Graph(n, es);
}

inline Graph complete_graph(std::size_t n) {
  if (n < 1) throw std::invalid_argument("complete graph needs n >= 1");
  std::vector<edge> es;
  for (vertex i = 0; i < n; ++i)
    for (vertex j = i + 1; j < n; ++j) es.emplace_back(i, j);
  return Graph(n, es);
}

inline Graph empty_graph(std::size_t n) {
  if (n < 1) throw std::invalid_argument("empty graph needs n >= 1");
  return Graph(n);
}

/// K_{1,leaves} with the centre at vertex 0.
inline Graph star_graph(std::size_t leaves) {
  std::vector<edge> es;
  for (vertex i = 1; i <= leaves; ++i) es.emplace_back(0, i);
  return Graph(leaves + 1, es);
}

/// K_{a,b}: parts 0..a-1 and a..a+b-1.
inline Graph complete_bipartite_graph(std::size_t a, std::size_t b) {
  if (a + b < 1) throw std::invalid_argument("complete bipartite graph needs a + b >= 1");
  std::vector<edge> es;
  for (vertex i = 0; i < a; ++i)
    for (vertex j = 0; j < b; ++j) es.emplace_back(i, a + j);
  return Graph(a + b, es);
}

/// Canonical member of a family. All families take one size parameter except
/// complete_bipartite, which takes the two part sizes.
inline Graph generate(Family family, const std::vector<std::size_t> &params) {
  auto need = [&](std::size_t k) {
    if (params.size() != k)
      throw std::invalid_argument("family expects " + std::to_string(k) + " parameter(s), got " +
                                  std::to_string(params.size()));
  };
  switch (family) {
  case Family::path: need(1); return path_graph(params[0]);
  case Family::cycle: need(1); return cycle_graph(params[0]);
  case Family::complete: need(1); return complete_graph(params[0]);
  case Family::empty: need(1); return empty_graph(params[0]);
  case Family::star: need(1); return star_graph(params[0]);
  case Family::complete_bipartite: need(2); return complete_bipartite_graph(params[0], params[1]);
  }
  throw std::invalid_argument("unknown family");
}

/// Uniform double in [0,1) from the top 53 bits, so results do not depend on
/// the standard library's distribution implementations.
inline double unit_interval(std::mt19937_64 &rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

/// Erdős–Rényi G(n, p) drawn from an existing engine; pairs are visited in
/// lexicographic order.
inline Graph random_gnp(std::size_t n, double p, std::mt19937_64 &rng) {
  if (n < 1) throw std::invalid_argument("G(n,p) needs n >= 1");
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("G(n,p) needs 0 <= p <= 1");
  std::vector<edge> es;
  for (vertex i = 0; i < n; ++i)
    for (vertex j = i + 1; j < n; ++j)
      if (unit_interval(rng) < p) es.emplace_back(i, j);
  return Graph(n, es);
}

inline Graph random_gnp(std::size_t n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return random_gnp(n, p, rng);
}

/// Labelled graph on n vertices whose edge set is given by the bits of mask,
/// bit k standing for the k-th pair in graph6 column order.
inline Graph graph_from_mask(std::size_t n, std::uint64_t mask) {
  std::vector<edge> es;
  std::size_t k = 0;
  for (vertex j = 1; j < n; ++j)
    for (vertex i = 0; i < j; ++i, ++k)
      if ((mask >> k) & 1U) es.emplace_back(i, j);
  return Graph(n, es);
}

/// Parses "<family> <params...>" tokens, e.g. {"cycle", "5"}.
inline Graph graph_from_family_spec(const std::vector<std::string> &tokens) {
  if (tokens.empty()) throw std::invalid_argument("empty family spec");
  auto family = family_from_name(tokens[0]);
  if (!family) throw std::invalid_argument("unknown family '" + tokens[0] + "'");
  std::vector<std::size_t> params;
  for (std::size_t i = 1; i < tokens.size(); ++i) {
    std::size_t used = 0;
    unsigned long long value = 0;
    try {
      value = std::stoull(tokens[i], &used);
    } catch (const std::exception &) {
      used = 0;
    }
    if (used != tokens[i].size() || tokens[i].empty() || tokens[i][0] == '-')
      throw std::invalid_argument("family parameter '" + tokens[i] + "' is not a non-negative integer");
    params.push_back(static_cast<std::size_t>(value));
  }
  return generate(*family, params);
}

/// Short names for small graphs used as extra union components: k<n>
/// (complete), e<n> (edgeless), p<n> (path), c<n> (cycle), s<n> (star with n
/// leaves).
inline Graph graph_from_shorthand(std::string_view code) {
  if (code.size() < 2) throw std::invalid_argument("bad graph shorthand '" + std::string(code) + "'");
  std::size_t n = 0;
  auto digits = code.substr(1);
  for (char c : digits) {
    if (c < '0' || c > '9') throw std::invalid_argument("bad graph shorthand '" + std::string(code) + "'");
    n = n * 10 + static_cast<std::size_t>(c - '0');
    if (n > max_vertices) throw std::invalid_argument("graph shorthand too large");
  }
  switch (code[0]) {
  case 'k': case 'K': return complete_graph(n);
  case 'e': case 'E': return empty_graph(n);
  case 'p': case 'P': return path_graph(n);
  case 'c': case 'C': return cycle_graph(n);
  case 's': case 'S': return star_graph(n);
  default: throw std::invalid_argument("bad graph shorthand '" + std::string(code) + "'");
  }
}

} // namespace monoprism

#endif // MONOPRISM_GENERATORS_HPP
