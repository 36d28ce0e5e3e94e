#ifndef MONOPRISM_GRAPH_IO_HPP
#define MONOPRISM_GRAPH_IO_HPP

#include <cctype>
#include <charconv>
#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "graph.hpp"

namespace monoprism {

/// Input rejected by one of the graph readers. line() is 1-based, 0 when the
/// failure is not tied to a particular line.
class ParseError : public std::runtime_error {
public:
  ParseError(std::size_t line, const std::string &what)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  std::size_t line() const { return line_; }

private:
  std::size_t line_;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto ws = " \t\r\n\v\f";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

inline std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

inline std::size_t parse_count(std::string_view tok, std::size_t line, const char *what) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size())
    throw ParseError(line, std::string("expected non-negative integer for ") + what + ", got '" +
                               std::string(tok) + "'");
  return value;
}

inline std::vector<std::string_view> lines_of(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto nl = text.find('\n', start);
    if (nl == std::string_view::npos) {
      if (start < text.size()) out.push_back(text.substr(start));
      break;
    }
    out.push_back(text.substr(start, nl - start));
    start = nl + 1;
  }
  return out;
}

} // namespace detail

/// Reads "n m" followed by m lines "u v" (0-indexed). Blank lines are ignored;
/// repeated edges collapse to one.
inline Graph parse_edge_list(std::string_view text) {
  const auto lines = detail::lines_of(text);
  std::size_t idx = 0;
  auto next_content = [&]() -> std::pair<std::size_t, std::string_view> {
    while (idx < lines.size()) {
      auto l = detail::trim(lines[idx++]);
      if (!l.empty()) return {idx, l};
    }
    return {0, {}};
  };

  auto [hline, header] = next_content();
  if (hline == 0) throw ParseError(0, "edge list is empty; expected header 'n m'");
  auto htoks = detail::split_ws(header);
  if (htoks.size() != 2) throw ParseError(hline, "expected header 'n m'");
  const std::size_t n = detail::parse_count(htoks[0], hline, "vertex count");
  const std::size_t m = detail::parse_count(htoks[1], hline, "edge count");
  if (n > max_vertices)
    throw ParseError(hline, "vertex count " + std::to_string(n) + " exceeds capacity " +
                                std::to_string(max_vertices));

  std::vector<edge> es;
  es.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    auto [lno, l] = next_content();
    if (lno == 0)
      throw ParseError(lines.size(), "expected " + std::to_string(m) + " edges, found " + std::to_string(i));
    auto toks = detail::split_ws(l);
    if (toks.size() != 2) throw ParseError(lno, "expected 'u v'");
    const vertex u = detail::parse_count(toks[0], lno, "endpoint");
    const vertex v = detail::parse_count(toks[1], lno, "endpoint");
    if (u >= n || v >= n) throw ParseError(lno, "vertex out of range (n=" + std::to_string(n) + ")");
    if (u == v) throw ParseError(lno, "self-loop at vertex " + std::to_string(u));
    es.emplace_back(u, v);
  }
  if (auto [lno, l] = next_content(); lno != 0) throw ParseError(lno, "unexpected content after the last edge");
  return Graph(n, es);
}

inline std::string to_edge_list(const Graph &g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

/// Decodes one graph6 line. An optional ">>graph6<<" prefix is accepted.
inline Graph parse_graph6(std::string_view line, std::size_t line_no = 0) {
  auto s = detail::trim(line);
  if (s.substr(0, 10) == ">>graph6<<") s.remove_prefix(10);
  if (s.empty()) throw ParseError(line_no, "empty graph6 string");
  for (char c : s)
    if (c < 63 || c > 126) throw ParseError(line_no, std::string("invalid graph6 character '") + c + "'");

  std::size_t pos = 0;
  std::size_t n = 0;
  if (s[0] != '~') {
    n = static_cast<std::size_t>(s[0] - 63);
    pos = 1;
  } else {
    if (s.size() >= 2 && s[1] == '~') throw ParseError(line_no, "graph6 order too large");
    if (s.size() < 4) throw ParseError(line_no, "truncated graph6 order");
    for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | static_cast<std::size_t>(s[i] - 63);
    pos = 4;
  }
  if (n > max_vertices)
    throw ParseError(line_no, "graph6 order " + std::to_string(n) + " exceeds capacity " +
                                  std::to_string(max_vertices));

  const std::size_t nbits = n * (n - (n ? 1 : 0)) / 2;
  const std::size_t nbytes = (nbits + 5) / 6;
  if (s.size() - pos < nbytes) throw ParseError(line_no, "truncated graph6 bit stream");
  if (s.size() - pos > nbytes) throw ParseError(line_no, "trailing characters after graph6 bit stream");

  auto bit = [&](std::size_t k) {
    const auto byte = static_cast<unsigned>(s[pos + k / 6] - 63);
    return (byte >> (5 - k % 6)) & 1U;
  };
  for (std::size_t k = nbits; k < nbytes * 6; ++k)
    if (bit(k)) throw ParseError(line_no, "non-zero graph6 padding bits");

  std::vector<edge> es;
  std::size_t k = 0;
  for (vertex j = 1; j < n; ++j)
    for (vertex i = 0; i < j; ++i, ++k)
      if (bit(k)) es.emplace_back(i, j);
  return Graph(n, es);
}

inline std::string to_graph6(const Graph &g) {
  const std::size_t n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
  }
  unsigned acc = 0;
  int filled = 0;
  for (vertex j = 1; j < n; ++j)
    for (vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1U : 0U);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
        filled = 0;
      }
    }
  if (filled) out.push_back(static_cast<char>(63 + (acc << (6 - filled))));
  return out;
}

/// One graph per non-blank line; errors carry the 1-based line number.
inline std::vector<Graph> parse_graph6_lines(std::string_view text) {
  std::vector<Graph> out;
  const auto lines = detail::lines_of(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (detail::trim(lines[i]).empty()) continue;
    out.push_back(parse_graph6(lines[i], i + 1));
  }
  return out;
}

} // namespace monoprism

#endif // MONOPRISM_GRAPH_IO_HPP
