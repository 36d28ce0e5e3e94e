#ifndef MONOPRISM_VERTEX_SET_HPP
#define MONOPRISM_VERTEX_SET_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <string>
#include <vector>

namespace monoprism {

using vertex = std::size_t;

/// Hard cap on the order of any graph handled by the library. A complementary
/// prism doubles the order, so base graphs are limited to half of this.
inline constexpr std::size_t max_vertices = 64;
inline constexpr std::size_t max_prism_base = max_vertices / 2;

/// Fixed-capacity set of vertices packed into one machine word.
///
/// The set does not know the order of the graph it belongs to; operations
/// that need the vertex universe (complement, full set) take it explicitly.
class VertexSet {
public:
  using word = std::uint64_t;

  constexpr VertexSet() = default;
  constexpr explicit VertexSet(word bits) : bits_(bits) {}
  constexpr VertexSet(std::initializer_list<vertex> vs) {
    for (vertex v : vs) insert(v);
  }

  static constexpr VertexSet full(std::size_t n) {
    return VertexSet(n >= 64 ? ~word{0} : ((word{1} << n) - 1));
  }
  static constexpr VertexSet singleton(vertex v) { return VertexSet(word{1} << v); }

  constexpr word bits() const { return bits_; }
  constexpr bool contains(vertex v) const { return (bits_ >> v) & 1U; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }

  constexpr void insert(vertex v) { bits_ |= word{1} << v; }
  constexpr void erase(vertex v) { bits_ &= ~(word{1} << v); }

  /// Lowest member; only meaningful when the set is non-empty.
  constexpr vertex front() const { return static_cast<vertex>(std::countr_zero(bits_)); }

  constexpr bool is_subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(VertexSet other) const { return (bits_ & other.bits_) != 0; }

  /// S^c relative to the vertex universe 0..n-1.
  constexpr VertexSet complement(std::size_t n) const { return VertexSet(~bits_ & full(n).bits_); }

  constexpr VertexSet &operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
  constexpr VertexSet &operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }
  constexpr VertexSet &operator-=(VertexSet o) { bits_ &= ~o.bits_; return *this; }

  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return a |= b; }
  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return a &= b; }
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return a -= b; }
  friend constexpr bool operator==(VertexSet, VertexSet) = default;

  class iterator {
  public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = vertex;
    using difference_type = std::ptrdiff_t;
    using pointer = const vertex *;
    using reference = vertex;

    constexpr iterator() = default;
    constexpr explicit iterator(word rest) : rest_(rest) {}
    constexpr vertex operator*() const { return static_cast<vertex>(std::countr_zero(rest_)); }
    constexpr iterator &operator++() { rest_ &= rest_ - 1; return *this; }
    constexpr iterator operator++(int) { auto tmp = *this; ++*this; return tmp; }
    friend constexpr bool operator==(iterator, iterator) = default;

  private:
    word rest_ = 0;
  };

  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  std::vector<vertex> to_vector() const { return {begin(), end()}; }

  /// "{0,3,7}" form, used in diagnostics and test failure messages.
  std::string to_string() const {
    std::string out = "{";
    bool first = true;
    for (vertex v : *this) {
      if (!first) out += ',';
      out += std::to_string(v);
      first = false;
    }
    return out + "}";
  }

private:
  word bits_ = 0;
};

} // namespace monoprism

#endif // MONOPRISM_VERTEX_SET_HPP
