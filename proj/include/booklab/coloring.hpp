#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "booklab/rational.hpp"

namespace booklab {

using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;

enum class Color : std::uint8_t { Red, Blue };

constexpr Color opposite(Color c) { return c == Color::Red ? Color::Blue : Color::Red; }
std::string_view to_string(Color c);
/// Accepts "red"/"blue" (case-sensitive). Throws DomainError otherwise.
Color parse_color(std::string_view text);

/// Fixed-universe bitset over [0, universe).
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe) : universe_(universe), words_((universe + 63) / 64, 0) {}
  VertexSet(std::size_t universe, std::initializer_list<Vertex> members);
  VertexSet(std::size_t universe, std::span<const Vertex> members);

  static VertexSet full(std::size_t universe);
  /// [first, last)
  static VertexSet range(std::size_t universe, Vertex first, Vertex last);

  std::size_t universe() const { return universe_; }
  bool contains(Vertex v) const { return v < universe_ && ((words_[v >> 6] >> (v & 63)) & 1U); }
  void insert(Vertex v);
  void erase(Vertex v);
  std::size_t count() const;
  bool empty() const;

  VertexSet& operator&=(const VertexSet& other);
  VertexSet& operator|=(const VertexSet& other);
  /// set difference
  VertexSet& operator-=(const VertexSet& other);
  VertexSet complement() const;

  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
  friend bool operator==(const VertexSet&, const VertexSet&) = default;

  /// |*this & other| without materializing the intersection.
  std::size_t intersection_count(const VertexSet& other) const;
  bool intersects(const VertexSet& other) const;

  std::vector<Vertex> members() const;

  template <class Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        fn(static_cast<Vertex>(w * 64 + std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
  }

  std::span<const std::uint64_t> words() const { return words_; }
  std::span<std::uint64_t> words() { return words_; }

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

class ColoringBuilder;

/// A red/blue coloring of the edges of K_n. Immutable; every query is const and the
/// object is safe to share across threads.
class TwoColoring {
 public:
  std::size_t size() const { return n_; }
  Color color(Vertex i, Vertex j) const;
  bool is_blue(Vertex i, Vertex j) const { return color(i, j) == Color::Blue; }

  /// Vertices u != v joined to v in the given color. Throws DomainError if v >= n.
  const VertexSet& neighbors(Vertex v, Color c) const;
  std::uint64_t edge_count(Color c) const;

  /// Same edge set with red and blue exchanged.
  TwoColoring swapped() const;

  friend bool operator==(const TwoColoring& a, const TwoColoring& b) { return a.n_ == b.n_ && a.blue_ == b.blue_; }

 private:
  friend class ColoringBuilder;
  TwoColoring(std::vector<VertexSet> blue, std::vector<VertexSet> red);

  std::size_t n_ = 0;
  std::vector<VertexSet> blue_;
  std::vector<VertexSet> red_;
};

/// Mutable staging area for colorings; starts all red.
class ColoringBuilder {
 public:
  explicit ColoringBuilder(std::size_t n);
  explicit ColoringBuilder(const TwoColoring& from);

  std::size_t size() const { return n_; }
  void set(Vertex i, Vertex j, Color c);
  void flip(Vertex i, Vertex j);
  Color color(Vertex i, Vertex j) const;
  const VertexSet& neighbors(Vertex v, Color c) const { return c == Color::Blue ? blue_[v] : red_[v]; }

  TwoColoring build() const;

 private:
  void check_pair(Vertex i, Vertex j) const;

  std::size_t n_;
  std::vector<VertexSet> blue_;
  std::vector<VertexSet> red_;
};

/// Coloring of K_n that is blue exactly on blue_edges. Throws DomainError on n = 0,
/// an endpoint >= n, or a pair (i, i).
TwoColoring build(std::size_t n, std::span<const Edge> blue_edges);
inline TwoColoring build(std::size_t n, std::initializer_list<Edge> blue_edges) {
  return build(n, std::span<const Edge>(blue_edges.begin(), blue_edges.size()));
}

/// Number of ordered pairs (x, y) in X x Y with x != y whose edge has color c. X and Y
/// may overlap; e_B(X,Y) + e_R(X,Y) = |X||Y| - |X & Y|.
std::uint64_t pair_count(const TwoColoring& g, const VertexSet& x, const VertexSet& y, Color c);

/// Exact e_c(X,Y) / (|X||Y|). Throws DomainError when X or Y is empty.
Rational density(const TwoColoring& g, const VertexSet& x, const VertexSet& y, Color c);

}  // namespace booklab
