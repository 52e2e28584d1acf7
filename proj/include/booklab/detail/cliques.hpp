#pragma once

#include <bit>
#include <cstddef>
#include <span>
#include <vector>

#include "booklab/coloring.hpp"

namespace booklab::detail {

/// Calls fn(v) for every member v >= start, in increasing order. fn returns void.
template <class Fn>
void for_each_from(const VertexSet& s, Vertex start, Fn&& fn) {
  auto words = s.words();
  std::size_t w = start >> 6;
  if (w >= words.size()) return;
  std::uint64_t bits = words[w] & (~std::uint64_t{0} << (start & 63));
  for (;;) {
    while (bits != 0) {
      fn(static_cast<Vertex>(w * 64 + std::countr_zero(bits)));
      bits &= bits - 1;
    }
    if (++w >= words.size()) return;
    bits = words[w];
  }
}

/// Walks the monochromatic k-cliques of `g` whose smallest vertex is `first`, in
/// lexicographic order of their sorted vertex tuples. visit(spine, common) receives the
/// spine and the intersection of its color-neighborhoods (spine vertices are never in it).
/// Rows is anything with size() and neighbors(v, color) -> const VertexSet&.
template <class Rows, class Visit>
void for_each_clique_from(const Rows& g, Color c, std::size_t k, Vertex first, Visit&& visit) {
  std::vector<Vertex> spine(k);
  std::vector<VertexSet> common(k + 1);
  spine[0] = first;
  common[1] = g.neighbors(first, c);
  auto rec = [&](auto&& self, std::size_t depth) -> void {
    if (depth == k) {
      visit(std::span<const Vertex>(spine), static_cast<const VertexSet&>(common[k]));
      return;
    }
    for_each_from(common[depth], spine[depth - 1] + 1, [&](Vertex v) {
      spine[depth] = v;
      common[depth + 1] = common[depth];
      common[depth + 1] &= g.neighbors(v, c);
      self(self, depth + 1);
    });
  };
  rec(rec, 1);
}

template <class Rows, class Visit>
void for_each_clique(const Rows& g, Color c, std::size_t k, Visit&& visit) {
  for (Vertex v = 0; v < g.size(); ++v) for_each_clique_from(g, c, k, v, visit);
}

}  // namespace booklab::detail
