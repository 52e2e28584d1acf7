#pragma once

#include <array>
#include <bit>
#include <cstdint>

namespace booklab::detail {

// Graphs on at most 16 vertices as adjacency masks. The search only needs the blue graph;
// red is its complement.
inline constexpr std::size_t kMaxSmallVertices = 16;

struct SmallGraph {
  std::size_t n = 0;
  std::array<std::uint32_t, kMaxSmallVertices> adj{};

  void add_edge(std::size_t a, std::size_t b) {
    adj[a] |= 1U << b;
    adj[b] |= 1U << a;
  }
  std::uint32_t all() const { return n == 32 ? ~0U : (1U << n) - 1; }
};

// Upper-triangle bits in colex order: pair (i, j), i < j, sits at j(j-1)/2 + i.
using Code = std::array<std::uint64_t, 2>;

inline constexpr std::size_t pair_bit(std::size_t i, std::size_t j) { return j * (j - 1) / 2 + i; }

inline void set_bit(Code& c, std::size_t bit) { c[bit >> 6] |= std::uint64_t{1} << (bit & 63); }
inline bool test_bit(const Code& c, std::size_t bit) { return (c[bit >> 6] >> (bit & 63)) & 1U; }

/// Isomorphism-invariant code: the largest adjacency code over the leaves of an
/// individualization-refinement tree. Twin vertices are branched on only once.
Code canonical_code(const SmallGraph& g);

SmallGraph decode(const Code& code, std::size_t n);

}  // namespace booklab::detail
