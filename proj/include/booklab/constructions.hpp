#pragma once

#include <cstdint>
#include <vector>

#include "booklab/coloring.hpp"
#include "booklab/rational.hpp"

namespace booklab {

/// Disjoint parts covering [0, n).
struct Partition {
  std::vector<VertexSet> parts;

  std::size_t universe() const { return parts.empty() ? 0 : parts.front().universe(); }
  /// Index of the part holding v.
  std::size_t part_of(Vertex v) const;
  /// Pairwise disjoint and covering.
  bool is_partition() const;
  /// Part sizes differ by at most one.
  bool is_balanced() const;
};

/// k blocks of part_size vertices each, block i = [i*s, (i+1)*s). Blue inside blocks,
/// red between them, so the red graph is complete k-partite and has no K_{k+1}.
struct KPartite {
  TwoColoring coloring;
  Partition partition;
};
KPartite balanced_kpartite(std::size_t k, std::size_t part_size);

/// Edges (i, j), i < j, in lexicographic order each consume one SplitMix64 draw d;
/// the edge is blue iff d / 2^64 < p. Requires 0 < p < 1 with a 64-bit denominator.
TwoColoring random_coloring(std::size_t n, const Rational& p, std::uint64_t seed);

/// k(n + k - 1) + 1: the block-construction lower bound on r(B_m^(k), B_n^(k)), m <= n.
std::uint64_t goodness_bound(std::uint64_t k, std::uint64_t n);

/// (c^{1/k} + 1)^k n: the leading term of the random-coloring lower bound.
double random_bound(const Rational& c, std::uint64_t k, std::uint64_t n);

}  // namespace booklab
