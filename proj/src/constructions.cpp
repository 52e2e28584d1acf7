#include "booklab/constructions.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "booklab/error.hpp"
#include "booklab/splitmix.hpp"

namespace booklab {

std::size_t Partition::part_of(Vertex v) const {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].contains(v)) return i;
  }
  throw DomainError("vertex " + std::to_string(v) + " is in no part");
}

bool Partition::is_partition() const {
  if (parts.empty()) return false;
  const std::size_t n = universe();
  VertexSet seen(n);
  for (const auto& part : parts) {
    if (part.universe() != n || part.intersects(seen)) return false;
    seen |= part;
  }
  return seen.count() == n;
}

bool Partition::is_balanced() const {
  if (parts.empty()) return false;
  std::size_t lo = std::numeric_limits<std::size_t>::max(), hi = 0;
  for (const auto& part : parts) {
    lo = std::min(lo, part.count());
    hi = std::max(hi, part.count());
  }
  return hi - lo <= 1;
}

KPartite balanced_kpartite(std::size_t k, std::size_t part_size) {
  if (k < 2) throw DomainError("balanced_kpartite needs k >= 2");
  if (part_size < 1) throw DomainError("balanced_kpartite needs part_size >= 1");
  const std::size_t n = k * part_size;
  ColoringBuilder b(n);
  Partition partition;
  for (std::size_t block = 0; block < k; ++block) {
    const Vertex first = block * part_size;
    partition.parts.push_back(VertexSet::range(n, first, first + part_size));
    for (Vertex i = first; i < first + part_size; ++i) {
      for (Vertex j = i + 1; j < first + part_size; ++j) b.set(i, j, Color::Blue);
    }
  }
  return {b.build(), std::move(partition)};
}

TwoColoring random_coloring(std::size_t n, const Rational& p, std::uint64_t seed) {
  if (p <= 0 || p >= 1) throw DomainError("random_coloring needs 0 < p < 1, got " + to_string(p));
  const BigInt& num = numerator(p);
  const BigInt& den = denominator(p);
  if (den > BigInt(std::numeric_limits<std::uint64_t>::max())) {
    throw DomainError("random_coloring: denominator of p must fit in 64 bits");
  }
  // d / 2^64 < num / den  <=>  d * den < num * 2^64, exact in 128 bits.
  const auto den64 = static_cast<unsigned __int128>(den.convert_to<std::uint64_t>());
  const auto cutoff = static_cast<unsigned __int128>(num.convert_to<std::uint64_t>()) << 64;

  SplitMix64 rng(seed);
  ColoringBuilder b(n);
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) {
      if (static_cast<unsigned __int128>(rng.next()) * den64 < cutoff) b.set(i, j, Color::Blue);
    }
  }
  return b.build();
}

std::uint64_t goodness_bound(std::uint64_t k, std::uint64_t n) {
  if (k < 2 || n < 1) throw DomainError("goodness_bound needs k >= 2 and n >= 1");
  return k * (n + k - 1) + 1;
}

double random_bound(const Rational& c, std::uint64_t k, std::uint64_t n) {
  if (c <= 0 || c > 1) throw DomainError("random_bound needs 0 < c <= 1");
  if (k < 2 || n < 1) throw DomainError("random_bound needs k >= 2 and n >= 1");
  const double root = std::pow(to_double(c), 1.0 / static_cast<double>(k));
  return std::pow(root + 1.0, static_cast<double>(k)) * static_cast<double>(n);
}

}  // namespace booklab
