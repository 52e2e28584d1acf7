#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "booklab/coloring.hpp"

namespace booklab {

/// "Does every coloring of K_N contain a red B_m^(k) or a blue B_n^(k)?"
struct ArrowQuery {
  std::size_t N = 0;
  std::size_t k = 2;
  std::size_t m = 1;
  std::size_t n = 1;
};

struct SearchStats {
  std::uint64_t nodes = 0;      // one-vertex extensions examined
  std::uint64_t prunings = 0;   // extensions rejected for containing a forbidden book
  std::vector<std::uint64_t> classes_per_level;  // good colorings up to isomorphism, by size
  bool budget_exhausted = false;
};

struct ArrowOutcome {
  bool arrows = false;
  std::optional<TwoColoring> witness;  // a coloring of K_N avoiding both books, when !arrows
  SearchStats stats;
};

struct SearchResult {
  std::optional<std::size_t> exact;
  std::size_t lower = 1;
  std::optional<std::size_t> upper;
  std::optional<TwoColoring> witness;  // certifies r > lower - 1
  SearchStats stats;
};

/// Exhaustive search handles colorings on at most this many vertices.
inline constexpr std::size_t kMaxSearchVertices = 16;
inline constexpr std::uint64_t kDefaultNodeBudget = 2'000'000'000;

/// True when g has no red B_m^(k) and no blue B_n^(k), checked with the book engine.
bool avoids_books(const TwoColoring& g, std::size_t k, std::size_t m, std::size_t n);

/// Decides the arrowing relation by generating all book-free colorings vertex by vertex,
/// one representative per isomorphism class. Book-freeness is hereditary, so the
/// relation holds at N exactly when no class survives to N vertices. Throws
/// InconclusiveError when N exceeds kMaxSearchVertices or the node budget runs out.
ArrowOutcome arrow(const ArrowQuery& q, std::uint64_t node_budget = kDefaultNodeBudget);

/// Smallest N <= cap with arrow(N), plus a witness on N - 1 vertices. When the cap or the
/// node budget stops the search first, only bounds are returned.
SearchResult ramsey_number(std::size_t k, std::size_t m, std::size_t n, std::size_t cap,
                           std::uint64_t node_budget = kDefaultNodeBudget);

struct WitnessSearchResult {
  std::optional<TwoColoring> coloring;  // verified by avoids_books
  std::uint64_t steps = 0;
  std::uint64_t best_objective = 0;
};

/// Simulated annealing over single-edge flips. The objective sums, over red spines,
/// max(0, pages - m + 1) and, over blue spines, max(0, pages - n + 1). Starts from
/// `initial` when given, else from a seeded p = 1/2 coloring. N <= 64.
WitnessSearchResult witness_search(std::size_t N, std::size_t k, std::size_t m, std::size_t n, std::uint64_t budget,
                                   std::uint64_t seed, const std::optional<TwoColoring>& initial = std::nullopt);

}  // namespace booklab
