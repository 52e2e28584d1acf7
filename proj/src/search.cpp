#include "booklab/search.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

#include "booklab/books.hpp"
#include "booklab/detail/canonical.hpp"
#include "booklab/error.hpp"
#include "booklab/parallel.hpp"
#include "booklab/splitmix.hpp"

namespace booklab {

namespace {

using detail::Code;
using detail::SmallGraph;

void check_parameters(std::size_t k, std::size_t m, std::size_t n) {
  if (k < 2) throw DomainError("book search needs spine size k >= 2");
  if (m < 1 || n < 1) throw DomainError("book sizes m and n must be at least 1");
  if (m > n) throw DomainError("book search expects m <= n");
}

// Visits the `size`-cliques inside `cand` (rows give adjacency in one color) with the
// intersection of `common` and their rows. Stops early when visit returns false.
template <class Mask, class Visit>
bool walk_cliques(const Mask* rows, Mask cand, std::size_t size, Mask common, Visit& visit) {
  while (cand) {
    const auto u = static_cast<std::size_t>(std::countr_zero(cand));
    cand &= cand - 1;
    const Mask next_common = common & rows[u];
    if (size == 1) {
      if (!visit(next_common)) return false;
    } else {
      const Mask next_cand = cand & rows[u];
      if (static_cast<std::size_t>(std::popcount(next_cand)) + 1 >= size &&
          !walk_cliques(rows, next_cand, size - 1, next_common, visit)) {
        return false;
      }
    }
  }
  return true;
}

struct Limits {
  std::size_t k, m, n;
  std::size_t of(int color) const { return color == 0 ? m : n; }  // 0 red, 1 blue
};

// g is book-free on its first n-1 vertices; check the spines through, or paged by, the
// last vertex.
bool extension_is_good(const SmallGraph& g, const Limits& lim) {
  const std::size_t v = g.n - 1;
  const std::uint32_t all = (1U << g.n) - 1;
  std::array<std::array<std::uint32_t, detail::kMaxSmallVertices>, 2> rows{};
  for (std::size_t u = 0; u < g.n; ++u) {
    rows[1][u] = g.adj[u];
    rows[0][u] = ~g.adj[u] & all & ~(1U << u);
  }
  for (int c = 0; c < 2; ++c) {
    const std::size_t limit = lim.of(c);
    const std::uint32_t nv = rows[c][v];
    auto under = [limit](std::uint32_t common) { return static_cast<std::size_t>(std::popcount(common)) < limit; };
    if (!walk_cliques(rows[c].data(), nv, lim.k - 1, nv, under)) return false;
    if (!walk_cliques(rows[c].data(), nv, lim.k, all, under)) return false;
  }
  return true;
}

TwoColoring to_coloring(const SmallGraph& g) {
  ColoringBuilder b(g.n);
  for (std::size_t i = 0; i < g.n; ++i) {
    for (std::size_t j = i + 1; j < g.n; ++j) {
      if ((g.adj[i] >> j) & 1U) b.set(i, j, Color::Blue);
    }
  }
  return b.build();
}

struct Generation {
  std::vector<Code> last_nonempty;  // classes on `last_size` vertices
  std::size_t last_size = 0;
  bool emptied = false;             // some level had no classes
  SearchStats stats;
};

// Builds the book-free classes level by level up to `target` vertices.
Generation generate(const Limits& lim, std::size_t target, std::uint64_t budget) {
  Generation gen;
  std::vector<Code> level{Code{}};
  gen.stats.classes_per_level.push_back(1);
  gen.last_nonempty = level;
  gen.last_size = 1;
  for (std::size_t size = 1; size < target; ++size) {
    const std::uint64_t planned = static_cast<std::uint64_t>(level.size()) << size;
    if (gen.stats.nodes + planned > budget) {
      gen.stats.budget_exhausted = true;
      return gen;
    }
    struct Local {
      std::vector<Code> codes;
      std::uint64_t pruned = 0;
    };
    auto partial = parallel_map<Local>(level.size(), [&](std::size_t r) {
      Local out;
      SmallGraph base = detail::decode(level[r], size);
      base.n = size + 1;
      for (std::uint32_t blue = 0; blue < (1U << size); ++blue) {
        SmallGraph g = base;
        g.adj[size] = blue;
        for (std::uint32_t rest = blue; rest; rest &= rest - 1) g.adj[std::countr_zero(rest)] |= 1U << size;
        if (!extension_is_good(g, lim)) {
          ++out.pruned;
          continue;
        }
        out.codes.push_back(detail::canonical_code(g));
      }
      std::sort(out.codes.begin(), out.codes.end());
      out.codes.erase(std::unique(out.codes.begin(), out.codes.end()), out.codes.end());
      return out;
    });
    std::vector<Code> next;
    for (auto& p : partial) {
      gen.stats.prunings += p.pruned;
      next.insert(next.end(), p.codes.begin(), p.codes.end());
    }
    gen.stats.nodes += planned;
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    gen.stats.classes_per_level.push_back(next.size());
    if (next.empty()) {
      gen.emptied = true;
      return gen;
    }
    level = std::move(next);
    gen.last_nonempty = level;
    gen.last_size = size + 1;
  }
  return gen;
}

TwoColoring verified_witness(const Code& code, std::size_t size, const Limits& lim) {
  TwoColoring w = to_coloring(detail::decode(code, size));
  if (!avoids_books(w, lim.k, lim.m, lim.n)) throw std::logic_error("search produced an invalid witness");
  return w;
}

}  // namespace

bool avoids_books(const TwoColoring& g, std::size_t k, std::size_t m, std::size_t n) {
  if (k > g.size()) return true;
  const auto red = spectrum(g, Color::Red, k).max_pages();
  const auto blue = spectrum(g, Color::Blue, k).max_pages();
  return (!red || *red < m) && (!blue || *blue < n);
}

ArrowOutcome arrow(const ArrowQuery& q, std::uint64_t node_budget) {
  check_parameters(q.k, q.m, q.n);
  if (q.N < 1) throw DomainError("arrow needs N >= 1");
  if (q.N > kMaxSearchVertices) {
    throw InconclusiveError("exhaustive search handles N <= " + std::to_string(kMaxSearchVertices));
  }
  const Limits lim{q.k, q.m, q.n};
  Generation gen = generate(lim, q.N, node_budget);
  if (gen.stats.budget_exhausted) {
    throw InconclusiveError("node budget of " + std::to_string(node_budget) + " exhausted before N = " +
                            std::to_string(q.N));
  }
  ArrowOutcome out;
  out.stats = gen.stats;
  out.arrows = gen.emptied;
  if (!out.arrows) out.witness = verified_witness(gen.last_nonempty.front(), q.N, lim);
  return out;
}

SearchResult ramsey_number(std::size_t k, std::size_t m, std::size_t n, std::size_t cap, std::uint64_t node_budget) {
  check_parameters(k, m, n);
  if (cap < 1) throw DomainError("ramsey_number needs cap >= 1");
  const Limits lim{k, m, n};
  Generation gen = generate(lim, std::min(cap, kMaxSearchVertices), node_budget);
  SearchResult r;
  r.stats = gen.stats;
  r.witness = verified_witness(gen.last_nonempty.front(), gen.last_size, lim);
  r.lower = gen.last_size + 1;
  if (gen.emptied) {
    r.exact = gen.last_size + 1;
    r.upper = r.exact;
  }
  return r;
}

// ---------------------------------------------------------------------------------

namespace {

class Annealer {
 public:
  Annealer(std::size_t N, const Limits& lim) : N_(N), lim_(lim) {}

  void load(const TwoColoring& g) {
    for (std::size_t v = 0; v < N_; ++v) {
      rows_[0][v] = rows_[1][v] = 0;
      g.neighbors(v, Color::Red).for_each([&](Vertex u) { rows_[0][v] |= std::uint64_t{1} << u; });
      g.neighbors(v, Color::Blue).for_each([&](Vertex u) { rows_[1][v] |= std::uint64_t{1} << u; });
    }
  }

  void flip(std::size_t a, std::size_t b) {
    const std::uint64_t ba = std::uint64_t{1} << a, bb = std::uint64_t{1} << b;
    for (int c = 0; c < 2; ++c) {
      rows_[c][a] ^= bb;
      rows_[c][b] ^= ba;
    }
  }

  // Penalty of spines through v that avoid `exclude`.
  std::uint64_t through(std::size_t v, std::uint64_t exclude) const {
    std::uint64_t total = 0;
    for (int c = 0; c < 2; ++c) {
      const std::size_t limit = lim_.of(c);
      auto charge = [&](std::uint64_t common) {
        const auto pages = static_cast<std::size_t>(std::popcount(common));
        if (pages >= limit) total += pages - limit + 1;
        return true;
      };
      const std::uint64_t nv = rows_[c][v];
      walk_cliques(rows_[c].data(), nv & ~exclude, lim_.k - 1, nv, charge);
    }
    return total;
  }

  std::uint64_t objective() const {
    std::uint64_t total = 0;
    for (std::size_t v = 0; v < N_; ++v) total += through(v, (std::uint64_t{2} << v) - 1);
    return total;
  }

  // Penalty of the spines touching a or b; only these change when (a, b) flips.
  std::uint64_t local(std::size_t a, std::size_t b) const { return through(a, 0) + through(b, std::uint64_t{1} << a); }

  TwoColoring coloring() const {
    ColoringBuilder builder(N_);
    for (std::size_t i = 0; i < N_; ++i) {
      for (std::size_t j = i + 1; j < N_; ++j) {
        if ((rows_[1][i] >> j) & 1U) builder.set(i, j, Color::Blue);
      }
    }
    return builder.build();
  }

 private:
  std::size_t N_;
  Limits lim_;
  std::array<std::array<std::uint64_t, 64>, 2> rows_{};
};

}  // namespace

WitnessSearchResult witness_search(std::size_t N, std::size_t k, std::size_t m, std::size_t n, std::uint64_t budget,
                                   std::uint64_t seed, const std::optional<TwoColoring>& initial) {
  check_parameters(k, m, n);
  if (N < 1 || N > 64) throw DomainError("witness_search handles 1 <= N <= 64");
  if (budget < 1) throw DomainError("witness_search needs budget >= 1");
  if (initial && initial->size() != N) throw DomainError("initial coloring has the wrong vertex count");

  SplitMix64 rng(seed);
  TwoColoring start = initial ? *initial : [&] {
    ColoringBuilder b(N);
    for (std::size_t i = 0; i < N; ++i) {
      for (std::size_t j = i + 1; j < N; ++j) {
        if (rng.next() >> 63) b.set(i, j, Color::Blue);
      }
    }
    return b.build();
  }();

  const Limits lim{k, m, n};
  Annealer state(N, lim);
  state.load(start);
  WitnessSearchResult result;
  std::uint64_t current = state.objective();
  result.best_objective = current;

  constexpr double kHot = 1.0, kCold = 0.02;
  while (current > 0 && result.steps < budget && N >= 2) {
    const double t = kHot * std::pow(kCold / kHot, static_cast<double>(result.steps) / static_cast<double>(budget));
    ++result.steps;
    std::size_t a = rng.below(N), b = rng.below(N - 1);
    if (b >= a) ++b;
    const std::uint64_t before = state.local(a, b);
    state.flip(a, b);
    const std::uint64_t after = state.local(a, b);
    if (after > before && rng.uniform() >= std::exp(-static_cast<double>(after - before) / t)) {
      state.flip(a, b);
      continue;
    }
    current = current + after - before;
    result.best_objective = std::min(result.best_objective, current);
  }
  if (current == 0) {
    TwoColoring found = state.coloring();
    if (!avoids_books(found, k, m, n)) throw std::logic_error("annealing produced an invalid witness");
    result.coloring = std::move(found);
  }
  return result;
}

}  // namespace booklab
