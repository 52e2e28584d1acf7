#include "booklab/books.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "booklab/detail/cliques.hpp"
#include "booklab/parallel.hpp"

namespace booklab {
namespace {

void check_k(const TwoColoring& g, std::size_t k) {
  if (k < 1 || k > g.size()) {
    throw DomainError("spine size k=" + std::to_string(k) + " out of range [1," + std::to_string(g.size()) + "]");
  }
}

// Color graph relabeled along a degeneracy ordering; forward[v] keeps only neighbors
// later in the ordering.
struct ForwardGraph {
  std::vector<VertexSet> forward;
  std::vector<Vertex> label;  // original vertex -> position in ordering
};

ForwardGraph degeneracy_forward(const TwoColoring& g, Color c) {
  const std::size_t n = g.size();
  std::vector<std::size_t> degree(n);
  for (Vertex v = 0; v < n; ++v) degree[v] = g.neighbors(v, c).count();
  std::vector<bool> removed(n, false);
  ForwardGraph fg;
  fg.label.assign(n, 0);
  for (std::size_t pos = 0; pos < n; ++pos) {
    Vertex best = n;
    for (Vertex v = 0; v < n; ++v) {
      if (!removed[v] && (best == n || degree[v] < degree[best])) best = v;
    }
    removed[best] = true;
    fg.label[best] = pos;
    g.neighbors(best, c).for_each([&](Vertex u) {
      if (!removed[u]) --degree[u];
    });
  }
  fg.forward.assign(n, VertexSet(n));
  for (Vertex v = 0; v < n; ++v) {
    g.neighbors(v, c).for_each([&](Vertex u) {
      if (fg.label[u] > fg.label[v]) fg.forward[fg.label[v]].insert(fg.label[u]);
    });
  }
  return fg;
}

std::uint64_t count_in(const std::vector<VertexSet>& forward, std::size_t k, const VertexSet& candidates) {
  if (k == 1) return candidates.count();
  std::uint64_t total = 0;
  VertexSet next;
  candidates.for_each([&](Vertex v) {
    next = candidates;
    next &= forward[v];
    if (next.count() + 1 >= k) total += count_in(forward, k - 1, next);
  });
  return total;
}

std::uint64_t count_cliques_impl(const TwoColoring& g, Color c, std::size_t k, const VertexSet& within) {
  const auto fg = degeneracy_forward(g, c);
  const std::size_t n = g.size();
  VertexSet relabeled(n);
  within.for_each([&](Vertex v) { relabeled.insert(fg.label[v]); });
  if (k == 1) return relabeled.count();
  auto per_vertex = parallel_map<std::uint64_t>(n, [&](std::size_t v) -> std::uint64_t {
    if (!relabeled.contains(v)) return 0;
    VertexSet next = relabeled & fg.forward[v];
    return next.count() + 1 >= k ? count_in(fg.forward, k - 1, next) : 0;
  });
  std::uint64_t total = 0;
  for (auto x : per_vertex) total += x;
  return total;
}

std::uint64_t ceil_nonneg(const Rational& r) {
  if (r <= 0) return 0;
  BigInt q = numerator(r) / denominator(r);
  if (q * denominator(r) != numerator(r)) q += 1;
  return q > BigInt(std::numeric_limits<std::uint64_t>::max()) ? std::numeric_limits<std::uint64_t>::max()
                                                               : q.convert_to<std::uint64_t>();
}

Rational pow_rational(const Rational& base, std::size_t e) {
  Rational out = 1;
  for (std::size_t i = 0; i < e; ++i) out *= base;
  return out;
}

BigInt binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  BigInt out = 1;
  for (std::uint64_t i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Spectrum

BigInt Spectrum::page_sum() const {
  BigInt s = 0;
  for (const auto& [pages, mult] : histogram) s += BigInt(pages) * mult;
  return s;
}

BigInt Spectrum::page_pair_sum() const {
  BigInt s = 0;
  for (const auto& [pages, mult] : histogram) {
    if (pages >= 2) s += BigInt(pages) * (pages - 1) / 2 * mult;
  }
  return s;
}

std::optional<std::uint64_t> Spectrum::max_pages() const {
  if (histogram.empty()) return std::nullopt;
  return histogram.rbegin()->first;
}

std::uint64_t Spectrum::count_at_least(const Rational& threshold) const {
  std::uint64_t total = 0;
  for (auto it = histogram.lower_bound(ceil_nonneg(threshold)); it != histogram.end(); ++it) total += it->second;
  return total;
}

// ---------------------------------------------------------------------------

std::uint64_t count_cliques(const TwoColoring& g, Color c, std::size_t k) {
  check_k(g, k);
  return count_cliques_impl(g, c, k, VertexSet::full(g.size()));
}

std::uint64_t count_cliques_within(const TwoColoring& g, Color c, std::size_t k, const VertexSet& within) {
  if (k < 1) throw DomainError("clique size must be >= 1");
  if (within.universe() != g.size()) throw DomainError("vertex set universe does not match coloring size");
  if (k > within.count()) return 0;
  return count_cliques_impl(g, c, k, within);
}

VertexSet extensions(const TwoColoring& g, std::span<const Vertex> spine, Color c) {
  if (spine.empty()) throw DomainError("empty spine");
  VertexSet common = VertexSet::full(g.size());
  for (std::size_t i = 0; i < spine.size(); ++i) {
    for (std::size_t j = i + 1; j < spine.size(); ++j) {
      if (spine[i] == spine[j] || g.color(spine[i], spine[j]) != c) {
        throw DomainError("spine is not a " + std::string(to_string(c)) + " clique");
      }
    }
    common &= g.neighbors(spine[i], c);
  }
  return common;
}

Spectrum spectrum(const TwoColoring& g, Color c, std::size_t k) {
  check_k(g, k);
  using Histogram = std::map<std::uint64_t, std::uint64_t>;
  auto partial = parallel_map<Histogram>(g.size(), [&](std::size_t first) {
    Histogram h;
    detail::for_each_clique_from(g, c, k, first,
                                 [&](std::span<const Vertex>, const VertexSet& common) { ++h[common.count()]; });
    return h;
  });
  Spectrum s{c, k, g.size(), {}, 0};
  for (const auto& h : partial) {
    for (const auto& [pages, mult] : h) {
      s.histogram[pages] += mult;
      s.total_spines += mult;
    }
  }
  return s;
}

BookReport max_book(const TwoColoring& g, Color c, std::size_t k) {
  check_k(g, k);
  auto partial = parallel_map<std::optional<BookReport>>(g.size(), [&](std::size_t first) {
    std::optional<BookReport> best;
    detail::for_each_clique_from(g, c, k, first, [&](std::span<const Vertex> spine, const VertexSet& common) {
      const std::uint64_t pages = common.count();
      // Spines arrive in lexicographic order, so strict improvement keeps the smallest.
      if (!best || pages > best->pages) best = BookReport{c, k, {spine.begin(), spine.end()}, pages};
    });
    return best;
  });
  std::optional<BookReport> best;
  for (auto& candidate : partial) {
    if (candidate && (!best || candidate->pages > best->pages)) best = std::move(candidate);
  }
  if (!best) {
    throw NoSpineError("no " + std::string(to_string(c)) + " K_" + std::to_string(k) + " in the coloring");
  }
  return *best;
}

// ---------------------------------------------------------------------------

ManyBooksParams ManyBooksParams::standard(Rational c, Rational gamma) {
  return {Mode::Standard, std::move(c), Rational(0), std::move(gamma)};
}

ManyBooksParams ManyBooksParams::quasirandom(Rational p, Rational gamma) {
  return {Mode::Quasirandom, Rational(0), std::move(p), std::move(gamma)};
}

ManyBooksReport many_books(const TwoColoring& g, const ManyBooksParams& params, std::size_t k) {
  if (params.gamma <= 0) throw DomainError("many_books needs gamma > 0");
  check_k(g, k);
  const Rational n(static_cast<long long>(g.size()));
  const Spectrum red = spectrum(g, Color::Red, k);
  const Spectrum blue = spectrum(g, Color::Blue, k);

  ManyBooksReport r;
  r.params = params;
  r.k = k;
  r.n = g.size();
  r.spine_floor = params.gamma * pow_rational(n, k);
  const Rational kk(static_cast<long long>(k));

  auto decide = [&](const Rational& red_t, const Rational& blue_t, std::uint64_t& red_q, std::uint64_t& blue_q) {
    red_q = red.count_at_least(red_t);
    blue_q = blue.count_at_least(blue_t);
    return Rational(red_q) >= r.spine_floor || Rational(blue_q) >= r.spine_floor;
  };

  if (params.mode == ManyBooksParams::Mode::Standard) {
    if (params.c <= 0) throw DomainError("many_books needs c > 0");
    r.red_threshold = (params.c / kk + params.gamma) * n;
    r.blue_threshold = (Rational(1) / kk + params.gamma) * n;
  } else {
    if (params.p <= 0 || params.p >= 1) throw DomainError("many_books quasirandom variant needs 0 < p < 1");
    r.red_threshold = (pow_rational(1 - params.p, k) + params.gamma) * n;
    r.blue_threshold = (pow_rational(params.p, k) + params.gamma) * n;
    ManyBooksReport::Alternate alt;
    alt.c = pow_rational((1 - params.p) / params.p, k);
    alt.red_threshold = (alt.c / kk + params.gamma) * n;
    alt.blue_threshold = (Rational(1) / kk + params.gamma) * n;
    alt.verdict = decide(alt.red_threshold, alt.blue_threshold, alt.red_qualifying, alt.blue_qualifying);
    r.alternate = alt;
  }
  r.verdict = decide(r.red_threshold, r.blue_threshold, r.red_qualifying, r.blue_qualifying);
  return r;
}

// ---------------------------------------------------------------------------

std::uint64_t common_neighbor_tuples(const TwoColoring& g, const VertexSet& a, const VertexSet& b, std::size_t k,
                                     Color c, const Rational& zeta, std::uint64_t max_tuples) {
  if (a.universe() != g.size() || b.universe() != g.size()) {
    throw DomainError("vertex set universe does not match coloring size");
  }
  if (a.intersects(b)) throw DomainError("common_neighbor_tuples needs disjoint A and B");
  const auto members = b.members();
  if (k < 1 || k > members.size()) throw DomainError("common_neighbor_tuples needs 1 <= k <= |B|");
  if (binomial(members.size(), k) > max_tuples) {
    throw InconclusiveError("instance too large for exhaustive mode: C(" + std::to_string(members.size()) + "," +
                            std::to_string(k) + ") tuples exceeds the cap of " + std::to_string(max_tuples));
  }
  const std::uint64_t need = ceil_nonneg(zeta * static_cast<long long>(a.count()));

  std::uint64_t hits = 0;
  std::vector<VertexSet> common(k + 1);
  common[0] = a;
  auto rec = [&](auto&& self, std::size_t depth, std::size_t start) -> void {
    if (depth == k) {
      if (common[k].count() >= need) ++hits;
      return;
    }
    for (std::size_t i = start; i + (k - depth) <= members.size(); ++i) {
      common[depth + 1] = common[depth];
      common[depth + 1] &= g.neighbors(members[i], c);
      self(self, depth + 1, i + 1);
    }
  };
  rec(rec, 0, 0);
  return hits;
}

bool markov_floor_check(const Spectrum& s, const Rational& xi, const Rational& nu, const Rational& kappa) {
  if (s.total_spines == 0) throw PreconditionError("markov_floor_check: empty spectrum");
  if (!(kappa > 0 && kappa < 1)) throw PreconditionError("markov_floor_check: need 0 < kappa < 1");
  if (!(xi > 0 && xi < 1)) throw PreconditionError("markov_floor_check: need 0 < xi < 1");
  if (!(nu > 0 && nu < xi)) throw PreconditionError("markov_floor_check: need 0 < nu < xi");
  const Rational n(static_cast<long long>(s.n));
  const Rational total(s.total_spines);
  if (Rational(s.page_sum()) < xi * n * total) {
    throw PreconditionError("markov_floor_check: mean pages below xi N");
  }
  const Rational nk = pow_rational(n, s.k);
  if (total < kappa * nk) throw PreconditionError("markov_floor_check: fewer than kappa N^k spines");
  return Rational(s.count_at_least(nu * n)) >= (xi - nu) * kappa * nk;
}

CountingReport counting_report(const TwoColoring& g, std::span<const VertexSet> parts, Color c, const Rational& eps) {
  const std::size_t k = parts.size();
  if (k == 0) throw DomainError("counting_report needs at least one part");
  for (const auto& part : parts) {
    if (part.empty()) throw DomainError("counting_report: empty part");
    if (part.universe() != g.size()) throw DomainError("vertex set universe does not match coloring size");
  }

  Rational density_product = 1;
  Rational size_product = 1;
  for (std::size_t i = 0; i < k; ++i) {
    size_product *= static_cast<long long>(parts[i].count());
    for (std::size_t j = i + 1; j < k; ++j) density_product *= density(g, parts[i], parts[j], c);
  }
  const Rational slack = eps * static_cast<long long>(k * (k - 1) / 2);

  // Labeled copies: v_i in parts[i], adjacent in c to all earlier v_j. Adjacency already
  // forces distinctness since no vertex neighbors itself.
  std::vector<VertexSet> allowed(k + 1);
  auto rec = [&](auto&& self, std::size_t depth) -> BigInt {
    if (depth + 1 == k) return BigInt(allowed[depth].intersection_count(parts[depth]));
    BigInt sum = 0;
    VertexSet here = allowed[depth] & parts[depth];
    here.for_each([&](Vertex v) {
      allowed[depth + 1] = allowed[depth];
      allowed[depth + 1] &= g.neighbors(v, c);
      sum += self(self, depth + 1);
    });
    return sum;
  };
  allowed[0] = VertexSet::full(g.size());

  CountingReport r;
  r.exact = rec(rec, 0);
  r.predicted = density_product * size_product;
  r.lower = (density_product - slack) * size_product;
  r.upper = (density_product + slack) * size_product;
  r.within = Rational(r.exact) >= r.lower && Rational(r.exact) <= r.upper;
  return r;
}

}  // namespace booklab
