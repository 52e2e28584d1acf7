#include "booklab/quasi.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>
#include <string>

#include "booklab/books.hpp"
#include "booklab/error.hpp"
#include "booklab/parallel.hpp"
#include "booklab/splitmix.hpp"

namespace booklab {

std::string_view to_string(QuasiMethod m) { return m == QuasiMethod::Exhaustive ? "exhaustive" : "sampled"; }

std::string_view to_string(QuasiVerdict v) {
  switch (v) {
    case QuasiVerdict::Violated: return "violated";
    case QuasiVerdict::NoViolationFound: return "no-violation-found";
    case QuasiVerdict::Quasirandom: return "quasirandom";
  }
  return "?";
}

namespace {

constexpr std::size_t kMaxExhaustiveQuasi = 18;
constexpr std::size_t kMaxExhaustiveRegularity = 12;

struct ScaledP {
  std::int64_t num;
  std::int64_t den;
};

ScaledP scale_p(const Rational& p, std::size_t n) {
  if (p < 0 || p > 1) throw DomainError("quasirandomness needs 0 <= p <= 1");
  const BigInt& den = denominator(p);
  // weights reach den * n^2 in magnitude
  if (den * BigInt(n) * BigInt(n) > BigInt(std::int64_t{1} << 62)) {
    throw DomainError("denominator of p too large for this vertex count");
  }
  return {numerator(p).convert_to<std::int64_t>(), den.convert_to<std::int64_t>()};
}

void check_theta(const Rational& theta) {
  if (theta <= 0) throw DomainError("theta must be positive");
}

bool lex_less(const VertexSet& ax, const VertexSet& ay, const VertexSet& bx, const VertexSet& by) {
  auto am = ax.members(), bm = bx.members();
  if (am != bm) return am < bm;
  return ay.members() < by.members();
}

QuasiVerdict verdict_for(const Rational& deviation, const Rational& theta, std::size_t n, bool exhaustive) {
  const Rational limit = theta * static_cast<long long>(n * n);
  if (deviation > limit) return QuasiVerdict::Violated;
  return exhaustive ? QuasiVerdict::Quasirandom : QuasiVerdict::NoViolationFound;
}

}  // namespace

Rational quasi_deviation(const TwoColoring& g, const VertexSet& x, const VertexSet& y, const Rational& p) {
  if (x.intersects(y)) throw DomainError("quasirandomness witnesses must be disjoint");
  Rational diff = Rational(pair_count(g, x, y, Color::Blue)) - p * static_cast<long long>(x.count() * y.count());
  return diff < 0 ? Rational(-diff) : diff;
}

// ---------------------------------------------------------------------------------

QuasiReport quasi_exhaustive(const TwoColoring& g, const Rational& p, const Rational& theta) {
  check_theta(theta);
  const std::size_t n = g.size();
  if (n > kMaxExhaustiveQuasi) {
    throw InconclusiveError("quasi_exhaustive handles n <= 18 (got " + std::to_string(n) +
                            "); use sampled mode (--probes, --seed)");
  }
  const auto sp = scale_p(p, n);
  std::vector<std::uint32_t> blue(n, 0);
  for (Vertex v = 0; v < n; ++v) g.neighbors(v, Color::Blue).for_each([&](Vertex u) { blue[v] |= 1U << u; });

  struct Best {
    std::int64_t value = -1;  // scaled deviation
    std::uint32_t x = 0, y = 0;
  };
  const std::uint32_t total = 1U << n;
  const std::size_t low_bits = std::min<std::size_t>(n, 12);
  const std::size_t chunks = std::size_t{1} << (n - low_bits);
  auto partial = parallel_map<Best>(chunks, [&](std::size_t chunk) {
    Best best;
    const std::uint32_t first = static_cast<std::uint32_t>(chunk << low_bits);
    const std::uint32_t last = std::min<std::uint32_t>(total, first + (1U << low_bits));
    for (std::uint32_t x = first; x < last; ++x) {
      const std::int64_t size_term = sp.num * std::popcount(x);
      std::int64_t pos = 0, neg = 0;
      std::uint32_t ypos = 0, yneg = 0;
      for (Vertex v = 0; v < n; ++v) {
        if ((x >> v) & 1U) continue;
        const std::int64_t w = sp.den * std::popcount(blue[v] & x) - size_term;
        if (w > 0) pos += w, ypos |= 1U << v;
        if (w < 0) neg -= w, yneg |= 1U << v;
      }
      if (pos > best.value) best = {pos, x, ypos};
      if (neg > best.value) best = {neg, x, yneg};
    }
    return best;
  });
  Best best;
  for (const auto& b : partial) {
    if (b.value > best.value) best = b;
  }

  QuasiReport r;
  r.p = p;
  r.theta = theta;
  r.x = VertexSet(n);
  r.y = VertexSet(n);
  for (Vertex v = 0; v < n; ++v) {
    if ((best.x >> v) & 1U) r.x.insert(v);
    if ((best.y >> v) & 1U) r.y.insert(v);
  }
  r.deviation = Rational(best.value, sp.den);
  r.method = QuasiMethod::Exhaustive;
  r.probes = total;
  r.verdict = verdict_for(r.deviation, theta, n, true);
  return r;
}

// ---------------------------------------------------------------------------------

namespace {

enum Side : std::uint8_t { kNone, kX, kY };

// Local search state for the signed objective sign * den * (e_B(X,Y) - p|X||Y|).
class DeviationClimber {
 public:
  DeviationClimber(const TwoColoring& g, ScaledP p, int sign, const std::vector<Side>& side)
      : g_(g), p_(p), sign_(sign), side_(g.size(), kNone), cx_(g.size(), 0), cy_(g.size(), 0) {
    for (Vertex v = 0; v < g.size(); ++v) move(v, side[v]);
  }

  std::int64_t value() const { return sign_ * (p_.den * exy_ - p_.num * nx_ * ny_); }

  void climb() {
    for (int round = 0; round < 10000; ++round) {
      const std::int64_t before = value();
      best_response(kY);
      best_response(kX);
      transfer_pass();
      if (value() <= before) break;
    }
  }

  VertexSet set_of(Side s) const {
    VertexSet out(g_.size());
    for (Vertex v = 0; v < g_.size(); ++v) {
      if (side_[v] == s) out.insert(v);
    }
    return out;
  }

 private:
  void move(Vertex v, Side to) {
    const Side from = side_[v];
    if (from == to) return;
    // v has no edge to itself, so its own counts are unaffected by the move
    if (from == kX) --nx_, exy_ -= cy_[v];
    if (from == kY) --ny_, exy_ -= cx_[v];
    if (to == kX) ++nx_, exy_ += cy_[v];
    if (to == kY) ++ny_, exy_ += cx_[v];
    side_[v] = to;
    g_.neighbors(v, Color::Blue).for_each([&](Vertex u) {
      if (from == kX) --cx_[u];
      if (from == kY) --cy_[u];
      if (to == kX) ++cx_[u];
      if (to == kY) ++cy_[u];
    });
  }

  // Optimal choice of `target` given the other side.
  void best_response(Side target) {
    const Side other = target == kX ? kY : kX;
    const auto& counts = other == kX ? cx_ : cy_;
    const std::int64_t other_size = other == kX ? nx_ : ny_;
    std::vector<Side> want(side_);
    for (Vertex v = 0; v < g_.size(); ++v) {
      if (side_[v] == other) continue;
      const std::int64_t w = sign_ * (p_.den * counts[v] - p_.num * other_size);
      want[v] = w > 0 ? target : kNone;
    }
    for (Vertex v = 0; v < g_.size(); ++v) move(v, want[v]);
  }

  // Moves single vertices between X and Y while that strictly helps.
  void transfer_pass() {
    for (Vertex v = 0; v < g_.size(); ++v) {
      if (side_[v] == kNone) continue;
      const bool from_x = side_[v] == kX;
      const std::int64_t nx = nx_ + (from_x ? -1 : 1);
      const std::int64_t ny = ny_ + (from_x ? 1 : -1);
      // e(X-v, Y+v) = e(X,Y) - cy[v] + cx[v], and symmetrically.
      const std::int64_t e = from_x ? exy_ - cy_[v] + cx_[v] : exy_ - cx_[v] + cy_[v];
      const std::int64_t after = sign_ * (p_.den * e - p_.num * nx * ny);
      if (after > value() && nx > 0 && ny > 0) move(v, from_x ? kY : kX);
    }
  }

  const TwoColoring& g_;
  ScaledP p_;
  int sign_;
  std::vector<Side> side_;
  std::vector<std::int64_t> cx_, cy_;  // blue neighbors in X / in Y
  std::int64_t nx_ = 0, ny_ = 0, exy_ = 0;
};

}  // namespace

QuasiReport quasi_sampled(const TwoColoring& g, const Rational& p, const Rational& theta, std::uint64_t probes,
                          std::uint64_t seed) {
  check_theta(theta);
  if (probes < 1) throw DomainError("quasi_sampled needs probes >= 1");
  const std::size_t n = g.size();
  const auto sp = scale_p(p, n);

  struct Found {
    std::int64_t value = -1;
    VertexSet x, y;
  };
  auto partial = parallel_map<Found>(probes, [&](std::size_t probe) {
    SplitMix64 rng(derive_seed(seed, probe));
    std::vector<Side> side(n);
    for (auto& s : side) s = static_cast<Side>(rng.below(3));
    Found best;
    for (int sign : {1, -1}) {
      DeviationClimber climber(g, sp, sign, side);
      climber.climb();
      if (climber.value() > best.value) best = {climber.value(), climber.set_of(kX), climber.set_of(kY)};
    }
    return best;
  });

  Found best;
  for (auto& f : partial) {
    if (f.value > best.value || (f.value == best.value && lex_less(f.x, f.y, best.x, best.y))) best = std::move(f);
  }
  QuasiReport r;
  r.p = p;
  r.theta = theta;
  r.x = best.x;
  r.y = best.y;
  r.deviation = quasi_deviation(g, r.x, r.y, p);  // recomputed independently of the climber
  r.method = QuasiMethod::Sampled;
  r.probes = probes;
  r.verdict = verdict_for(r.deviation, theta, n, false);
  return r;
}

// ---------------------------------------------------------------------------------

BigInt count_near_cliques(const TwoColoring& g, Color c, std::size_t k) {
  if (k < 1) throw DomainError("count_near_cliques needs k >= 1");
  const std::size_t n = g.size();
  BigInt total = 0;
  if (k + 2 <= n) total += BigInt((k + 2) * (k + 1) / 2) * count_cliques(g, c, k + 2);
  for (Vertex u = 0; u < n; ++u) {
    g.neighbors(u, opposite(c)).for_each([&](Vertex w) {
      if (w <= u) return;
      total += count_cliques_within(g, c, k, g.neighbors(u, c) & g.neighbors(w, c));
    });
  }
  return total;
}

IdentityReport identity_check(const TwoColoring& g, std::size_t k, const Rational& p) {
  const std::size_t n = g.size();
  if (n > 60 || k < 1 || k > 5) {
    throw InconclusiveError("identity_check is limited to n <= 60 and 1 <= k <= 5");
  }
  IdentityReport r;
  r.k = k;
  r.p = p;
  Rational pk = 1;
  for (std::size_t i = 0; i < k; ++i) pk *= p;
  const Rational nn(static_cast<long long>(n));
  const Rational target = pk * nn;  // p^k N

  if (k <= n) {
    r.cliques_k = count_cliques(g, Color::Blue, k);
    const Spectrum s = spectrum(g, Color::Blue, k);
    for (const auto& [pages, mult] : s.histogram) {
      const Rational d = Rational(pages) - target;
      r.e_direct += d * d * mult;
    }
  }
  if (k + 1 <= n) r.cliques_k1 = count_cliques(g, Color::Blue, k + 1);
  r.near_cliques_k2 = count_near_cliques(g, Color::Blue, k);

  r.e_identity = Rational(2 * r.near_cliques_k2) +
                 (1 - 2 * target) * Rational(BigInt(k + 1) * r.cliques_k1) +
                 pk * pk * nn * nn * Rational(r.cliques_k);
  r.equal = r.e_direct == r.e_identity;
  return r;
}

// ---------------------------------------------------------------------------------

namespace {

// Exact fraction with small non-negative parts.
struct Frac {
  std::int64_t num = 0, den = 1;
  bool operator>(const Frac& o) const {
    return static_cast<__int128>(num) * o.den > static_cast<__int128>(o.num) * den;
  }
};

struct RegularitySearch {
  const TwoColoring& g;
  Color c;
  std::vector<Vertex> xs, ys;
  std::int64_t base_e;  // e(X,Y)
  std::size_t min_x, min_y;

  // |d(X,Y) - e/(s t)|
  Frac gap(std::int64_t e, std::int64_t s, std::int64_t t) const {
    const std::int64_t full = static_cast<std::int64_t>(xs.size() * ys.size());
    std::int64_t num = base_e * s * t - e * full;
    return {num < 0 ? -num : num, full * s * t};
  }

  // Given the chosen subset of `from`, the best subset of `to` of each allowed size is a
  // prefix of `to` sorted by neighbor count. Returns (gap, chosen members of `to`).
  std::pair<Frac, std::vector<Vertex>> best_response(const VertexSet& chosen, const std::vector<Vertex>& to,
                                                      std::size_t min_to, int direction) const {
    const std::int64_t s = static_cast<std::int64_t>(chosen.count());
    std::vector<std::pair<std::int64_t, Vertex>> counts;
    counts.reserve(to.size());
    for (Vertex v : to) counts.emplace_back(g.neighbors(v, c).intersection_count(chosen), v);
    // direction > 0: densest first; < 0: sparsest first; 0: try both
    Frac best{-1, 1};
    std::vector<Vertex> arg;
    for (int dir : {1, -1}) {
      if (direction != 0 && dir != direction) continue;
      auto sorted = counts;
      std::stable_sort(sorted.begin(), sorted.end(), [dir](const auto& a, const auto& b) {
        return dir > 0 ? a.first > b.first : a.first < b.first;
      });
      std::int64_t e = 0;
      for (std::size_t t = 1; t <= sorted.size(); ++t) {
        e += sorted[t - 1].first;
        if (t < min_to) continue;
        Frac f = gap(e, s, static_cast<std::int64_t>(t));
        if (f > best) {
          best = f;
          arg.clear();
          for (std::size_t i = 0; i < t; ++i) arg.push_back(sorted[i].second);
        }
      }
    }
    return {best, arg};
  }
};

std::size_t ceil_fraction_of(const Rational& eps, std::size_t size) {
  Rational want = eps * static_cast<long long>(size);
  BigInt q = numerator(want) / denominator(want);
  if (q * denominator(want) != numerator(want)) q += 1;
  if (q < 1) q = 1;
  return q > BigInt(size) ? size + 1 : q.convert_to<std::size_t>();
}

}  // namespace

RegularityResult regularity_witness(const TwoColoring& g, const VertexSet& x, const VertexSet& y, const Rational& eps,
                                    Color c, RegularityMode mode, std::uint64_t seed) {
  if (x.universe() != g.size() || y.universe() != g.size()) {
    throw DomainError("vertex set universe does not match coloring size");
  }
  if (x.empty() || y.empty()) throw DomainError("regularity needs nonempty X and Y");
  if (eps <= 0) throw DomainError("epsilon must be positive");
  if (mode == RegularityMode::Auto) {
    mode = x.count() <= kMaxExhaustiveRegularity && y.count() <= kMaxExhaustiveRegularity ? RegularityMode::Exhaustive
                                                                                           : RegularityMode::Heuristic;
  }
  const std::size_t n = g.size();
  RegularitySearch search{g, c, x.members(), y.members(), static_cast<std::int64_t>(pair_count(g, x, y, c)),
                          ceil_fraction_of(eps, x.count()), ceil_fraction_of(eps, y.count())};

  RegularityResult result;
  result.mode = mode;
  result.x_sub = VertexSet(n);
  result.y_sub = VertexSet(n);
  Frac best{-1, 1};
  auto consider = [&](const Frac& f, const VertexSet& xs, const std::vector<Vertex>& ys) {
    if (f > best) {
      best = f;
      result.x_sub = xs;
      result.y_sub = VertexSet(n, std::span<const Vertex>(ys));
    }
  };

  if (search.min_x <= search.xs.size() && search.min_y <= search.ys.size()) {
    if (mode == RegularityMode::Exhaustive) {
      if (search.xs.size() > kMaxExhaustiveRegularity || search.ys.size() > kMaxExhaustiveRegularity) {
        throw InconclusiveError("exhaustive regularity check handles |X|, |Y| <= 12; use heuristic mode");
      }
      const std::uint32_t total = 1U << search.xs.size();
      struct Local {
        Frac f{-1, 1};
        VertexSet xs;
        std::vector<Vertex> ys;
      };
      auto partial = parallel_map<Local>(total, [&](std::size_t mask) {
        Local out;
        if (static_cast<std::size_t>(std::popcount(static_cast<std::uint32_t>(mask))) < search.min_x) return out;
        VertexSet chosen(n);
        for (std::size_t i = 0; i < search.xs.size(); ++i) {
          if ((mask >> i) & 1U) chosen.insert(search.xs[i]);
        }
        auto [f, ys] = search.best_response(chosen, search.ys, search.min_y, 0);
        out.f = f;
        out.xs = std::move(chosen);
        out.ys = std::move(ys);
        return out;
      });
      for (const auto& local : partial) {
        if (local.f.num >= 0) consider(local.f, local.xs, local.ys);
      }
    } else {
      constexpr int kRestarts = 64;
      for (int r = 0; r < kRestarts; ++r) {
        SplitMix64 rng(derive_seed(seed, r));
        for (int dir : {1, -1}) {
          // random X' of admissible size, then alternate best responses
          auto order = search.xs;
          std::shuffle(order.begin(), order.end(), rng);
          const std::size_t size =
              search.min_x + static_cast<std::size_t>(rng.below(search.xs.size() - search.min_x + 1));
          VertexSet xs_set(n, std::span<const Vertex>(order.data(), size));
          Frac current{-1, 1};
          for (int round = 0; round < 100; ++round) {
            auto [fy, ys] = search.best_response(xs_set, search.ys, search.min_y, dir);
            VertexSet ys_set(n, std::span<const Vertex>(ys));
            auto [fx, xs_members] = search.best_response(ys_set, search.xs, search.min_x, dir);
            VertexSet next_x(n, std::span<const Vertex>(xs_members));
            consider(fy, xs_set, ys);
            consider(fx, next_x, ys);
            if (!(fx > current)) break;
            current = fx;
            xs_set = next_x;
          }
        }
      }
    }
  }

  if (best.num < 0) {
    result.gap = 0;
    return result;
  }
  // Recompute the witness gap from scratch in exact arithmetic.
  const Rational d_full = density(g, x, y, c);
  const Rational d_sub = density(g, result.x_sub, result.y_sub, c);
  result.gap = d_full > d_sub ? Rational(d_full - d_sub) : Rational(d_sub - d_full);
  result.refuted = result.gap > eps;
  return result;
}

// ---------------------------------------------------------------------------------

BlockedConfigReport blocked_config_check(const TwoColoring& g, std::span<const VertexSet> sets, const Rational& eta,
                                         const Rational& delta) {
  const std::size_t k = sets.size();
  if (k == 0) throw DomainError("blocked_config_check needs at least one set");
  for (std::size_t i = 0; i < k; ++i) {
    if (sets[i].empty()) throw DomainError("blocked_config_check: empty set");
    for (std::size_t j = i + 1; j < k; ++j) {
      if (sets[i].intersects(sets[j])) throw DomainError("blocked_config_check: sets overlap");
    }
  }
  BlockedConfigReport r;
  r.k = k;
  r.eta = eta;
  r.delta = delta;
  r.blue_density.assign(k, std::vector<Rational>(k));
  bool red_dense = true, blue_dense = true;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      r.blue_density[i][j] = density(g, sets[i], sets[j], Color::Blue);
      if (i == j) {
        const Rational internal_red = density(g, sets[i], sets[i], Color::Red);
        red_dense = red_dense && internal_red >= delta;
        blue_dense = blue_dense && r.blue_density[i][i] >= delta;
      } else {
        const Rational cross_red = density(g, sets[i], sets[j], Color::Red);
        red_dense = red_dense && r.blue_density[i][j] >= delta;
        blue_dense = blue_dense && cross_red >= delta;
      }
    }
  }
  r.red_pattern_dense = red_dense;
  r.blue_pattern_dense = blue_dense;

  auto check = [&](std::size_t i, std::size_t j, Color c) {
    if (r.regularity_refuted) return;
    auto w = regularity_witness(g, sets[i], sets[j], eta, c);
    if (w.refuted) {
      r.regularity_refuted = true;
      r.refutation = std::move(w);
      r.refuted_i = i;
      r.refuted_j = j;
    }
  };
  bool red_regular = false, blue_regular = false;
  if (red_dense || blue_dense) {
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = i + 1; j < k; ++j) check(i, j, Color::Blue);
    }
    const bool cross_ok = !r.regularity_refuted;
    if (red_dense && cross_ok) {
      for (std::size_t i = 0; i < k; ++i) check(i, i, Color::Red);
      red_regular = !r.regularity_refuted;
    }
    if (blue_dense && cross_ok && !r.regularity_refuted) {
      for (std::size_t i = 0; i < k; ++i) check(i, i, Color::Blue);
      blue_regular = !r.regularity_refuted;
    }
  }
  r.red_blocked = red_dense && red_regular;
  r.blue_blocked = blue_dense && blue_regular;
  return r;
}

// ---------------------------------------------------------------------------------

std::uint64_t kpartite_edits(const TwoColoring& g, const Partition& partition) {
  if (!partition.is_partition() || partition.universe() != g.size()) {
    throw DomainError("kpartite_edits needs a partition of the vertex set");
  }
  std::uint64_t blue_inside = 0, red_inside = 0;
  for (const auto& part : partition.parts) {
    blue_inside += pair_count(g, part, part, Color::Blue) / 2;
    red_inside += pair_count(g, part, part, Color::Red) / 2;
  }
  return g.edge_count(Color::Blue) - blue_inside + red_inside;
}

KPartiteDistance kpartite_distance(const TwoColoring& g, std::size_t k, std::uint64_t restarts, std::uint64_t seed) {
  const std::size_t n = g.size();
  if (k < 2 || k > n) throw DomainError("kpartite_distance needs 2 <= k <= n");
  if (restarts < 1) throw DomainError("kpartite_distance needs restarts >= 1");

  struct Local {
    std::uint64_t edits = std::numeric_limits<std::uint64_t>::max();
    std::vector<std::size_t> part;
  };
  auto partial = parallel_map<Local>(restarts, [&](std::size_t restart) {
    SplitMix64 rng(derive_seed(seed, restart));
    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), Vertex{0});
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<std::size_t> part(n);
    for (std::size_t i = 0; i < n; ++i) part[order[i]] = i % k;  // sizes differ by at most one

    // blue[v][j]: blue neighbors of v in part j. Edits = const - 2 * blue_inside, so
    // maximize blue edges inside parts with size-preserving swaps.
    std::vector<std::vector<std::int64_t>> blue(n, std::vector<std::int64_t>(k, 0));
    for (Vertex v = 0; v < n; ++v) {
      g.neighbors(v, Color::Blue).for_each([&](Vertex u) { ++blue[v][part[u]]; });
    }
    for (;;) {
      std::int64_t best_gain = 0;
      Vertex bu = 0, bv = 0;
      for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
          const std::size_t pu = part[u], pv = part[v];
          if (pu == pv) continue;
          const std::int64_t uv = g.is_blue(u, v) ? 1 : 0;
          const std::int64_t gain = (blue[u][pv] - uv) - blue[u][pu] + (blue[v][pu] - uv) - blue[v][pv];
          if (gain > best_gain) best_gain = gain, bu = u, bv = v;
        }
      }
      if (best_gain <= 0) break;
      const std::size_t pu = part[bu], pv = part[bv];
      g.neighbors(bu, Color::Blue).for_each([&](Vertex w) { --blue[w][pu], ++blue[w][pv]; });
      g.neighbors(bv, Color::Blue).for_each([&](Vertex w) { --blue[w][pv], ++blue[w][pu]; });
      part[bu] = pv;
      part[bv] = pu;
    }
    Partition p;
    p.parts.assign(k, VertexSet(n));
    for (Vertex v = 0; v < n; ++v) p.parts[part[v]].insert(v);
    return Local{kpartite_edits(g, p), std::move(part)};
  });

  std::size_t arg = 0;
  for (std::size_t i = 1; i < partial.size(); ++i) {
    if (partial[i].edits < partial[arg].edits) arg = i;
  }
  // Parts ordered by smallest member.
  std::vector<std::size_t> rank(k, k);
  std::size_t next = 0;
  for (Vertex v = 0; v < n; ++v) {
    auto& r = rank[partial[arg].part[v]];
    if (r == k) r = next++;
  }
  KPartiteDistance out;
  out.edits = partial[arg].edits;
  out.partition.parts.assign(k, VertexSet(n));
  for (Vertex v = 0; v < n; ++v) out.partition.parts[rank[partial[arg].part[v]]].insert(v);
  return out;
}

}  // namespace booklab
