#include <doctest.h>

#include "booklab/books.hpp"
#include "booklab/constructions.hpp"
#include "booklab/error.hpp"
#include "booklab/quasi.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace booklab;
using testing_support::all_blue;

TEST_CASE("quasi_exhaustive examples") {
  auto kp = balanced_kpartite(2, 6);
  auto r = quasi_exhaustive(kp.coloring, Rational(1, 2), Rational(1, 10));
  CHECK(r.verdict == QuasiVerdict::Violated);
  CHECK(r.deviation == 18);
  const auto& parts = kp.partition.parts;
  CHECK(((r.x == parts[0] && r.y == parts[1]) || (r.x == parts[1] && r.y == parts[0])));
  CHECK(quasi_deviation(kp.coloring, r.x, r.y, Rational(1, 2)) == 18);

  auto k6 = quasi_exhaustive(all_blue(6), Rational(1), Rational(1, 1000));
  CHECK(k6.deviation == 0);
  CHECK(k6.verdict == QuasiVerdict::Quasirandom);

  auto halves = quasi_exhaustive(all_blue(6), Rational(1, 2), Rational(1, 100));
  CHECK(halves.verdict == QuasiVerdict::Violated);
  CHECK(halves.deviation == Rational(9, 2));
  CHECK(halves.x.count() == 3);
  CHECK(halves.y.count() == 3);

  CHECK_THROWS_AS(quasi_exhaustive(random_coloring(19, Rational(1, 2), 1), Rational(1, 2), Rational(1, 10)),
                  InconclusiveError);
}

TEST_CASE("quasi_exhaustive equals the 3^n enumeration") {
  for (std::uint64_t seed = 1; seed <= 12; ++seed) {
    const std::size_t n = 3 + seed % 7;
    auto g = random_coloring(n, Rational(1, 2), seed);
    for (auto [num, den] : {std::pair{1, 2}, std::pair{1, 3}, std::pair{4, 5}}) {
      auto r = quasi_exhaustive(g, Rational(num, den), Rational(1, 10));
      CHECK(to_double(r.deviation) == doctest::Approx(oracle::quasi_max(g, num, den)).epsilon(1e-12));
      CHECK_FALSE(r.x.intersects(r.y));
      CHECK(quasi_deviation(g, r.x, r.y, Rational(num, den)) == r.deviation);
    }
  }
}

TEST_CASE("red/blue duality") {
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    auto g = random_coloring(10, Rational(2, 5), seed);
    const Rational p(2, 5), theta(1, 20);
    auto direct = quasi_exhaustive(g, p, theta);
    auto dual = quasi_exhaustive(g.swapped(), 1 - p, theta);
    CHECK(direct.deviation == dual.deviation);
    CHECK((direct.verdict == QuasiVerdict::Violated) == (dual.verdict == QuasiVerdict::Violated));
  }
}

TEST_CASE("quasi_sampled") {
  auto kp = balanced_kpartite(3, 40).coloring;
  auto v = quasi_sampled(kp, Rational(1, 2), Rational(1, 100), 1000, 7);
  CHECK(v.verdict == QuasiVerdict::Violated);
  CHECK(v.deviation > Rational(1, 100) * 120 * 120);
  CHECK(quasi_deviation(kp, v.x, v.y, Rational(1, 2)) == v.deviation);

  auto g = random_coloring(500, Rational(1, 2), 1);
  auto r = quasi_sampled(g, Rational(1, 2), Rational(1, 20), 1000, 1);
  CHECK(r.verdict == QuasiVerdict::NoViolationFound);
  CHECK(r.method == QuasiMethod::Sampled);
  CHECK(r.deviation == 2313);

  CHECK_THROWS_AS(quasi_sampled(g, Rational(1, 2), Rational(1, 20), 0, 1), DomainError);

  // sampling never beats the exact maximum and agrees with it on small inputs
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    auto small = random_coloring(12, Rational(1, 2), seed);
    auto exact = quasi_exhaustive(small, Rational(1, 2), Rational(1, 10));
    auto sampled = quasi_sampled(small, Rational(1, 2), Rational(1, 10), 50, seed);
    CHECK(sampled.deviation <= exact.deviation);
  }
}

TEST_CASE("identity examples") {
  auto k4 = identity_check(all_blue(4), 2, Rational(1, 2));
  CHECK(k4.cliques_k == 6);
  CHECK(k4.cliques_k1 == 4);
  CHECK(k4.near_cliques_k2 == 6);
  CHECK(k4.e_direct == 6);
  CHECK(k4.e_identity == 6);
  CHECK(k4.equal);

  auto empty = identity_check(testing_support::all_red(5), 2, Rational(3, 7));
  CHECK(empty.cliques_k == 0);
  CHECK(empty.near_cliques_k2 == 0);
  CHECK(empty.e_direct == 0);
  CHECK(empty.equal);

  auto r = identity_check(random_coloring(30, Rational(1, 3), 9), 3, Rational(1, 3));
  CHECK(r.equal);

  CHECK_THROWS_AS(identity_check(random_coloring(61, Rational(1, 2), 1), 2, Rational(1, 2)), InconclusiveError);
  CHECK_THROWS_AS(identity_check(all_blue(5), 6, Rational(1, 2)), InconclusiveError);
}

TEST_CASE("identity invariants") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const std::size_t n = 6 + seed % 8;
    auto g = random_coloring(n, Rational(1, 2), seed);
    for (std::size_t k = 1; k <= 3; ++k) {
      CHECK(count_near_cliques(g, Color::Blue, k) == oracle::near_cliques(g, Color::Blue, k));
      CHECK(count_near_cliques(g, Color::Red, k) == oracle::near_cliques(g, Color::Red, k));
      auto r = identity_check(g, k, Rational(seed, 11));
      CHECK(r.equal);
      CHECK(r.e_direct >= 0);
    }
  }
  // E vanishes exactly when every spine has p^k N extensions
  auto flat = identity_check(all_blue(5), 1, Rational(4, 5));
  CHECK(flat.e_direct == 0);
  auto off = identity_check(all_blue(5), 1, Rational(3, 5));
  CHECK(off.e_direct > 0);
}

namespace {

// Largest |d(X,Y) - d(X',Y')| over all admissible subsets, by direct enumeration.
Rational brute_regularity_gap(const TwoColoring& g, const VertexSet& x, const VertexSet& y, const Rational& eps,
                              Color c) {
  const auto xs = x.members(), ys = y.members();
  const Rational d = density(g, x, y, c);
  Rational best = -1;
  for (std::uint32_t mx = 1; mx < (1U << xs.size()); ++mx) {
    VertexSet sx(g.size());
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if ((mx >> i) & 1U) sx.insert(xs[i]);
    }
    if (Rational(sx.count()) < eps * static_cast<long long>(xs.size())) continue;
    for (std::uint32_t my = 1; my < (1U << ys.size()); ++my) {
      VertexSet sy(g.size());
      for (std::size_t i = 0; i < ys.size(); ++i) {
        if ((my >> i) & 1U) sy.insert(ys[i]);
      }
      if (Rational(sy.count()) < eps * static_cast<long long>(ys.size())) continue;
      Rational gap = density(g, sx, sy, c) - d;
      if (gap < 0) gap = -gap;
      if (gap > best) best = gap;
    }
  }
  return best;
}

}  // namespace

TEST_CASE("regularity witnesses") {
  auto k12 = all_blue(12);
  auto flat = regularity_witness(k12, VertexSet::range(12, 0, 6), VertexSet::range(12, 6, 12), Rational(1, 10),
                                 Color::Blue);
  CHECK_FALSE(flat.refuted);
  CHECK(flat.gap == 0);

  auto kp = balanced_kpartite(2, 6).coloring;
  VertexSet block = VertexSet::range(12, 0, 6);
  VertexSet mixed(12, {3, 4, 5, 6, 7, 8});
  auto r = regularity_witness(kp, block, mixed, Rational(1, 4), Color::Blue);
  CHECK(r.refuted);
  CHECK(r.mode == RegularityMode::Exhaustive);
  CHECK(r.gap > Rational(1, 4));
  CHECK(r.x_sub.count() * 4 >= 6);
  const Rational recomputed = density(kp, block, mixed, Color::Blue) - density(kp, r.x_sub, r.y_sub, Color::Blue);
  CHECK((recomputed < 0 ? Rational(-recomputed) : recomputed) == r.gap);

  auto heuristic = regularity_witness(kp, block, mixed, Rational(1, 4), Color::Blue, RegularityMode::Heuristic);
  CHECK(heuristic.refuted);
  CHECK(heuristic.gap > Rational(1, 4));

  auto g = random_coloring(24, Rational(1, 2), 5);
  auto fixture = regularity_witness(g, VertexSet::range(24, 0, 12), VertexSet::range(24, 12, 24),
                                    Rational(45, 100), Color::Blue);
  CHECK_FALSE(fixture.refuted);
  CHECK(fixture.gap == Rational(7, 24));

  CHECK_THROWS_AS(regularity_witness(random_coloring(30, Rational(1, 2), 1), VertexSet::range(30, 0, 13),
                                     VertexSet::range(30, 13, 26), Rational(1, 2), Color::Blue,
                                     RegularityMode::Exhaustive),
                  InconclusiveError);
}

TEST_CASE("exhaustive regularity matches subset enumeration") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    auto g = random_coloring(14, Rational(1, 2), seed);
    VertexSet x = VertexSet::range(14, 0, 5 + seed % 2);
    VertexSet y = seed % 3 == 0 ? x : VertexSet::range(14, 7, 12 + seed % 3);
    for (auto eps : {Rational(1, 5), Rational(1, 2)}) {
      for (Color c : {Color::Red, Color::Blue}) {
        auto r = regularity_witness(g, x, y, eps, c, RegularityMode::Exhaustive);
        CHECK(r.gap == brute_regularity_gap(g, x, y, eps, c));
        CHECK(r.refuted == (r.gap > eps));
      }
    }
  }
}

TEST_CASE("blocked configurations") {
  auto kp = balanced_kpartite(2, 6);
  auto r = blocked_config_check(kp.coloring, kp.partition.parts, Rational(3, 10), Rational(3, 10));
  // Blue blocks joined in red pass the blue-pattern densities, but a 6-block is not
  // 3/10-regular with itself: two vertices have internal density 1/2 against 5/6.
  CHECK_FALSE(r.red_pattern_dense);
  CHECK(r.blue_pattern_dense);
  CHECK_FALSE(r.red_blocked);
  CHECK_FALSE(r.blue_blocked);
  REQUIRE(r.regularity_refuted);
  CHECK(r.refuted_i == r.refuted_j);
  CHECK(r.refutation->gap == Rational(1, 3));
  CHECK(r.blue_density[0][1] == 0);
  CHECK(r.blue_density[0][0] == Rational(30, 36));

  auto g = random_coloring(24, Rational(1, 2), 11);
  std::vector<VertexSet> sets{VertexSet::range(24, 0, 8), VertexSet::range(24, 8, 16), VertexSet::range(24, 16, 24)};
  auto b = blocked_config_check(g, sets, Rational(45, 100), Rational(1, 5));
  CHECK(b.k == 3);
  CHECK(b.red_pattern_dense);
  CHECK(b.blue_pattern_dense);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) CHECK(b.blue_density[i][j] == density(g, sets[i], sets[j], Color::Blue));
  }
  if (b.regularity_refuted) {
    REQUIRE(b.refutation.has_value());
    CHECK(b.refutation->gap > Rational(45, 100));
  }

  std::vector<VertexSet> overlapping{VertexSet::range(24, 0, 8), VertexSet::range(24, 4, 12)};
  CHECK_THROWS_AS(blocked_config_check(g, overlapping, Rational(1, 2), Rational(1, 2)), DomainError);
}

TEST_CASE("kpartite distance") {
  for (std::size_t k = 2; k <= 4; ++k) {
    auto kp = balanced_kpartite(k, 5);
    auto d = kpartite_distance(kp.coloring, k, 8, 1);
    CHECK(d.edits == 0);
    CHECK(d.partition.parts == kp.partition.parts);
  }

  auto kp = balanced_kpartite(2, 6);
  ColoringBuilder b(kp.coloring);
  b.flip(0, 1);
  auto flipped = b.build();
  auto d = kpartite_distance(flipped, 2, 8, 1);
  CHECK(d.edits == 1);
  CHECK(kpartite_edits(flipped, kp.partition) == 1);

  auto g = random_coloring(60, Rational(1, 2), 3);
  auto r = kpartite_distance(g, 2, 32, 1);
  CHECK(r.partition.is_partition());
  CHECK(r.partition.is_balanced());
  CHECK(r.edits == kpartite_edits(g, r.partition));
  // a random balanced split costs about half the pairs; local search only improves on it
  CHECK(static_cast<double>(r.edits) / 1770.0 <= 0.55);
  CHECK(r.edits == 729);

  CHECK_THROWS_AS(kpartite_distance(g, 1, 4, 1), DomainError);
  CHECK_THROWS_AS(kpartite_distance(g, 61, 4, 1), DomainError);
}
