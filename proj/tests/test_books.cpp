#include <doctest.h>

#include "booklab/books.hpp"
#include "booklab/constructions.hpp"
#include "booklab/splitmix.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace booklab;
using testing_support::all_blue;
using testing_support::all_red;

TEST_CASE("count_cliques matches brute force") {
  CHECK(count_cliques(all_blue(5), Color::Blue, 3) == 10);
  CHECK(count_cliques(balanced_kpartite(2, 6).coloring, Color::Red, 3) == 0);
  CHECK(count_cliques(balanced_kpartite(3, 4).coloring, Color::Blue, 3) == 12);
  CHECK_THROWS_AS(count_cliques(all_blue(3), Color::Blue, 4), DomainError);
  CHECK_THROWS_AS(count_cliques(all_blue(3), Color::Blue, 0), DomainError);

  for (std::uint64_t seed = 1; seed <= 12; ++seed) {
    const std::size_t n = 6 + seed;
    auto g = random_coloring(n, Rational(1 + seed % 3, 4), seed);
    for (std::size_t k = 1; k <= 5; ++k) {
      for (Color c : {Color::Red, Color::Blue}) CHECK(count_cliques(g, c, k) == oracle::cliques(g, c, k));
    }
  }
}

TEST_CASE("extensions") {
  auto k7 = all_blue(7);
  std::vector<Vertex> spine{1, 4, 5};
  CHECK(extensions(k7, spine, Color::Blue).members() == std::vector<Vertex>{0, 2, 3, 6});

  auto kp = balanced_kpartite(2, 6).coloring;
  std::vector<Vertex> inside{0, 1};
  CHECK(extensions(kp, inside, Color::Blue).members() == std::vector<Vertex>{2, 3, 4, 5});
  std::vector<Vertex> across{0, 6};
  CHECK(extensions(kp, across, Color::Red).empty());
  CHECK_THROWS_AS(extensions(kp, across, Color::Blue), DomainError);
}

TEST_CASE("spectrum examples") {
  auto s = spectrum(all_blue(4), Color::Blue, 2);
  CHECK(s.histogram == std::map<std::uint64_t, std::uint64_t>{{2, 6}});
  auto kp = spectrum(balanced_kpartite(2, 6).coloring, Color::Blue, 2);
  CHECK(kp.histogram == std::map<std::uint64_t, std::uint64_t>{{4, 30}});
  auto none = spectrum(all_red(5), Color::Blue, 2);
  CHECK(none.total_spines == 0);
  CHECK_FALSE(none.max_pages().has_value());

  auto g = random_coloring(60, Rational(1, 2), 11);
  auto r = spectrum(g, Color::Blue, 2);
  CHECK(r.page_sum() == 3 * BigInt(oracle::cliques(g, Color::Blue, 3)));
}

TEST_CASE("spectrum invariants against brute force") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const std::size_t n = 8 + seed % 6;
    auto g = random_coloring(n, Rational(seed % 2 ? 1 : 2, 3), seed);
    for (std::size_t k = 1; k <= 4; ++k) {
      for (Color c : {Color::Red, Color::Blue}) {
        const auto s = spectrum(g, c, k);
        std::uint64_t total = 0;
        for (const auto& [pages, mult] : s.histogram) total += mult;
        CHECK(total == s.total_spines);
        CHECK(s.total_spines == oracle::cliques(g, c, k));
        CHECK(s.page_sum() == BigInt(k + 1) * oracle::cliques(g, c, k + 1));
        CHECK(s.page_pair_sum() == oracle::near_cliques(g, c, k));
        if (s.total_spines > 0) {
          const auto best = max_book(g, c, k);
          CHECK(best.pages == *s.max_pages());
          CHECK(static_cast<long long>(best.pages) == oracle::max_pages(g, c, k));
          CHECK(oracle::pages(g, best.spine, c) == best.pages);
        }
      }
    }
  }
}

TEST_CASE("max_book") {
  CHECK(max_book(all_blue(10), Color::Blue, 2).pages == 8);
  auto tie = max_book(all_blue(5), Color::Blue, 3);
  CHECK(tie.spine == std::vector<Vertex>{0, 1, 2});
  for (std::size_t n = 2; n <= 8; ++n) {
    CHECK(max_book(balanced_kpartite(2, n + 1).coloring, Color::Blue, 2).pages == n - 1);
  }
  CHECK_THROWS_AS(max_book(all_red(6), Color::Blue, 2), NoSpineError);
}

TEST_CASE("max_book on a large random coloring") {
  auto g = random_coloring(2000, Rational(1, 2), 1);
  auto b = max_book(g, Color::Blue, 2);
  // the maximum sits well above the mean p^2 (N - 2)
  CHECK(b.pages > 499);
  CHECK(b.pages == 587);
  CHECK(oracle::pages(g, b.spine, Color::Blue) == b.pages);
}

TEST_CASE("many_books") {
  auto kp = balanced_kpartite(2, 6).coloring;
  auto r = many_books(kp, ManyBooksParams::standard(Rational(1, 100), Rational(1, 100)), 2);
  CHECK(r.red_threshold == Rational(18, 100));
  CHECK(r.blue_threshold == Rational(612, 100));
  CHECK(r.red_qualifying == 0);
  CHECK(r.blue_qualifying == 0);
  CHECK_FALSE(r.verdict);

  auto k12 = many_books(all_blue(12), ManyBooksParams::standard(Rational(1), Rational(1, 100)), 2);
  CHECK(k12.blue_qualifying == 66);
  CHECK(k12.spine_floor == Rational(144, 100));
  CHECK(k12.verdict);

  auto g = random_coloring(500, Rational(1, 2), 1);
  auto q = many_books(g, ManyBooksParams::quasirandom(Rational(1, 2), Rational(1, 20)), 2);
  CHECK(q.red_threshold == Rational(150));
  CHECK(q.blue_threshold == Rational(150));
  CHECK_FALSE(q.verdict);
  REQUIRE(q.alternate.has_value());
  CHECK(q.alternate->c == 1);

  CHECK_THROWS_AS(many_books(kp, ManyBooksParams::standard(Rational(1), Rational(0)), 2), DomainError);
}

namespace {

// Blue exactly between A = [0, a) and B = [a, a + b) when `complete`, else nowhere.
TwoColoring bipartite(std::size_t a, std::size_t b, bool complete) {
  ColoringBuilder builder(a + b);
  if (complete) {
    for (Vertex i = 0; i < a; ++i) {
      for (Vertex j = a; j < a + b; ++j) builder.set(i, j, Color::Blue);
    }
  }
  return builder.build();
}

std::uint64_t brute_tuples(const TwoColoring& g, const VertexSet& a, const VertexSet& b, std::size_t k, Color c,
                           const Rational& zeta) {
  const auto bm = b.members();
  std::uint64_t count = 0;
  oracle::for_each_subset(bm.size(), k, [&](const std::vector<Vertex>& idx) {
    std::uint64_t common = 0;
    a.for_each([&](Vertex v) {
      bool all = true;
      for (auto i : idx) all = all && g.color(v, bm[i]) == c;
      common += all;
    });
    count += Rational(common) >= zeta * static_cast<long long>(a.count());
  });
  return count;
}

}  // namespace

TEST_CASE("common_neighbor_tuples") {
  VertexSet a = VertexSet::range(14, 0, 8), b = VertexSet::range(14, 8, 14);
  CHECK(common_neighbor_tuples(bipartite(8, 6, true), a, b, 3, Color::Blue, Rational(1)) == 20);
  CHECK(common_neighbor_tuples(bipartite(8, 6, false), a, b, 3, Color::Blue, Rational(1, 8)) == 0);
  CHECK_THROWS_AS(common_neighbor_tuples(bipartite(8, 6, true), a, a, 2, Color::Blue, Rational(1)), DomainError);

  auto g = random_coloring(32, Rational(1, 2), 5);
  VertexSet a2 = VertexSet::range(32, 0, 16), b2 = VertexSet::range(32, 16, 32);
  const Rational zeta(1, 64);
  const auto count = common_neighbor_tuples(g, a2, b2, 2, Color::Blue, zeta);
  CHECK(count == brute_tuples(g, a2, b2, 2, Color::Blue, zeta));
  CHECK(Rational(count) >= zeta * 120);

  auto big = random_coloring(80, Rational(1, 2), 5);
  CHECK_THROWS_AS(common_neighbor_tuples(big, VertexSet::range(80, 0, 10), VertexSet::range(80, 10, 80), 6,
                                         Color::Blue, Rational(1, 2), 1000),
                  InconclusiveError);
}

TEST_CASE("markov_floor_check") {
  auto k10 = spectrum(all_blue(10), Color::Blue, 2);
  CHECK(markov_floor_check(k10, Rational(4, 5), Rational(1, 2), Rational(45, 100)));
  auto kp = spectrum(balanced_kpartite(2, 6).coloring, Color::Blue, 2);
  CHECK(markov_floor_check(kp, Rational(1, 3), Rational(1, 6), Rational(30, 144)));
  CHECK_THROWS_AS(markov_floor_check(kp, Rational(1, 2), Rational(1, 6), Rational(30, 144)), PreconditionError);
  CHECK_THROWS_AS(markov_floor_check(kp, Rational(1, 3), Rational(1, 6), Rational(31, 144)), PreconditionError);
  CHECK_THROWS_AS(markov_floor_check(kp, Rational(1, 3), Rational(1, 2), Rational(30, 144)), PreconditionError);
}

TEST_CASE("counting_report") {
  auto k9 = all_blue(9);
  std::vector<VertexSet> thirds{VertexSet::range(9, 0, 3), VertexSet::range(9, 3, 6), VertexSet::range(9, 6, 9)};
  auto r = counting_report(k9, thirds, Color::Blue, Rational(0));
  CHECK(r.exact == 27);
  CHECK(r.predicted == 27);
  CHECK(r.within);

  auto kp = balanced_kpartite(2, 6);
  auto z = counting_report(kp.coloring, kp.partition.parts, Color::Blue, Rational(0));
  CHECK(z.exact == 0);
  CHECK(z.predicted == 0);

  auto g = random_coloring(300, Rational(1, 2), 3);
  std::vector<VertexSet> parts{VertexSet::range(300, 0, 100), VertexSet::range(300, 100, 200),
                               VertexSet::range(300, 200, 300)};
  auto q = counting_report(g, parts, Color::Blue, Rational(1, 20));
  CHECK(q.within);
  // labeled triangles across the parts, counted directly
  std::uint64_t direct = 0;
  for (Vertex x = 0; x < 100; ++x) {
    for (Vertex y = 100; y < 200; ++y) {
      if (!g.is_blue(x, y)) continue;
      direct += (g.neighbors(x, Color::Blue) & g.neighbors(y, Color::Blue) & parts[2]).count();
    }
  }
  CHECK(q.exact == direct);
}
