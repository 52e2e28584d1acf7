#include <doctest.h>

#include <algorithm>
#include <fstream>
#include <numeric>

#include "booklab/constructions.hpp"
#include "booklab/error.hpp"
#include "booklab/kcg_io.hpp"
#include "booklab/splitmix.hpp"
#include "support.hpp"

using namespace booklab;
using testing_support::all_blue;

TEST_CASE("build colors exactly the listed pairs blue") {
  auto tri = build(3, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(tri.edge_count(Color::Red) == 0);
  CHECK(tri.edge_count(Color::Blue) == 3);

  auto single = build(2, {});
  CHECK(single.color(0, 1) == Color::Red);

  auto one = build(4, {{0, 1}});
  auto all = VertexSet::full(4);
  CHECK(pair_count(one, all, all, Color::Blue) / 2 == 1);
  CHECK(pair_count(one, all, all, Color::Red) / 2 == 5);
}

TEST_CASE("build rejects bad pairs") {
  CHECK_THROWS_AS(build(3, {{0, 3}}), DomainError);
  CHECK_THROWS_AS(build(3, {{1, 1}}), DomainError);
  CHECK_THROWS_AS(build(0, {}), DomainError);
  CHECK_THROWS_WITH(build(3, {{2, 2}}), doctest::Contains("self-loop"));
  CHECK_THROWS_WITH(build(3, {{0, 5}}), doctest::Contains("out of range"));
}

TEST_CASE("neighbors") {
  auto k4 = all_blue(4);
  CHECK(k4.neighbors(0, Color::Blue).members() == std::vector<Vertex>{1, 2, 3});
  CHECK(k4.neighbors(0, Color::Red).empty());
  auto g = build(3, {{0, 1}});
  CHECK(g.neighbors(1, Color::Blue).members() == std::vector<Vertex>{0});
  CHECK_THROWS_AS(g.neighbors(3, Color::Blue), DomainError);
}

TEST_CASE("pair_count counts ordered pairs off the diagonal") {
  auto k4 = all_blue(4);
  VertexSet lo(4, {0, 1}), hi(4, {2, 3});
  CHECK(pair_count(k4, lo, hi, Color::Blue) == 4);
  CHECK(pair_count(k4, lo, lo, Color::Blue) == 2);

  auto kp = balanced_kpartite(2, 6);
  CHECK(pair_count(kp.coloring, kp.partition.parts[0], kp.partition.parts[1], Color::Blue) == 0);
}

TEST_CASE("density") {
  auto k4 = all_blue(4);
  VertexSet lo(4, {0, 1}), hi(4, {2, 3});
  CHECK(density(k4, lo, hi, Color::Blue) == 1);
  CHECK(density(k4, lo, hi, Color::Red) == 0);
  CHECK_THROWS_AS(density(k4, VertexSet(4), hi, Color::Blue), DomainError);
}

TEST_CASE("density of random disjoint 500-sets is near p") {
  auto g = random_coloring(2000, Rational(1, 2), 7);
  std::vector<Vertex> order(2000);
  std::iota(order.begin(), order.end(), Vertex{0});
  SplitMix64 rng(99);
  std::shuffle(order.begin(), order.end(), rng);
  VertexSet x(2000, std::span<const Vertex>(order.data(), 500));
  VertexSet y(2000, std::span<const Vertex>(order.data() + 500, 500));
  const double d = to_double(density(g, x, y, Color::Blue));
  CHECK(d == doctest::Approx(0.5).epsilon(0.1));
}

TEST_CASE("properties on random colorings") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const std::size_t n = 5 + seed % 17;
    auto g = random_coloring(n, Rational(seed % 5 + 1, 7), seed);
    SplitMix64 rng(seed * 31);
    VertexSet x(n), y(n);
    for (Vertex v = 0; v < n; ++v) {
      if (rng.below(2)) x.insert(v);
      if (rng.below(2)) y.insert(v);
    }
    const auto overlap = (x & y).count();
    CHECK(pair_count(g, x, y, Color::Blue) + pair_count(g, x, y, Color::Red) == x.count() * y.count() - overlap);
    CHECK(pair_count(g, x, y, Color::Blue) == pair_count(g, y, x, Color::Blue));
    for (Vertex v = 0; v < n; ++v) {
      const auto& b = g.neighbors(v, Color::Blue);
      const auto& r = g.neighbors(v, Color::Red);
      CHECK_FALSE(b.intersects(r));
      CHECK((b | r).count() == n - 1);
      CHECK_FALSE((b | r).contains(v));
    }
    CHECK(from_kcg(to_kcg(g)) == g);
    CHECK(g.swapped().swapped() == g);
  }
  CHECK(opposite(opposite(Color::Red)) == Color::Red);
}

TEST_CASE("kcg format") {
  auto tri = all_blue(3);
  CHECK(to_kcg(tri) == "kcg 1\n3\n11\n1\n");
  auto path = testing_support::scratch("tri.kcg");
  save(tri, path);
  CHECK(load(path) == tri);

  auto g = random_coloring(100, Rational(1, 2), 42);
  auto path2 = testing_support::scratch("r100.kcg");
  save(g, path2);
  auto back = load(path2);
  CHECK(back == g);
  CHECK(back.edge_count(Color::Blue) == g.edge_count(Color::Blue));
  CHECK(to_kcg(back) == to_kcg(g));

  CHECK_THROWS_WITH_AS(from_kcg("kcg 1\n4\n111\n1\n"), doctest::Contains("row length mismatch"), FormatError);
  CHECK_THROWS_WITH_AS(from_kcg("kcg 2\n2\n1\n"), doctest::Contains("malformed header"), FormatError);
  CHECK_THROWS_WITH_AS(from_kcg("kcg 1\n0\n"), doctest::Contains("vertex count < 1"), FormatError);
  CHECK_THROWS_AS(from_kcg("kcg 1\n2\n2\n"), FormatError);
  CHECK_THROWS_AS(from_kcg("kcg 1\n2\n1\n0\n"), FormatError);
  CHECK(from_kcg("kcg 1\n1\n").size() == 1);
  CHECK_THROWS_WITH_AS(load(testing_support::scratch("does-not-exist.kcg")), doctest::Contains("missing input file"),
                       DomainError);
}

TEST_CASE("rationals") {
  CHECK(parse_rational("3/5") == Rational(3, 5));
  CHECK(parse_rational("6/10") == Rational(3, 5));
  CHECK(parse_rational("0.55") == Rational(11, 20));
  CHECK(parse_rational("-2") == Rational(-2));
  CHECK(to_string(Rational(9, 10)) == "9/10");
  CHECK(to_string(Rational(2)) == "2/1");
  CHECK_THROWS_WITH_AS(parse_rational("1/0"), doctest::Contains("malformed rational"), DomainError);
  CHECK_THROWS_AS(parse_rational("a/b"), DomainError);
  CHECK_THROWS_AS(parse_rational(""), DomainError);
}
