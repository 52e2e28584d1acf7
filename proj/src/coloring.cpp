#include "booklab/coloring.hpp"

#include <string>

#include "booklab/error.hpp"

namespace booklab {

std::string_view to_string(Color c) { return c == Color::Blue ? "blue" : "red"; }

Color parse_color(std::string_view text) {
  if (text == "blue") return Color::Blue;
  if (text == "red") return Color::Red;
  throw DomainError("unknown color '" + std::string(text) + "' (expected red or blue)");
}

// ---------------------------------------------------------------------------
// VertexSet

VertexSet::VertexSet(std::size_t universe, std::initializer_list<Vertex> members) : VertexSet(universe) {
  for (Vertex v : members) insert(v);
}

VertexSet::VertexSet(std::size_t universe, std::span<const Vertex> members) : VertexSet(universe) {
  for (Vertex v : members) insert(v);
}

VertexSet VertexSet::full(std::size_t universe) { return range(universe, 0, universe); }

VertexSet VertexSet::range(std::size_t universe, Vertex first, Vertex last) {
  if (first > last || last > universe) throw DomainError("vertex range outside universe");
  VertexSet s(universe);
  for (Vertex v = first; v < last; ++v) s.insert(v);
  return s;
}

void VertexSet::insert(Vertex v) {
  if (v >= universe_) {
    throw DomainError("vertex " + std::to_string(v) + " out of range [0," + std::to_string(universe_) + ")");
  }
  words_[v >> 6] |= std::uint64_t{1} << (v & 63);
}

void VertexSet::erase(Vertex v) {
  if (v < universe_) words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
}

std::size_t VertexSet::count() const {
  std::size_t total = 0;
  for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

bool VertexSet::empty() const {
  for (auto w : words_) {
    if (w != 0) return false;
  }
  return true;
}

static void check_same_universe(const VertexSet& a, const VertexSet& b) {
  if (a.universe() != b.universe()) throw DomainError("vertex sets over different universes");
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
  check_same_universe(*this, other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
  check_same_universe(*this, other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) {
  check_same_universe(*this, other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

VertexSet VertexSet::complement() const { return full(universe_) - *this; }

std::size_t VertexSet::intersection_count(const VertexSet& other) const {
  check_same_universe(*this, other);
  std::size_t total = 0;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    total += static_cast<std::size_t>(std::popcount(words_[i] & other.words_[i]));
  }
  return total;
}

bool VertexSet::intersects(const VertexSet& other) const {
  check_same_universe(*this, other);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & other.words_[i]) != 0) return true;
  }
  return false;
}

std::vector<Vertex> VertexSet::members() const {
  std::vector<Vertex> out;
  out.reserve(count());
  for_each([&](Vertex v) { out.push_back(v); });
  return out;
}

// ---------------------------------------------------------------------------
// TwoColoring

TwoColoring::TwoColoring(std::vector<VertexSet> blue, std::vector<VertexSet> red)
    : n_(blue.size()), blue_(std::move(blue)), red_(std::move(red)) {}

Color TwoColoring::color(Vertex i, Vertex j) const {
  if (i >= n_ || j >= n_ || i == j) {
    throw DomainError("no edge (" + std::to_string(i) + "," + std::to_string(j) + ") in K_" + std::to_string(n_));
  }
  return blue_[i].contains(j) ? Color::Blue : Color::Red;
}

const VertexSet& TwoColoring::neighbors(Vertex v, Color c) const {
  if (v >= n_) throw DomainError("vertex " + std::to_string(v) + " out of range");
  return c == Color::Blue ? blue_[v] : red_[v];
}

std::uint64_t TwoColoring::edge_count(Color c) const {
  std::uint64_t twice = 0;
  for (const auto& row : (c == Color::Blue ? blue_ : red_)) twice += row.count();
  return twice / 2;
}

TwoColoring TwoColoring::swapped() const { return TwoColoring(red_, blue_); }

// ---------------------------------------------------------------------------
// ColoringBuilder

ColoringBuilder::ColoringBuilder(std::size_t n) : n_(n) {
  if (n < 1) throw DomainError("vertex count must be >= 1");
  blue_.assign(n, VertexSet(n));
  red_.reserve(n);
  for (Vertex v = 0; v < n; ++v) {
    VertexSet row = VertexSet::full(n);
    row.erase(v);
    red_.push_back(std::move(row));
  }
}

ColoringBuilder::ColoringBuilder(const TwoColoring& from)
    : n_(from.size()), blue_(from.blue_), red_(from.red_) {}

void ColoringBuilder::check_pair(Vertex i, Vertex j) const {
  if (i >= n_ || j >= n_) {
    throw DomainError("vertex out of range in pair (" + std::to_string(i) + "," + std::to_string(j) + ")");
  }
  if (i == j) throw DomainError("self-loop pair (" + std::to_string(i) + "," + std::to_string(i) + ")");
}

void ColoringBuilder::set(Vertex i, Vertex j, Color c) {
  check_pair(i, j);
  if (c == Color::Blue) {
    blue_[i].insert(j), blue_[j].insert(i);
    red_[i].erase(j), red_[j].erase(i);
  } else {
    red_[i].insert(j), red_[j].insert(i);
    blue_[i].erase(j), blue_[j].erase(i);
  }
}

void ColoringBuilder::flip(Vertex i, Vertex j) { set(i, j, opposite(color(i, j))); }

Color ColoringBuilder::color(Vertex i, Vertex j) const {
  check_pair(i, j);
  return blue_[i].contains(j) ? Color::Blue : Color::Red;
}

TwoColoring ColoringBuilder::build() const { return TwoColoring(blue_, red_); }

TwoColoring build(std::size_t n, std::span<const Edge> blue_edges) {
  ColoringBuilder b(n);
  for (const auto& [i, j] : blue_edges) b.set(i, j, Color::Blue);
  return b.build();
}

// ---------------------------------------------------------------------------

std::uint64_t pair_count(const TwoColoring& g, const VertexSet& x, const VertexSet& y, Color c) {
  if (x.universe() != g.size() || y.universe() != g.size()) {
    throw DomainError("vertex set universe does not match coloring size");
  }
  std::uint64_t total = 0;
  x.for_each([&](Vertex v) { total += g.neighbors(v, c).intersection_count(y); });
  return total;
}

Rational density(const TwoColoring& g, const VertexSet& x, const VertexSet& y, Color c) {
  if (x.empty() || y.empty()) throw DomainError("density of an empty vertex set is undefined");
  auto e = pair_count(g, x, y, c);
  return Rational(BigInt(e), BigInt(x.count()) * y.count());
}

}  // namespace booklab
