#include "booklab/detail/canonical.hpp"

#include <algorithm>
#include <tuple>
#include <vector>

namespace booklab::detail {

namespace {

using Cell = std::vector<std::uint8_t>;

class Canonizer {
 public:
  explicit Canonizer(const SmallGraph& g) : g_(g) {}

  Code run() {
    Cell all(g_.n);
    for (std::size_t v = 0; v < g_.n; ++v) all[v] = static_cast<std::uint8_t>(v);
    std::vector<Cell> cells;
    if (g_.n > 0) cells.push_back(std::move(all));
    descend(std::move(cells));
    return best_;
  }

 private:
  // Split cells by neighbor counts into every current cell until stable. Splits are
  // ordered by signature, so the result depends only on the isomorphism type.
  void refine(std::vector<Cell>& cells) const {
    for (bool changed = true; changed;) {
      changed = false;
      std::vector<std::uint32_t> masks;
      for (const auto& cell : cells) {
        std::uint32_t m = 0;
        for (auto v : cell) m |= 1U << v;
        masks.push_back(m);
      }
      std::vector<Cell> next;
      next.reserve(g_.n);
      for (const auto& cell : cells) {
        if (cell.size() == 1) {
          next.push_back(cell);
          continue;
        }
        std::vector<std::pair<std::vector<std::uint8_t>, std::uint8_t>> keyed;
        for (auto v : cell) {
          std::vector<std::uint8_t> sig(masks.size());
          for (std::size_t c = 0; c < masks.size(); ++c) {
            sig[c] = static_cast<std::uint8_t>(std::popcount(g_.adj[v] & masks[c]));
          }
          keyed.emplace_back(std::move(sig), v);
        }
        std::stable_sort(keyed.begin(), keyed.end(),
                         [](const auto& a, const auto& b) { return a.first < b.first; });
        Cell group{keyed[0].second};
        for (std::size_t i = 1; i < keyed.size(); ++i) {
          if (keyed[i].first != keyed[i - 1].first) {
            next.push_back(std::move(group));
            group.clear();
            changed = true;
          }
          group.push_back(keyed[i].second);
        }
        next.push_back(std::move(group));
      }
      cells = std::move(next);
    }
  }

  void descend(std::vector<Cell> cells) {
    refine(cells);
    auto target = std::find_if(cells.begin(), cells.end(), [](const Cell& c) { return c.size() > 1; });
    if (target == cells.end()) {
      leaf(cells);
      return;
    }
    const std::size_t index = static_cast<std::size_t>(target - cells.begin());
    const Cell cell = *target;
    std::vector<std::uint8_t> tried;
    for (auto v : cell) {
      // swapping twins is an automorphism fixing everything individualized so far
      bool twin = false;
      for (auto u : tried) {
        const std::uint32_t strip = (1U << u) | (1U << v);
        if ((g_.adj[u] & ~strip) == (g_.adj[v] & ~strip)) {
          twin = true;
          break;
        }
      }
      if (twin) continue;
      tried.push_back(v);
      std::vector<Cell> child;
      child.reserve(cells.size() + 1);
      for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i != index) {
          child.push_back(cells[i]);
          continue;
        }
        child.push_back(Cell{v});
        Cell rest;
        for (auto u : cell) {
          if (u != v) rest.push_back(u);
        }
        child.push_back(std::move(rest));
      }
      descend(std::move(child));
    }
  }

  void leaf(const std::vector<Cell>& cells) {
    std::array<std::uint8_t, kMaxSmallVertices> label{};
    for (std::size_t i = 0; i < cells.size(); ++i) label[cells[i][0]] = static_cast<std::uint8_t>(i);
    Code code{};
    for (std::size_t a = 0; a < g_.n; ++a) {
      for (std::uint32_t rest = g_.adj[a] & ((1U << a) - 1); rest; rest &= rest - 1) {
        const std::size_t b = static_cast<std::size_t>(std::countr_zero(rest));
        const std::size_t i = std::min(label[a], label[b]), j = std::max(label[a], label[b]);
        set_bit(code, pair_bit(i, j));
      }
    }
    // compare high word first so the order is numeric on the 128-bit value
    if (!have_ || std::tie(code[1], code[0]) > std::tie(best_[1], best_[0])) {
      best_ = code;
      have_ = true;
    }
  }

  const SmallGraph& g_;
  Code best_{};
  bool have_ = false;
};

}  // namespace

Code canonical_code(const SmallGraph& g) { return Canonizer(g).run(); }

SmallGraph decode(const Code& code, std::size_t n) {
  SmallGraph g;
  g.n = n;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (test_bit(code, pair_bit(i, j))) g.add_edge(i, j);
    }
  }
  return g;
}

}  // namespace booklab::detail
