#pragma once

#include <filesystem>
#include <string>

#include "booklab/coloring.hpp"
#include "booklab/rational.hpp"

namespace testing_support {

inline booklab::TwoColoring all_blue(std::size_t n) {
  booklab::ColoringBuilder b(n);
  for (booklab::Vertex i = 0; i < n; ++i) {
    for (booklab::Vertex j = i + 1; j < n; ++j) b.set(i, j, booklab::Color::Blue);
  }
  return b.build();
}

inline booklab::TwoColoring all_red(std::size_t n) { return booklab::ColoringBuilder(n).build(); }

inline booklab::TwoColoring five_cycle() { return booklab::build(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}}); }

inline std::filesystem::path scratch(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / "booklab-tests";
  std::filesystem::create_directories(dir);
  return dir / name;
}

}  // namespace testing_support
