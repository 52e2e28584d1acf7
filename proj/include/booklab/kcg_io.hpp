#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "booklab/coloring.hpp"

namespace booklab {

// kcg v1 text format:
//   kcg 1
//   <n>
//   n-1 rows; row i (1-based) holds n-i chars of {0,1} for edges (i-1, j), j = i..n-1.
// '1' is blue, '0' is red, LF line endings.

std::string to_kcg(const TwoColoring& g);
/// Throws FormatError ("malformed header", "row length mismatch", "vertex count < 1", ...).
TwoColoring from_kcg(std::string_view text);

void save(const TwoColoring& g, const std::filesystem::path& path);
TwoColoring load(const std::filesystem::path& path);

}  // namespace booklab
