#include "booklab/kcg_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <string>

#include "booklab/error.hpp"

namespace booklab {

std::string to_kcg(const TwoColoring& g) {
  const std::size_t n = g.size();
  std::string out = "kcg 1\n" + std::to_string(n) + "\n";
  out.reserve(out.size() + n * (n + 1) / 2);
  for (Vertex i = 0; i + 1 < n; ++i) {
    const auto& blue = g.neighbors(i, Color::Blue);
    for (Vertex j = i + 1; j < n; ++j) out.push_back(blue.contains(j) ? '1' : '0');
    out.push_back('\n');
  }
  return out;
}

namespace {

std::string_view next_line(std::string_view& rest, bool& ok) {
  auto nl = rest.find('\n');
  if (nl == std::string_view::npos) {
    ok = false;
    auto line = rest;
    rest = {};
    return line;
  }
  ok = true;
  auto line = rest.substr(0, nl);
  rest.remove_prefix(nl + 1);
  return line;
}

}  // namespace

TwoColoring from_kcg(std::string_view text) {
  bool ok = false;
  auto header = next_line(text, ok);
  if (!ok || header != "kcg 1") throw FormatError("malformed header: expected 'kcg 1'");

  auto count_line = next_line(text, ok);
  long long n = 0;
  auto [ptr, ec] = std::from_chars(count_line.data(), count_line.data() + count_line.size(), n);
  if (!ok || ec != std::errc{} || ptr != count_line.data() + count_line.size()) {
    throw FormatError("malformed header: vertex count line is not a decimal integer");
  }
  if (n < 1) throw FormatError("vertex count < 1");

  const auto size = static_cast<std::size_t>(n);
  ColoringBuilder b(size);
  for (Vertex i = 0; i + 1 < size; ++i) {
    auto row = next_line(text, ok);
    if (!ok || row.size() != size - i - 1) {
      throw FormatError("row length mismatch at row " + std::to_string(i + 1) + ": expected " +
                        std::to_string(size - i - 1) + " characters");
    }
    for (std::size_t t = 0; t < row.size(); ++t) {
      if (row[t] == '1') {
        b.set(i, i + 1 + t, Color::Blue);
      } else if (row[t] != '0') {
        throw FormatError("invalid character in row " + std::to_string(i + 1));
      }
    }
  }
  if (!text.empty()) throw FormatError("trailing data after last row");
  return b.build();
}

void save(const TwoColoring& g, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DomainError("cannot open '" + path.string() + "' for writing");
  out << to_kcg(g);
  if (!out) throw DomainError("write failed for '" + path.string() + "'");
}

TwoColoring load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("missing input file '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return from_kcg(buffer.str());
}

}  // namespace booklab
