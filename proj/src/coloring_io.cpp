#include "equicolor/coloring_io.hpp"

#include <algorithm>
#include <charconv>
#include <vector>

namespace equicolor {

namespace {

constexpr std::string_view kMagic = "equicolor v1";

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    const std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) {
      lines.push_back(text.substr(start));
      break;
    }
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  return lines;
}

// Consumes a non-negative decimal integer from the front of `s`.
bool take_int(std::string_view& s, Int& value) {
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr == s.data() || value < 0) return false;
  s.remove_prefix(static_cast<std::size_t>(ptr - s.data()));
  return true;
}

bool take_literal(std::string_view& s, std::string_view lit) {
  if (!s.starts_with(lit)) return false;
  s.remove_prefix(lit.size());
  return true;
}

}  // namespace

std::string write_coloring(const Coloring& coloring) {
  std::string out;
  out += kMagic;
  out += '\n';
  out += "m=" + std::to_string(coloring.m) + " n=" + std::to_string(coloring.n) +
         " k=" + std::to_string(coloring.k()) + "\n";
  for (std::size_t c = 0; c < coloring.classes.size(); ++c) {
    std::vector<Vertex> members = coloring.classes[c];
    std::sort(members.begin(), members.end());
    out += std::to_string(c + 1) + ":";
    for (const Vertex& v : members) {
      out += " (" + std::to_string(v.row) + "," + std::to_string(v.col) + ")";
    }
    out += '\n';
  }
  return out;
}

Coloring parse_coloring(std::string_view text) {
  const auto lines = split_lines(text);
  if (lines.empty() || lines[0] != kMagic) {
    throw ParseError(1, "expected header \"" + std::string(kMagic) + "\"");
  }
  if (lines.size() < 2) throw ParseError(2, "missing dimension line");

  Coloring coloring;
  Int k = 0;
  std::string_view dims = lines[1];
  if (!take_literal(dims, "m=") || !take_int(dims, coloring.m) || !take_literal(dims, " n=") ||
      !take_int(dims, coloring.n) || !take_literal(dims, " k=") || !take_int(dims, k) ||
      !dims.empty()) {
    throw ParseError(2, "expected \"m=<m> n=<n> k=<k>\"");
  }
  if (coloring.m < 1 || coloring.n < 1) throw ParseError(2, "m and n must be positive");
  if (k < 1) throw ParseError(2, "k must be positive");
  if (static_cast<Int>(lines.size()) - 2 != k) {
    throw ParseError(std::min<std::size_t>(lines.size(), static_cast<std::size_t>(k) + 2) + 1,
                     "expected " + std::to_string(k) + " class lines, found " +
                         std::to_string(lines.size() - 2));
  }

  coloring.classes.reserve(static_cast<std::size_t>(k));
  for (Int c = 1; c <= k; ++c) {
    const std::size_t line_no = static_cast<std::size_t>(c) + 2;
    std::string_view s = lines[line_no - 1];
    Int index = 0;
    if (!take_int(s, index) || !take_literal(s, ":")) throw ParseError(line_no, "expected \"<index>:\"");
    if (index != c) {
      throw ParseError(line_no, "class index " + std::to_string(index) + " out of order, expected " +
                                    std::to_string(c));
    }
    std::vector<Vertex> members;
    while (!s.empty()) {
      Vertex v;
      if (!take_literal(s, " (") || !take_int(s, v.row) || !take_literal(s, ",") ||
          !take_int(s, v.col) || !take_literal(s, ")")) {
        throw ParseError(line_no, "malformed vertex list");
      }
      members.push_back(v);
    }
    coloring.classes.push_back(std::move(members));
  }
  return coloring;
}

}  // namespace equicolor
